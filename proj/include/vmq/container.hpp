/**
 * Copyright 2025 The vmquant Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef VMQ_CONTAINER_HPP_
#define VMQ_CONTAINER_HPP_

#include <map>
#include <string>

#include "vmq/tensor.hpp"

namespace vmq {

// "VMQ1" tensor container.
//
// Layout:
//   bytes 0..3    magic "VMQ1"
//   bytes 4..11   header length H, unsigned 64-bit little-endian
//   bytes 12..    UTF-8 JSON header: [{"name","dtype","shape","offset","nbytes"}, ...]
//   padding       zero bytes up to the next 64-byte boundary
//   payload       little-endian scalars, row-major; per-entry offsets are
//                 relative to the payload start and 64-byte aligned
//
// An empty map is saved as the bare 12-byte header (H = 0).
// Saving is deterministic: entries are laid out in name order.

using TensorMap = std::map<std::string, Tensor>;

void save_container(const std::string& path, const TensorMap& tensors);
TensorMap load_container(const std::string& path);

// Byte-buffer variants used by the file API and by round-trip tests.
std::string encode_container(const TensorMap& tensors);
TensorMap decode_container(const std::string& bytes);

}  // namespace vmq

#endif  // VMQ_CONTAINER_HPP_
