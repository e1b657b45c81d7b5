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
#include "vmq/container.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include <json.hpp>

namespace vmq {

static_assert(std::endian::native == std::endian::little,
              "container payload I/O assumes a little-endian host");

namespace {

constexpr char kMagic[4] = {'V', 'M', 'Q', '1'};
constexpr size_t kAlign = 64;

size_t align_up(size_t n) { return (n + kAlign - 1) / kAlign * kAlign; }

void append_u64_le(std::string& out, uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

uint64_t read_u64_le(const unsigned char* p) {
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(p[i]) << (8 * i);
  return v;
}

}  // namespace

std::string encode_container(const TensorMap& tensors) {
  for (const auto& [name, t] : tensors) {
    if (name.empty()) throw PreconditionError("tensor name must be non-empty");
    (void)t;
  }

  std::string out;
  out.append(kMagic, 4);
  if (tensors.empty()) {
    append_u64_le(out, 0);
    return out;
  }

  nlohmann::json header = nlohmann::json::array();
  size_t offset = 0;
  for (const auto& [name, t] : tensors) {
    nlohmann::json entry;
    entry["name"] = name;
    entry["dtype"] = dtype_name(t.dtype());
    entry["shape"] = t.shape();
    entry["offset"] = offset;
    entry["nbytes"] = t.nbytes();
    header.push_back(std::move(entry));
    offset = align_up(offset + t.nbytes());
  }

  std::string header_text = header.dump();
  append_u64_le(out, header_text.size());
  out += header_text;
  out.resize(align_up(out.size()), '\0');

  size_t payload_start = out.size();
  out.resize(payload_start + offset, '\0');
  size_t off = 0;
  for (const auto& [name, t] : tensors) {
    std::memcpy(out.data() + payload_start + off, t.raw_data(), t.nbytes());
    off = align_up(off + t.nbytes());
  }
  return out;
}

TensorMap decode_container(const std::string& bytes) {
  const auto* data = reinterpret_cast<const unsigned char*>(bytes.data());
  if (bytes.size() < 12) throw DecodeError(DecodeCode::kTruncated, "container shorter than fixed header");
  if (std::memcmp(data, kMagic, 4) != 0) {
    throw DecodeError(DecodeCode::kBadMagic, "bad container magic (expected VMQ1)");
  }
  uint64_t header_len = read_u64_le(data + 4);
  if (header_len == 0) {
    return {};
  }
  if (12 + header_len > bytes.size()) {
    throw DecodeError(DecodeCode::kTruncated, "header text extends past end of file");
  }

  nlohmann::json header;
  try {
    header = nlohmann::json::parse(bytes.substr(12, header_len));
  } catch (const nlohmann::json::exception& e) {
    throw DecodeError(DecodeCode::kBadHeader, std::string("header is not valid JSON: ") + e.what());
  }
  if (!header.is_array()) throw DecodeError(DecodeCode::kBadHeader, "header must be a JSON array");

  size_t payload_start = align_up(12 + header_len);
  if (payload_start > bytes.size()) {
    throw DecodeError(DecodeCode::kTruncated, "padding extends past end of file");
  }
  size_t payload_size = bytes.size() - payload_start;

  TensorMap result;
  for (const auto& entry : header) {
    std::string name, dtype_str;
    std::vector<int64_t> shape;
    uint64_t offset = 0, nbytes = 0;
    try {
      name = entry.at("name").get<std::string>();
      dtype_str = entry.at("dtype").get<std::string>();
      shape = entry.at("shape").get<std::vector<int64_t>>();
      offset = entry.at("offset").get<uint64_t>();
      nbytes = entry.at("nbytes").get<uint64_t>();
    } catch (const nlohmann::json::exception& e) {
      throw DecodeError(DecodeCode::kBadHeader, std::string("malformed header entry: ") + e.what());
    }
    if (result.count(name)) {
      throw DecodeError(DecodeCode::kDuplicateName, "duplicate tensor name: " + name);
    }
    auto dtype = dtype_from_name(dtype_str);
    if (!dtype) {
      throw DecodeError(DecodeCode::kUnknownDtype, "unknown dtype '" + dtype_str + "' for tensor " + name);
    }
    if (offset % kAlign != 0) {
      throw DecodeError(DecodeCode::kBadLayout, "tensor " + name + " offset is not 64-byte aligned");
    }
    if (offset + nbytes > payload_size) {
      throw DecodeError(DecodeCode::kTruncated, "payload for tensor " + name + " extends past end of file");
    }
    Tensor t = Tensor::zeros(*dtype, shape);
    if (t.nbytes() != nbytes) {
      throw DecodeError(DecodeCode::kBadLayout, "tensor " + name + " nbytes does not match shape");
    }
    std::memcpy(t.raw_data(), bytes.data() + payload_start + offset, nbytes);
    result.emplace(name, std::move(t));
  }
  return result;
}

void save_container(const std::string& path, const TensorMap& tensors) {
  std::string bytes = encode_container(tensors);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open for writing: " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("write failed: " + path);
}

TensorMap load_container(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open: " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_container(bytes);
}

}  // namespace vmq
