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
#ifndef VMQ_TENSOR_HPP_
#define VMQ_TENSOR_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vmq/common.hpp"

namespace vmq {

enum class DType : uint8_t { kF32, kI8, kI32, kU8 };

const char* dtype_name(DType dtype);
std::optional<DType> dtype_from_name(const std::string& name);
size_t dtype_size(DType dtype);

// Dense n-dimensional array, row-major contiguous. The storage variant is the
// source of truth for the element type; `dtype()` is derived from it.
class Tensor {
 public:
  using Storage = std::variant<std::vector<float>, std::vector<int8_t>, std::vector<int32_t>,
                               std::vector<uint8_t>>;

  Tensor() = default;
  Tensor(std::vector<int64_t> shape, Storage data);

  static Tensor zeros(DType dtype, std::vector<int64_t> shape);
  static Tensor from_matrix(const MatF& m);
  static Tensor from_matrix(const MatI& m);
  static Tensor from_matrix(const MatI8& m);
  static Tensor from_vector(const VecF& v);
  static Tensor from_vector(const VecI& v);
  static Tensor scalar(float v);

  DType dtype() const;
  const std::vector<int64_t>& shape() const { return shape_; }
  int64_t numel() const;
  size_t nbytes() const { return static_cast<size_t>(numel()) * dtype_size(dtype()); }
  int64_t dim(size_t i) const { return shape_.at(i); }
  size_t rank() const { return shape_.size(); }

  std::vector<float>& f32();
  const std::vector<float>& f32() const;
  std::vector<int8_t>& i8();
  const std::vector<int8_t>& i8() const;
  std::vector<int32_t>& i32();
  const std::vector<int32_t>& i32() const;
  std::vector<uint8_t>& u8();
  const std::vector<uint8_t>& u8() const;

  const void* raw_data() const;
  void* raw_data();

  // 2-D Eigen views. Rank must be exactly 2.
  Eigen::Map<const MatF> mat_f32() const;
  Eigen::Map<MatF> mat_f32();
  Eigen::Map<const MatI8> mat_i8() const;
  Eigen::Map<const MatI> mat_i32() const;

  // Row-matrix view of sample `s` of a rank-3 [S x L x D] tensor.
  Eigen::Map<const MatF> sample_f32(int64_t s) const;

  MatF to_matrix() const;  // rank-2 f32 copy
  VecF to_vector() const;  // rank-1 f32 copy

  bool same_bytes(const Tensor& other) const;

 private:
  std::vector<int64_t> shape_;
  Storage data_;

  void check_size() const;
};

}  // namespace vmq

#endif  // VMQ_TENSOR_HPP_
