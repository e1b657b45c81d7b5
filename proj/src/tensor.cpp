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
#include "vmq/tensor.hpp"

#include <cstring>
#include <numeric>

namespace vmq {

const char* dtype_name(DType dtype) {
  switch (dtype) {
    case DType::kF32:
      return "f32";
    case DType::kI8:
      return "i8";
    case DType::kI32:
      return "i32";
    case DType::kU8:
      return "u8";
  }
  return "?";
}

std::optional<DType> dtype_from_name(const std::string& name) {
  if (name == "f32") return DType::kF32;
  if (name == "i8") return DType::kI8;
  if (name == "i32") return DType::kI32;
  if (name == "u8") return DType::kU8;
  return std::nullopt;
}

size_t dtype_size(DType dtype) {
  switch (dtype) {
    case DType::kF32:
    case DType::kI32:
      return 4;
    case DType::kI8:
    case DType::kU8:
      return 1;
  }
  return 0;
}

namespace {

int64_t shape_numel(const std::vector<int64_t>& shape) {
  int64_t n = 1;
  for (int64_t d : shape) {
    if (d < 0) throw DimensionError("negative extent in tensor shape");
    n *= d;
  }
  return n;
}

}  // namespace

Tensor::Tensor(std::vector<int64_t> shape, Storage data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  check_size();
}

void Tensor::check_size() const {
  int64_t n = shape_numel(shape_);
  int64_t stored = std::visit([](const auto& v) { return static_cast<int64_t>(v.size()); }, data_);
  if (n != stored) {
    throw DimensionError("tensor shape covers " + std::to_string(n) + " elements but storage has " +
                         std::to_string(stored));
  }
}

Tensor Tensor::zeros(DType dtype, std::vector<int64_t> shape) {
  size_t n = static_cast<size_t>(shape_numel(shape));
  switch (dtype) {
    case DType::kF32:
      return Tensor(std::move(shape), std::vector<float>(n, 0.0f));
    case DType::kI8:
      return Tensor(std::move(shape), std::vector<int8_t>(n, 0));
    case DType::kI32:
      return Tensor(std::move(shape), std::vector<int32_t>(n, 0));
    case DType::kU8:
      return Tensor(std::move(shape), std::vector<uint8_t>(n, 0));
  }
  throw Error("unreachable dtype");
}

Tensor Tensor::from_matrix(const MatF& m) {
  std::vector<float> data(m.data(), m.data() + m.size());
  return Tensor({m.rows(), m.cols()}, std::move(data));
}

Tensor Tensor::from_matrix(const MatI& m) {
  std::vector<int32_t> data(m.data(), m.data() + m.size());
  return Tensor({m.rows(), m.cols()}, std::move(data));
}

Tensor Tensor::from_matrix(const MatI8& m) {
  std::vector<int8_t> data(m.data(), m.data() + m.size());
  return Tensor({m.rows(), m.cols()}, std::move(data));
}

Tensor Tensor::from_vector(const VecF& v) {
  std::vector<float> data(v.data(), v.data() + v.size());
  return Tensor({v.size()}, std::move(data));
}

Tensor Tensor::from_vector(const VecI& v) {
  std::vector<int32_t> data(v.data(), v.data() + v.size());
  return Tensor({v.size()}, std::move(data));
}

Tensor Tensor::scalar(float v) { return Tensor({1}, std::vector<float>{v}); }

DType Tensor::dtype() const {
  switch (data_.index()) {
    case 0:
      return DType::kF32;
    case 1:
      return DType::kI8;
    case 2:
      return DType::kI32;
    default:
      return DType::kU8;
  }
}

int64_t Tensor::numel() const { return shape_numel(shape_); }

std::vector<float>& Tensor::f32() { return std::get<std::vector<float>>(data_); }
const std::vector<float>& Tensor::f32() const { return std::get<std::vector<float>>(data_); }
std::vector<int8_t>& Tensor::i8() { return std::get<std::vector<int8_t>>(data_); }
const std::vector<int8_t>& Tensor::i8() const { return std::get<std::vector<int8_t>>(data_); }
std::vector<int32_t>& Tensor::i32() { return std::get<std::vector<int32_t>>(data_); }
const std::vector<int32_t>& Tensor::i32() const { return std::get<std::vector<int32_t>>(data_); }
std::vector<uint8_t>& Tensor::u8() { return std::get<std::vector<uint8_t>>(data_); }
const std::vector<uint8_t>& Tensor::u8() const { return std::get<std::vector<uint8_t>>(data_); }

const void* Tensor::raw_data() const {
  return std::visit([](const auto& v) -> const void* { return v.data(); }, data_);
}

void* Tensor::raw_data() {
  return std::visit([](auto& v) -> void* { return v.data(); }, data_);
}

namespace {

void require_rank2(const Tensor& t) {
  if (t.rank() != 2) {
    throw DimensionError("expected rank-2 tensor, got rank " + std::to_string(t.rank()));
  }
}

}  // namespace

Eigen::Map<const MatF> Tensor::mat_f32() const {
  require_rank2(*this);
  return {f32().data(), dim(0), dim(1)};
}

Eigen::Map<MatF> Tensor::mat_f32() {
  require_rank2(*this);
  return {f32().data(), dim(0), dim(1)};
}

Eigen::Map<const MatI8> Tensor::mat_i8() const {
  require_rank2(*this);
  return {i8().data(), dim(0), dim(1)};
}

Eigen::Map<const MatI> Tensor::mat_i32() const {
  require_rank2(*this);
  return {i32().data(), dim(0), dim(1)};
}

Eigen::Map<const MatF> Tensor::sample_f32(int64_t s) const {
  if (rank() != 3) throw DimensionError("sample_f32 expects a rank-3 tensor");
  if (s < 0 || s >= dim(0)) throw DimensionError("sample index out of range");
  return {f32().data() + s * dim(1) * dim(2), dim(1), dim(2)};
}

MatF Tensor::to_matrix() const { return mat_f32(); }

VecF Tensor::to_vector() const {
  if (rank() != 1) throw DimensionError("to_vector expects a rank-1 tensor");
  return Eigen::Map<const VecF>(f32().data(), dim(0));
}

bool Tensor::same_bytes(const Tensor& other) const {
  if (dtype() != other.dtype() || shape_ != other.shape_) return false;
  return std::memcmp(raw_data(), other.raw_data(), nbytes()) == 0;
}

}  // namespace vmq
