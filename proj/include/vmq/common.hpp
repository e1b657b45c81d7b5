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
#ifndef VMQ_COMMON_HPP_
#define VMQ_COMMON_HPP_

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace vmq {

// Row-major throughout: activation matrices are [tokens x channels].
template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatF = Mat<float>;
using MatI = Mat<int32_t>;
using MatI8 = Mat<int8_t>;
using MatU8 = Mat<uint8_t>;
using VecF = Vec<float>;
using VecI = Vec<int32_t>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

enum class DecodeCode {
  kBadMagic,
  kTruncated,
  kBadHeader,
  kDuplicateName,
  kUnknownDtype,
  kBadLayout,
  kMissingTensor,
  kVersionMismatch,
};

class DecodeError : public Error {
 public:
  DecodeError(DecodeCode code, const std::string& msg) : Error(msg), code_(code) {}
  DecodeCode code() const { return code_; }

 private:
  DecodeCode code_;
};

// Repo-wide rounding mode: round half away from zero.
inline float round_half_away(float v) {
  return std::copysign(std::floor(std::fabs(v) + 0.5f), v);
}

inline std::string shape_str(Eigen::Index rows, Eigen::Index cols) {
  return "[" + std::to_string(rows) + "x" + std::to_string(cols) + "]";
}

// Worker count from VMQ_THREADS (>= 1). Unset or invalid means 1.
int thread_count();

// Runs fn(i) for i in [0, n). Work is split into contiguous chunks so that
// results written to per-index slots are identical regardless of thread count.
void parallel_for(int64_t n, const std::function<void(int64_t)>& fn);

}  // namespace vmq

#endif  // VMQ_COMMON_HPP_
