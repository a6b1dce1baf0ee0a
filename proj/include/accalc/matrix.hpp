/*
 Copyright 2026 The accalc Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#ifndef ACCALC_MATRIX_HPP
#define ACCALC_MATRIX_HPP

#include <cassert>
#include <cstddef>
#include <vector>

namespace accalc {

/// Small dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T{}) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) noexcept {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const T& operator()(std::size_t r, std::size_t c) const noexcept {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

struct LinearSolution {
  std::vector<double> x;
  /// Infinity-norm condition number estimate ||A|| ||A^-1||.
  double condition = 0.0;
};

/// Gaussian elimination with partial pivoting. Throws NumericalError when a
/// pivot vanishes; the caller judges the returned condition estimate.
LinearSolution solve_linear(Matrix<double> a, std::vector<double> b);

}  // namespace accalc

#endif  // ACCALC_MATRIX_HPP
