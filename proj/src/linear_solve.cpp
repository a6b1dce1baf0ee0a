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
#include <algorithm>
#include <cmath>
#include <numeric>

#include "accalc/error.hpp"
#include "accalc/matrix.hpp"

namespace accalc {

namespace {

double inf_norm(const Matrix<double>& a) {
  double norm = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    double row = 0.0;
    for (std::size_t c = 0; c < a.cols(); ++c) row += std::abs(a(r, c));
    norm = std::max(norm, row);
  }
  return norm;
}

}  // namespace

LinearSolution solve_linear(Matrix<double> a, std::vector<double> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw InvalidInput("linear system dimensions do not match");
  const double norm_a = inf_norm(a);

  // LU with row permutation; the factors overwrite a.
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t r = k + 1; r < n; ++r)
      if (std::abs(a(r, k)) > std::abs(a(pivot, k))) pivot = r;
    if (a(pivot, k) == 0.0 || !std::isfinite(a(pivot, k))) throw NumericalError("singular linear system");
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(pivot, c));
      std::swap(perm[k], perm[pivot]);
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      const double f = a(r, k) / a(k, k);
      a(r, k) = f;
      for (std::size_t c = k + 1; c < n; ++c) a(r, c) -= f * a(k, c);
    }
  }

  auto lu_solve = [&](const std::vector<double>& rhs) {
    std::vector<double> y(n);
    for (std::size_t r = 0; r < n; ++r) {
      double acc = rhs[perm[r]];
      for (std::size_t c = 0; c < r; ++c) acc -= a(r, c) * y[c];
      y[r] = acc;
    }
    for (std::size_t r = n; r-- > 0;) {
      double acc = y[r];
      for (std::size_t c = r + 1; c < n; ++c) acc -= a(r, c) * y[c];
      y[r] = acc / a(r, r);
    }
    return y;
  };

  // n is small, so the inverse is formed column by column for the estimate.
  double norm_inv = 0.0;
  std::vector<double> row_sums(n, 0.0);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<double> e(n, 0.0);
    e[c] = 1.0;
    const auto col = lu_solve(e);
    for (std::size_t r = 0; r < n; ++r) row_sums[r] += std::abs(col[r]);
  }
  for (double s : row_sums) norm_inv = std::max(norm_inv, s);

  return {lu_solve(b), norm_a * norm_inv};
}

}  // namespace accalc
