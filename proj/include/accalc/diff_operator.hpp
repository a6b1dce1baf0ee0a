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
#ifndef ACCALC_DIFF_OPERATOR_HPP
#define ACCALC_DIFF_OPERATOR_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "accalc/matrix.hpp"
#include "accalc/polynomial.hpp"
#include "accalc/signal.hpp"
#include "accalc/term.hpp"

namespace accalc {

/**
 * Constant-coefficient linear differential operator
 *
 *     L(x) = a_n x^(n) + ... + a_1 x' + a_0 x,   a_n != 0, n >= 1,
 *
 * with characteristic polynomial p_L(s) = a_n s^n + ... + a_0.
 */
class DiffOperator {
 public:
  /// coeffs[i] multiplies the i-th derivative.
  explicit DiffOperator(std::vector<double> coeffs);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  const Polynomial& characteristic() const noexcept { return characteristic_; }

  /// 1 + sum_i |a_i| max(1, |s|)^i, the magnitude against which p_L(s) is
  /// judged to vanish.
  double scale_at(Complex s) const noexcept;

  friend bool operator==(const DiffOperator& a, const DiffOperator& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<double> coeffs_;
  Polynomial characteristic_;
};

/// L(x) as sum_i a_i d^i x / dt^i, a Horner fold of the differentiate()
/// recurrence carried in extended precision.
Term apply(const DiffOperator& op, const Term& x);
Signal apply(const DiffOperator& op, const Signal& x);

/**
 * Matrix of L on the coordinates of t^k e^{lambda t} cos(omega t),
 * k = 0..m, with s = lambda + j omega:
 *
 *     A(k, l) = binom(l, k) p_L^(l-k)(s)   for k <= l,  0 below the diagonal.
 *
 * The diagonal is p_L(s), so A is invertible iff s is not a root of p_L.
 */
Matrix<Complex> operator_matrix(const DiffOperator& op, Complex s, std::size_t m);

/// Binomial coefficient as a double.
double binomial(std::size_t n, std::size_t k) noexcept;

}  // namespace accalc

#endif  // ACCALC_DIFF_OPERATOR_HPP
