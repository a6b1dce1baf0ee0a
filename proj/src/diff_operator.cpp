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
#include "accalc/diff_operator.hpp"

#include <algorithm>
#include <cmath>

#include "accalc/error.hpp"

namespace accalc {

DiffOperator::DiffOperator(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) throw InvalidInput("differential operator must have order >= 1");
  for (double a : coeffs_)
    if (!std::isfinite(a)) throw InvalidInput("differential operator coefficients must be finite");
  if (coeffs_.back() == 0.0) throw InvalidInput("leading coefficient of the differential operator is zero");
  characteristic_ = Polynomial(coeffs_);
}

double DiffOperator::scale_at(Complex s) const noexcept {
  return 1.0 + magnitude_bound(characteristic_, std::max(1.0, std::abs(s)));
}

Term apply(const DiffOperator& op, const Term& x) {
  using Wide = long double;
  const auto a = op.coeffs();
  const auto deg = x.degree();
  if (!deg) return Term(x.lambda(), x.omega(), {});

  // Horner in d/dt: y = a_n x, then y = y' + a_i x for i = n-1 .. 0, where
  // y' is the (p, q) recurrence of differentiate(). Accumulated in extended
  // precision, since L(x) is often a heavy cancellation of its summands.
  const std::size_t d = *deg + 1;
  const Wide lambda = x.lambda();
  const Wide omega = x.omega();
  std::vector<Wide> p(d), q(d), yp(d), yq(d), np(d), nq(d);
  for (std::size_t k = 0; k < d; ++k) {
    p[k] = x.p()[k];
    q[k] = x.q()[k];
    yp[k] = static_cast<Wide>(a.back()) * p[k];
    yq[k] = static_cast<Wide>(a.back()) * q[k];
  }
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    for (std::size_t k = 0; k < d; ++k) {
      const Wide dp = k + 1 < d ? static_cast<Wide>(k + 1) * yp[k + 1] : 0.0L;
      const Wide dq = k + 1 < d ? static_cast<Wide>(k + 1) * yq[k + 1] : 0.0L;
      np[k] = dp + (lambda * yp[k] + omega * yq[k]) + static_cast<Wide>(a[i]) * p[k];
      nq[k] = dq + (lambda * yq[k] - omega * yp[k]) + static_cast<Wide>(a[i]) * q[k];
    }
    std::swap(yp, np);
    std::swap(yq, nq);
  }
  std::vector<double> out_p(d), out_q(d);
  for (std::size_t k = 0; k < d; ++k) {
    out_p[k] = static_cast<double>(yp[k]);
    out_q[k] = static_cast<double>(yq[k]);
  }
  return Term(x.lambda(), x.omega(), Polynomial(std::move(out_p)), Polynomial(std::move(out_q)));
}

Signal apply(const DiffOperator& op, const Signal& x) {
  Signal out;
  for (const auto& t : x.terms()) out += apply(op, t);
  return out;
}

double binomial(std::size_t n, std::size_t k) noexcept {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double b = 1.0;
  for (std::size_t i = 1; i <= k; ++i) b = b * static_cast<double>(n - k + i) / static_cast<double>(i);
  return std::round(b);
}

Matrix<Complex> operator_matrix(const DiffOperator& op, Complex s, std::size_t m) {
  std::vector<Complex> derivs(m + 1);
  for (std::size_t j = 0; j <= m; ++j) derivs[j] = evaluate(derivative(op.characteristic(), j), s);
  Matrix<Complex> a(m + 1, m + 1);
  for (std::size_t k = 0; k <= m; ++k)
    for (std::size_t l = k; l <= m; ++l) a(k, l) = binomial(l, k) * derivs[l - k];
  return a;
}

}  // namespace accalc
