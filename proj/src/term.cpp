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
#include "accalc/term.hpp"

#include <algorithm>
#include <cmath>

#include "accalc/error.hpp"

namespace accalc {

Term::Term(double lambda, double omega, Polynomial p, Polynomial q)
    : lambda_(lambda), omega_(omega), p_(std::move(p)), q_(std::move(q)) {
  if (!std::isfinite(lambda) || !std::isfinite(omega)) throw InvalidInput("term exponent must be finite");
  if (omega_ < 0.0) {
    omega_ = -omega_;
    q_ = -q_;
  }
  if (omega_ == 0.0) {
    omega_ = 0.0;  // drop a negative zero
    q_ = Polynomial{};
  }
}

std::optional<std::size_t> Term::degree() const noexcept {
  const auto dp = p_.degree();
  const auto dq = q_.degree();
  if (!dp) return dq;
  if (!dq) return dp;
  return std::max(*dp, *dq);
}

double Term::operator()(double t) const noexcept {
  if (is_zero()) return 0.0;
  const double e = std::exp(lambda_ * t);
  if (omega_ == 0.0) return p_(t) * e;
  return (p_(t) * std::cos(omega_ * t) + q_(t) * std::sin(omega_ * t)) * e;
}

Term cmul(Complex gamma, const Term& x) {
  const double a = gamma.real();
  const double b = gamma.imag();
  if (x.omega() == 0.0) {
    if (b != 0.0) throw StructureError("complex scalar applied to a term with omega = 0");
    return Term(x.lambda(), 0.0, a * x.p());
  }
  return Term(x.lambda(), x.omega(), a * x.p() + b * x.q(), a * x.q() - b * x.p());
}

Term differentiate(const Term& x) {
  const double l = x.lambda();
  const double w = x.omega();
  return Term(l, w, derivative(x.p()) + (l * x.p() + w * x.q()), derivative(x.q()) + (l * x.q() - w * x.p()));
}

std::vector<Complex> coordinates(const Term& x) {
  const auto deg = x.degree();
  if (!deg) return {};
  std::vector<Complex> gamma(*deg + 1);
  for (std::size_t k = 0; k <= *deg; ++k) gamma[k] = Complex{x.p()[k], -x.q()[k]};
  return gamma;
}

Term from_coordinates(double lambda, double omega, std::span<const Complex> gamma) {
  std::vector<double> p(gamma.size());
  std::vector<double> q(gamma.size());
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    p[k] = gamma[k].real();
    q[k] = -gamma[k].imag();
  }
  return Term(lambda, omega, Polynomial(std::move(p)), Polynomial(std::move(q)));
}

Phasor sinusoid_to_phasor(double amplitude, double omega, double phase) {
  if (!(omega > 0.0)) throw InvalidInput("phasor frequency must be positive");
  if (!(amplitude >= 0.0)) throw InvalidInput("phasor amplitude must be non-negative");
  return {omega, std::polar(amplitude, phase)};
}

Term phasor_to_term(const Phasor& phasor) {
  if (!(phasor.omega > 0.0)) throw InvalidInput("phasor frequency must be positive");
  return cmul(phasor.value, Term(0.0, phasor.omega, Polynomial::constant(1.0)));
}

}  // namespace accalc
