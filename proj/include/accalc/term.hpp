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
#ifndef ACCALC_TERM_HPP
#define ACCALC_TERM_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "accalc/polynomial.hpp"

namespace accalc {

/**
 * One exponential-polynomial-trigonometric term
 *
 *     t -> p(t) e^{lambda t} cos(omega t) + q(t) e^{lambda t} sin(omega t).
 *
 * This single type covers every input space the solver handles: pure
 * sinusoids (lambda = 0, degree 0), damped sinusoids, polynomials times
 * exponentials (omega = 0), and polynomial-weighted sinusoids.
 *
 * Canonical form: omega >= 0 (a negative frequency is folded into -q), and
 * q == 0 whenever omega == 0.
 */
class Term {
 public:
  Term() = default;
  Term(double lambda, double omega, Polynomial p, Polynomial q = {});

  double lambda() const noexcept { return lambda_; }
  double omega() const noexcept { return omega_; }
  /// lambda + j omega
  Complex exponent() const noexcept { return {lambda_, omega_}; }
  const Polynomial& p() const noexcept { return p_; }
  const Polynomial& q() const noexcept { return q_; }

  bool is_zero() const noexcept { return p_.is_zero() && q_.is_zero(); }
  /// max(deg p, deg q); empty for the zero term.
  std::optional<std::size_t> degree() const noexcept;

  double operator()(double t) const noexcept;

  friend bool operator==(const Term&, const Term&) = default;

 private:
  double lambda_ = 0.0;
  double omega_ = 0.0;
  Polynomial p_;
  Polynomial q_;
};

/**
 * Complex scalar multiplication on the term's space:
 *
 *     (a + jb) . (p cos + q sin) = (a p + b q) cos + (a q - b p) sin.
 *
 * For omega == 0 the space is only real-linear; a gamma with nonzero
 * imaginary part throws StructureError.
 */
Term cmul(Complex gamma, const Term& x);

/// d/dt, as the closed-form (p, q) recurrence
/// (p' + lambda p + omega q, q' + lambda q - omega p).
Term differentiate(const Term& x);

/**
 * Complex coordinates of x in the basis t^k e^{lambda t} cos(omega t):
 * gamma_k = p_k - j q_k, so that x = sum_k gamma_k . t^k e^{lambda t} cos(omega t).
 * Length is degree + 1 (empty for the zero term).
 */
std::vector<Complex> coordinates(const Term& x);

/// Inverse of coordinates(). With omega == 0 the imaginary parts are ignored.
Term from_coordinates(double lambda, double omega, std::span<const Complex> gamma);

struct Phasor {
  double omega = 0.0;
  Complex value;
};

/// A cos(omega t + phi) -> (omega, A e^{j phi}). Requires A >= 0 and omega > 0.
Phasor sinusoid_to_phasor(double amplitude, double omega, double phase);

/// (omega, gamma) -> gamma . cos(omega t). Requires omega > 0.
Term phasor_to_term(const Phasor& phasor);

}  // namespace accalc

#endif  // ACCALC_TERM_HPP
