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
#ifndef ACCALC_TESTS_SUPPORT_HPP
#define ACCALC_TESTS_SUPPORT_HPP

// Random instance generators and independent oracles shared by the unit and
// acceptance suites. Nothing here calls into the solver paths it is used to
// check.

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "accalc/diff_operator.hpp"
#include "accalc/polynomial.hpp"
#include "accalc/signal.hpp"

namespace accalc::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline std::size_t uniform_int(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Polynomial random_polynomial(Rng& rng, std::size_t degree, double lo, double hi) {
  std::vector<double> c(degree + 1);
  for (auto& x : c) x = uniform(rng, lo, hi);
  if (c.back() == 0.0) c.back() = 1.0;
  return Polynomial(std::move(c));
}

/// Coefficients in [-5, 5], a_n in [0.5, 5].
inline DiffOperator random_operator(Rng& rng, std::size_t n) {
  std::vector<double> a(n + 1);
  for (auto& x : a) x = uniform(rng, -5.0, 5.0);
  a[n] = uniform(rng, 0.5, 5.0);
  return DiffOperator(std::move(a));
}

/// Real polynomial with the given roots (upper half-plane entries of a pair
/// are given once with omega > 0 and contribute their conjugate as well).
struct PlantedRoot {
  double lambda;
  double omega;
  std::size_t multiplicity;
};

inline Polynomial polynomial_from_roots(const std::vector<PlantedRoot>& roots, double leading) {
  Polynomial p = Polynomial::constant(leading);
  for (const auto& r : roots) {
    const Polynomial factor = r.omega == 0.0 ? Polynomial{-r.lambda, 1.0}
                                             : Polynomial{r.lambda * r.lambda + r.omega * r.omega, -2.0 * r.lambda, 1.0};
    for (std::size_t i = 0; i < r.multiplicity; ++i) p = p * factor;
  }
  return p;
}

inline DiffOperator operator_from(const Polynomial& p) {
  return DiffOperator(std::vector<double>(p.coeffs().begin(), p.coeffs().end()));
}

inline std::size_t planted_degree(const std::vector<PlantedRoot>& roots) {
  std::size_t n = 0;
  for (const auto& r : roots) n += (r.omega == 0.0 ? 1 : 2) * r.multiplicity;
  return n;
}

/// Degree-d term with the given key, coefficients in [-c, c].
inline Term random_term(Rng& rng, double lambda, double omega, std::size_t degree, double c = 3.0) {
  Polynomial p = random_polynomial(rng, degree, -c, c);
  Polynomial q = omega == 0.0 ? Polynomial{} : random_polynomial(rng, degree, -c, c);
  return Term(lambda, omega, std::move(p), std::move(q));
}

/// lambda in [-3, 3], omega in {0} or [0.5, 5] with equal odds.
inline std::pair<double, double> random_key(Rng& rng) {
  const double lambda = uniform(rng, -3.0, 3.0);
  const double omega = uniform_int(rng, 0, 1) == 0 ? 0.0 : uniform(rng, 0.5, 5.0);
  return {lambda, omega};
}

inline Signal random_signal(Rng& rng, std::size_t max_terms, std::size_t max_degree) {
  Signal s;
  const std::size_t count = uniform_int(rng, 1, max_terms);
  for (std::size_t i = 0; i < count; ++i) {
    const auto [l, w] = random_key(rng);
    s += random_term(rng, l, w, uniform_int(rng, 0, max_degree));
  }
  return s;
}

/// Brute-force sum c_k s^k with powers built by repeated multiplication.
inline Complex power_sum(const Polynomial& p, Complex s) {
  Complex acc{0.0, 0.0};
  Complex power{1.0, 0.0};
  for (double c : p.coeffs()) {
    acc += c * power;
    power *= s;
  }
  return acc;
}

/// Central difference f'(t) with step h.
template <class F>
double central_first(const F& f, double t, double h) {
  return (f(t + h) - f(t - h)) / (2.0 * h);
}

/// Central second difference with step h.
template <class F>
double central_second(const F& f, double t, double h) {
  return (f(t + h) - 2.0 * f(t) + f(t - h)) / (h * h);
}

/// Coefficient distance relative to max(1, magnitude), for comparing against
/// values that may legitimately be zero.
inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)}); }

}  // namespace accalc::testing

#endif  // ACCALC_TESTS_SUPPORT_HPP
