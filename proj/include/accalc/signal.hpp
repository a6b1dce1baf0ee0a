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
#ifndef ACCALC_SIGNAL_HPP
#define ACCALC_SIGNAL_HPP

#include <span>
#include <vector>

#include "accalc/term.hpp"

namespace accalc {

/// Absolute tolerance on lambda and omega under which two terms share a key.
inline constexpr double kKeyTolerance = 1e-9;

/**
 * Finite sum of terms with pairwise distinct (lambda, omega) keys.
 *
 * Terms are kept sorted by (lambda, omega). Adding a term whose key is within
 * kKeyTolerance of a stored key merges the (p, q) pairs into the stored key;
 * terms that become zero are dropped.
 */
class Signal {
 public:
  Signal() = default;
  explicit Signal(Term term);
  explicit Signal(std::vector<Term> terms);

  std::span<const Term> terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Stored term whose key matches (lambda, omega), or nullptr.
  const Term* find(double lambda, double omega) const noexcept;

  double operator()(double t) const noexcept;

  Signal& operator+=(const Term& term);
  Signal& operator+=(const Signal& rhs);
  Signal& operator-=(const Signal& rhs);
  Signal& operator*=(double c);

  friend Signal operator+(Signal lhs, const Signal& rhs) { return lhs += rhs; }
  friend Signal operator-(Signal lhs, const Signal& rhs) { return lhs -= rhs; }
  friend Signal operator*(double c, Signal s) { return s *= c; }
  friend Signal operator*(Signal s, double c) { return s *= c; }
  friend bool operator==(const Signal&, const Signal&) = default;

 private:
  std::vector<Term> terms_;
};

/// Term-wise derivative.
Signal differentiate(const Signal& x);

/// (x(0), x'(0), ..., x^(n-1)(0)).
std::vector<double> initial_vector(const Signal& x, std::size_t n);

/**
 * Coefficient-level distance between two signals: for each key present in
 * either, the largest absolute difference of a p or q coefficient divided by
 * the largest coefficient magnitude of that key in either signal. Returns the
 * maximum over keys (0 when both are empty).
 */
double relative_coefficient_error(const Signal& a, const Signal& b);

/// Largest absolute coefficient difference over all keys.
double absolute_coefficient_error(const Signal& a, const Signal& b);

}  // namespace accalc

#endif  // ACCALC_SIGNAL_HPP
