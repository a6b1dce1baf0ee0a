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
#ifndef ACCALC_POLYNOMIAL_HPP
#define ACCALC_POLYNOMIAL_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace accalc {

/// Complex scalar a + jb. Phasors, characteristic-polynomial values and the
/// multipliers of the complex structure on the function spaces all use it.
using Complex = std::complex<double>;

/**
 * Dense real polynomial, coefficient k multiplies t^k (or s^k).
 *
 * The coefficient vector is kept canonical: the highest stored coefficient is
 * nonzero, and the zero polynomial stores nothing. Its degree is reported as
 * an empty optional rather than a number.
 */
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);
  Polynomial(std::initializer_list<double> coeffs);

  static Polynomial constant(double c);
  /// c * t^k
  static Polynomial monomial(std::size_t k, double c = 1.0);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const noexcept;
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of t^k; zero beyond the degree.
  double operator[](std::size_t k) const noexcept {
    return k < coeffs_.size() ? coeffs_[k] : 0.0;
  }
  double leading() const noexcept { return coeffs_.empty() ? 0.0 : coeffs_.back(); }
  double max_abs_coeff() const noexcept;

  double operator()(double t) const noexcept;
  Complex operator()(Complex s) const noexcept;

  /// Multiplication by t^k.
  Polynomial shifted(std::size_t k) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(double c);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial p, double c) { return p *= c; }
  friend Polynomial operator*(double c, Polynomial p) { return p *= c; }
  friend Polynomial operator-(Polynomial p) { return p *= -1.0; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() noexcept;

  std::vector<double> coeffs_;
};

/// Horner evaluation at a complex point.
Complex evaluate(const Polynomial& p, Complex s) noexcept;

/// k-th formal derivative; the zero polynomial once k exceeds the degree.
Polynomial derivative(const Polynomial& p, std::size_t k = 1);

/// Sum of |c_i| |s|^i, the magnitude bound used to judge evaluation residuals.
double magnitude_bound(const Polynomial& p, double abs_s) noexcept;

}  // namespace accalc

#endif  // ACCALC_POLYNOMIAL_HPP
