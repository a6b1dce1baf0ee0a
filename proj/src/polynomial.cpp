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
#include "accalc/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace accalc {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<double> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(double c) { return Polynomial(std::vector<double>{c}); }

Polynomial Polynomial::monomial(std::size_t k, double c) {
  std::vector<double> coeffs(k + 1, 0.0);
  coeffs[k] = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() noexcept {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

double Polynomial::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double Polynomial::operator()(double t) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Complex Polynomial::operator()(Complex s) const noexcept { return evaluate(*this, s); }

Polynomial Polynomial::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<double> coeffs(k, 0.0);
  coeffs.insert(coeffs.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(coeffs));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(double c) {
  for (double& x : coeffs_) x *= c;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<double> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(out));
}

Complex evaluate(const Polynomial& p, Complex s) noexcept {
  const auto c = p.coeffs();
  Complex acc{0.0, 0.0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * s + *it;
  return acc;
}

Polynomial derivative(const Polynomial& p, std::size_t k) {
  // Repeated single steps, so that derivative(derivative(p, 1), 1) and
  // derivative(p, 2) round identically.
  std::vector<double> c(p.coeffs().begin(), p.coeffs().end());
  for (std::size_t step = 0; step < k && !c.empty(); ++step) {
    for (std::size_t i = 1; i < c.size(); ++i) c[i - 1] = static_cast<double>(i) * c[i];
    c.pop_back();
  }
  return Polynomial(std::move(c));
}

double magnitude_bound(const Polynomial& p, double abs_s) noexcept {
  double acc = 0.0;
  const auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * abs_s + std::abs(*it);
  return acc;
}

}  // namespace accalc
