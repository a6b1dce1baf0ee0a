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
#include "accalc/signal.hpp"

#include <algorithm>
#include <cmath>

namespace accalc {

namespace {

bool same_key(const Term& t, double lambda, double omega) noexcept {
  return std::abs(t.lambda() - lambda) <= kKeyTolerance && std::abs(t.omega() - omega) <= kKeyTolerance;
}

bool key_less(const Term& a, const Term& b) noexcept {
  if (a.lambda() != b.lambda()) return a.lambda() < b.lambda();
  return a.omega() < b.omega();
}

double max_abs(const Term* t) {
  if (t == nullptr) return 0.0;
  return std::max(t->p().max_abs_coeff(), t->q().max_abs_coeff());
}

double max_diff(const Term* a, const Term* b) {
  const Polynomial zero;
  const Polynomial& ap = a ? a->p() : zero;
  const Polynomial& aq = a ? a->q() : zero;
  const Polynomial& bp = b ? b->p() : zero;
  const Polynomial& bq = b ? b->q() : zero;
  return std::max((ap - bp).max_abs_coeff(), (aq - bq).max_abs_coeff());
}

// Visits every key of a and b once, handing over the matching term of each side.
template <class F>
void for_each_key(const Signal& a, const Signal& b, F&& f) {
  for (const auto& t : a.terms()) f(&t, b.find(t.lambda(), t.omega()));
  for (const auto& t : b.terms())
    if (a.find(t.lambda(), t.omega()) == nullptr) f(nullptr, &t);
}

}  // namespace

Signal::Signal(Term term) { *this += term; }

Signal::Signal(std::vector<Term> terms) {
  for (const auto& t : terms) *this += t;
}

const Term* Signal::find(double lambda, double omega) const noexcept {
  for (const auto& t : terms_)
    if (same_key(t, lambda, omega)) return &t;
  return nullptr;
}

double Signal::operator()(double t) const noexcept {
  double acc = 0.0;
  for (const auto& term : terms_) acc += term(t);
  return acc;
}

Signal& Signal::operator+=(const Term& term) {
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (!same_key(*it, term.lambda(), term.omega())) continue;
    Term merged(it->lambda(), it->omega(), it->p() + term.p(), it->q() + term.q());
    if (merged.is_zero()) {
      terms_.erase(it);
    } else {
      *it = std::move(merged);
    }
    return *this;
  }
  if (term.is_zero()) return *this;
  terms_.insert(std::upper_bound(terms_.begin(), terms_.end(), term, key_less), term);
  return *this;
}

Signal& Signal::operator+=(const Signal& rhs) {
  for (const auto& t : rhs.terms_) *this += t;
  return *this;
}

Signal& Signal::operator-=(const Signal& rhs) {
  for (const auto& t : rhs.terms_) *this += Term(t.lambda(), t.omega(), -t.p(), -t.q());
  return *this;
}

Signal& Signal::operator*=(double c) {
  if (c == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t = Term(t.lambda(), t.omega(), c * t.p(), c * t.q());
  std::erase_if(terms_, [](const Term& t) { return t.is_zero(); });
  return *this;
}

Signal differentiate(const Signal& x) {
  Signal out;
  for (const auto& t : x.terms()) out += differentiate(t);
  return out;
}

std::vector<double> initial_vector(const Signal& x, std::size_t n) {
  std::vector<double> v(n, 0.0);
  Signal d = x;
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = d(0.0);
    if (i + 1 < n) d = differentiate(d);
  }
  return v;
}

double relative_coefficient_error(const Signal& a, const Signal& b) {
  double worst = 0.0;
  for_each_key(a, b, [&](const Term* x, const Term* y) {
    const double scale = std::max(max_abs(x), max_abs(y));
    if (scale == 0.0) return;
    worst = std::max(worst, max_diff(x, y) / scale);
  });
  return worst;
}

double absolute_coefficient_error(const Signal& a, const Signal& b) {
  double worst = 0.0;
  for_each_key(a, b, [&](const Term* x, const Term* y) { worst = std::max(worst, max_diff(x, y)); });
  return worst;
}

}  // namespace accalc
