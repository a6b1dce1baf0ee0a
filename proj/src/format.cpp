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
#include "accalc/format.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

namespace accalc {

namespace {

std::string printf_g(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

// "t", "-t" or "<c>*t"
std::string rate_times_t(double c) {
  const std::string s = format_number(c);
  if (s == "1") return "t";
  if (s == "-1") return "-t";
  return s + "*t";
}

struct Monomial {
  double coeff;
  std::string body;  // factors joined by '*', empty for a bare constant
};

std::string join_factors(std::size_t power, double lambda, const char* trig, double omega) {
  std::vector<std::string> factors;
  if (power == 1) factors.emplace_back("t");
  if (power > 1) factors.push_back("t^" + std::to_string(power));
  if (format_number(lambda) != "0") factors.push_back("exp(" + rate_times_t(lambda) + ")");
  if (trig != nullptr) factors.push_back(std::string(trig) + "(" + rate_times_t(omega) + ")");
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += '*';
    out += f;
  }
  return out;
}

}  // namespace

std::string format_number(double x) { return printf_g(x, 15); }

std::string format_signal(const Signal& x) {
  std::vector<Monomial> monomials;
  for (const auto& term : x.terms()) {
    const auto deg = term.degree();
    if (!deg) continue;
    for (std::size_t k = 0; k <= *deg; ++k) {
      if (term.omega() == 0.0) {
        monomials.push_back({term.p()[k], join_factors(k, term.lambda(), nullptr, 0.0)});
      } else {
        monomials.push_back({term.p()[k], join_factors(k, term.lambda(), "cos", term.omega())});
        monomials.push_back({term.q()[k], join_factors(k, term.lambda(), "sin", term.omega())});
      }
    }
  }

  std::string out;
  for (const auto& m : monomials) {
    if (!(std::abs(m.coeff) >= kPrintThreshold)) continue;
    const bool negative = m.coeff < 0.0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mag = format_number(std::abs(m.coeff));
    if (m.body.empty()) {
      out += mag;
    } else if (mag == "1") {
      out += m.body;
    } else {
      out += mag + "*" + m.body;
    }
  }
  return out.empty() ? "0" : out;
}

std::string format_complex(Complex z) {
  if (z.imag() == 0.0) return format_number(z.real());
  std::string out = format_number(z.real());
  out += z.imag() < 0.0 ? "-" : "+";
  out += format_number(std::abs(z.imag())) + "j";
  return out;
}

std::string json_number(double x) {
  if (!std::isfinite(x)) return "null";
  return printf_g(x, 17);
}

std::string json_number_array(std::span<const double> xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += json_number(xs[i]);
  }
  return out + "]";
}

std::string json_terms(std::span<const Term> terms) {
  std::string out = "[";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Term& t = terms[i];
    if (i) out += ',';
    out += "{\"lambda\":" + json_number(t.lambda()) + ",\"omega\":" + json_number(t.omega()) +
           ",\"p\":" + json_number_array(t.p().coeffs()) + ",\"q\":" + json_number_array(t.q().coeffs()) + "}";
  }
  return out + "]";
}

}  // namespace accalc
