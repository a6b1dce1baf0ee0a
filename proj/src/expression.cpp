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
#include "accalc/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <string>

#include "accalc/error.hpp"

namespace accalc {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool at_end() const noexcept { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const noexcept {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  std::size_t pos() const noexcept { return pos_; }
  void advance(std::size_t n = 1) noexcept { pos_ = std::min(pos_ + n, text_.size()); }
  void skip_ws() noexcept {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    advance();
    return true;
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) return false;
    // a word must not run into further identifier characters
    const char next = peek(w.size());
    if (std::isalnum(static_cast<unsigned char>(next)) || next == '_') return false;
    advance(w.size());
    return true;
  }
  void expect(char c, std::string_view what) {
    if (!accept(c)) fail("expected " + std::string(what));
  }

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < pos && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

  bool starts_number() {
    skip_ws();
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) ||
           (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))));
  }

  // Unsigned decimal literal with optional fraction and exponent.
  double number() {
    skip_ws();
    const std::size_t start = pos_;
    if (!starts_number()) fail("expected a number");
    std::size_t end = pos_;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    if (end < text_.size() && text_[end] == '.') {
      ++end;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    }
    if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
      std::size_t e = end + 1;
      if (e < text_.size() && (text_[e] == '+' || text_[e] == '-')) ++e;
      if (e < text_.size() && std::isdigit(static_cast<unsigned char>(text_[e]))) {
        while (e < text_.size() && std::isdigit(static_cast<unsigned char>(text_[e]))) ++e;
        end = e;
      }
    }
    double value = 0.0;
    const auto res = std::from_chars(text_.data() + start, text_.data() + end, value);
    if (res.ec != std::errc{} || !std::isfinite(value)) fail_at(start, "number out of range");
    pos_ = end;
    return value;
  }

  // number ['/' number]
  double fraction() {
    const std::size_t start = pos_;
    double value = number();
    if (accept('/')) {
      const double den = number();
      if (den == 0.0) fail_at(start, "division by zero");
      value /= den;
      if (!std::isfinite(value)) fail_at(start, "number out of range");
    }
    return value;
  }

  std::size_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    std::size_t value = 0;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::size_t>(peek() - '0');
      if (value > kMaxParsedOrder) fail_at(start, "integer exceeds " + std::to_string(kMaxParsedOrder));
      advance();
    }
    return value;
  }

  // Optional run of '+'/'-' signs; returns the combined sign.
  std::optional<double> sign() {
    skip_ws();
    if (peek() != '+' && peek() != '-') return std::nullopt;
    double s = 1.0;
    while (peek() == '+' || peek() == '-') {
      if (peek() == '-') s = -s;
      advance();
      skip_ws();
    }
    return s;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Argument of exp/cos/sin: a real multiple of t.
double linear_rate(Cursor& in) {
  const double s = in.sign().value_or(1.0);
  double c = 1.0;
  if (in.starts_number()) {
    c = in.fraction();
    in.accept('*');
  }
  if (!in.accept_word("t")) in.fail("expected an argument of the form c*t");
  if (in.accept('*')) {
    c *= in.fraction();
  } else if (in.accept('/')) {
    const std::size_t at = in.pos();
    const double d = in.fraction();
    if (d == 0.0) in.fail_at(at, "division by zero");
    c /= d;
  }
  c *= s;
  if (!std::isfinite(c)) in.fail("rate out of range");
  return c;
}

bool starts_factor(Cursor& in) {
  in.skip_ws();
  const char c = in.peek();
  return in.starts_number() || c == 't' || c == 'e' || c == 'c' || c == 's';
}

void factor(Cursor& in, ProductTerm& term) {
  in.skip_ws();
  const std::size_t at = in.pos();
  if (in.starts_number()) {
    term.coeff *= in.fraction();
    return;
  }
  if (in.accept_word("t")) {
    std::size_t k = 1;
    if (in.accept('^')) k = in.integer();
    term.power += k;
    if (term.power > kMaxParsedOrder) in.fail_at(at, "power of t exceeds " + std::to_string(kMaxParsedOrder));
    return;
  }
  if (in.accept_word("exp")) {
    if (term.rate) in.fail_at(at, "structure: more than one exp factor in a product");
    in.expect('(', "'('");
    term.rate = linear_rate(in);
    in.expect(')', "')'");
    return;
  }
  for (auto [name, kind] : {std::pair{"cos", TrigKind::cos}, std::pair{"sin", TrigKind::sin}}) {
    if (!in.accept_word(name)) continue;
    if (term.trig) in.fail_at(at, "structure: more than one trigonometric factor in a product");
    in.expect('(', "'('");
    const double w = linear_rate(in);
    if (w == 0.0) in.fail_at(at, "frequency must be nonzero");
    in.expect(')', "')'");
    term.trig = kind;
    term.frequency = w;
    return;
  }
  in.fail("expected a number, t, exp(...), cos(...) or sin(...)");
}

ProductTerm product(Cursor& in, double sign) {
  ProductTerm term;
  term.coeff = sign;
  const std::size_t at = in.pos();
  factor(in, term);
  for (;;) {
    if (in.accept('*')) {
      factor(in, term);
      continue;
    }
    // implicit multiplication directly after a factor, as in "3t" or "2cos(t)"
    const char c = in.peek();
    if (c == 't' || c == 'e' || c == 'c' || c == 's') {
      factor(in, term);
      continue;
    }
    break;
  }
  if (!std::isfinite(term.coeff)) in.fail_at(at, "coefficient out of range");
  return term;
}

}  // namespace

ExpressionAst parse_expression(std::string_view text) {
  Cursor in(text);
  ExpressionAst ast;
  double s = in.sign().value_or(1.0);
  for (;;) {
    if (!starts_factor(in)) in.fail("expected a term");
    ast.terms.push_back(product(in, s));
    const auto next = in.sign();
    if (!next) break;
    s = *next;
  }
  in.skip_ws();
  if (!in.at_end()) in.fail("unexpected character");
  return ast;
}

Signal lower(const ExpressionAst& ast) {
  Signal out;
  for (const auto& t : ast.terms) {
    const double lambda = t.rate.value_or(0.0);
    const Polynomial poly = Polynomial::monomial(t.power, t.coeff);
    if (!t.trig) {
      out += Term(lambda, 0.0, poly);
    } else if (*t.trig == TrigKind::cos) {
      out += Term(lambda, t.frequency, poly);
    } else {
      out += Term(lambda, t.frequency, Polynomial{}, poly);
    }
  }
  return out;
}

Signal parse_input(std::string_view text) { return lower(parse_expression(text)); }

std::vector<double> parse_number_list(std::string_view text) {
  Cursor in(text);
  std::vector<double> out;
  in.skip_ws();
  if (in.at_end()) return out;
  do {
    const double s = in.sign().value_or(1.0);
    out.push_back(s * in.fraction());
  } while (in.accept(','));
  in.skip_ws();
  if (!in.at_end()) in.fail("expected ',' or end of list");
  return out;
}

DiffOperator parse_ode(std::string_view text) {
  Cursor in(text);
  if (in.accept_word("coeffs")) {
    in.expect(':', "':' after coeffs");
    const std::size_t list_start = in.pos();
    std::vector<double> coeffs;
    do {
      const double s = in.sign().value_or(1.0);
      coeffs.push_back(s * in.fraction());
    } while (in.accept(','));
    in.skip_ws();
    if (!in.at_end()) in.fail("expected ',' or end of coefficient list");
    if (coeffs.size() < 2) in.fail_at(list_start, "operator needs at least two coefficients (order >= 1)");
    if (coeffs.size() > kMaxParsedOrder + 1) in.fail_at(list_start, "operator order is too large");
    if (coeffs.back() == 0.0) in.fail_at(list_start, "leading coefficient is zero");
    return DiffOperator(std::move(coeffs));
  }

  std::map<std::size_t, double> by_order;
  double s = in.sign().value_or(1.0);
  for (;;) {
    in.skip_ws();
    const std::size_t at = in.pos();
    double c = s;
    if (in.starts_number()) {
      c *= in.fraction();
      in.accept('*');
    }
    if (!in.accept_word("x")) in.fail("expected x");
    std::size_t order = 0;
    if (in.peek() == '\'') {
      while (in.peek() == '\'') {
        ++order;
        in.advance();
      }
      if (order > kMaxParsedOrder) in.fail_at(at, "derivative order is too large");
    } else if (in.peek() == '(') {
      in.advance();
      order = in.integer();
      in.expect(')', "')'");
    } else if (in.peek() == '^') {
      in.advance();
      in.expect('(', "'(' after x^");
      order = in.integer();
      in.expect(')', "')'");
    }
    by_order[order] += c;
    if (!std::isfinite(by_order[order])) in.fail_at(at, "coefficient out of range");
    const auto next = in.sign();
    if (!next) break;
    s = *next;
  }
  in.skip_ws();
  if (!in.at_end()) in.fail("unexpected character");

  const std::size_t n = by_order.rbegin()->first;
  if (n == 0) in.fail_at(0, "operator needs at least one derivative (order >= 1)");
  if (by_order.rbegin()->second == 0.0) in.fail_at(0, "leading coefficient is zero");
  std::vector<double> coeffs(n + 1, 0.0);
  for (const auto& [k, c] : by_order) coeffs[k] = c;
  return DiffOperator(std::move(coeffs));
}

}  // namespace accalc
