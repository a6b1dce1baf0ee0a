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
#ifndef ACCALC_EXPRESSION_HPP
#define ACCALC_EXPRESSION_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "accalc/diff_operator.hpp"
#include "accalc/signal.hpp"

namespace accalc {

enum class TrigKind { cos, sin };

/// coeff * t^power * exp(rate*t) * cos|sin(frequency*t), each factor optional.
struct ProductTerm {
  double coeff = 1.0;
  std::size_t power = 0;
  std::optional<double> rate;
  std::optional<TrigKind> trig;
  double frequency = 0.0;
};

/// Sum of product terms, in source order.
struct ExpressionAst {
  std::vector<ProductTerm> terms;
};

/// Largest accepted derivative order and power of t.
inline constexpr std::size_t kMaxParsedOrder = 64;

/**
 * Parses an operator, either as a coefficient list
 *
 *     coeffs: a0, a1, ..., an
 *
 * or as a sum of derivative terms such as "x'' + 3*x' + 2*x", where the k-th
 * derivative may also be written x(k) or x^(k). Numbers may be written as
 * fractions ("1/3"). The highest listed order must have a nonzero
 * coefficient. Errors are ParseError with line and column.
 */
DiffOperator parse_ode(std::string_view text);

/**
 * Parses an input expression, a sum of products like
 * "3*t^2*exp(-2*t)*cos(5*t) - sin(t)" with at most one exp and one trig
 * factor per product. "0" is the empty signal.
 */
ExpressionAst parse_expression(std::string_view text);

/// Lowers to a canonical Signal (merged keys, folded frequency sign).
Signal lower(const ExpressionAst& ast);

/// parse_expression followed by lower.
Signal parse_input(std::string_view text);

/// Comma-separated list of numbers, e.g. an initial vector "1, -1/2, 0".
std::vector<double> parse_number_list(std::string_view text);

}  // namespace accalc

#endif  // ACCALC_EXPRESSION_HPP
