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
#ifndef ACCALC_FORMAT_HPP
#define ACCALC_FORMAT_HPP

#include <span>
#include <string>

#include "accalc/roots.hpp"
#include "accalc/signal.hpp"
#include "accalc/solver.hpp"

namespace accalc {

/// Coefficients with magnitude below this are left out of closed forms.
inline constexpr double kPrintThreshold = 1e-12;

/// 15 significant digits, "-0" printed as "0".
std::string format_number(double x);

/**
 * Closed form in the input grammar, e.g. "-0.5*exp(-t) + 0.5*cos(t)".
 * Terms ordered by (lambda, omega, power), cosine before sine; "0" when
 * nothing is left to print. parse_input() reads the result back.
 */
std::string format_signal(const Signal& x);

std::string format_complex(Complex z);

/// JSON number with 17 significant digits; non-finite values become null.
std::string json_number(double x);
std::string json_number_array(std::span<const double> xs);
/// [{"lambda":..,"omega":..,"p":[..],"q":[..]}, ...]
std::string json_terms(std::span<const Term> terms);

}  // namespace accalc

#endif  // ACCALC_FORMAT_HPP
