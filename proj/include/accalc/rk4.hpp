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
#ifndef ACCALC_RK4_HPP
#define ACCALC_RK4_HPP

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "accalc/diff_operator.hpp"
#include "accalc/signal.hpp"

namespace accalc {

/// Equally spaced output grid t0, t0 + step, ..., t1.
struct TraceSpec {
  double t0 = 0.0;
  double t1 = 1.0;
  double step = 1e-3;
};

struct TraceGrid {
  double t0 = 0.0;
  double t1 = 0.0;
  double step = 0.0;
  std::vector<std::pair<double, double>> samples;
};

/// Largest integration step the oracle accepts.
inline constexpr double kMaxIntegrationStep = 1e-2;

/**
 * Classic fixed-step fourth-order Runge-Kutta on the companion system of
 * L(x) = r, y = (x, x', ..., x^(n-1)), normalized by a_n.
 *
 * The output grid spacing is spec.step, shrunk so that (t1 - t0) is an
 * integer number of steps; each output interval is integrated with
 * `substeps` RK4 steps. The integration step must not exceed
 * kMaxIntegrationStep (InvalidInput). A non-finite state throws
 * NumericalError.
 */
TraceGrid rk4_solve(const DiffOperator& op, const std::function<double(double)>& input, const std::vector<double>& x0,
                    const TraceSpec& spec, std::size_t substeps = 1);

/// Number of substeps keeping the integration step at or below max_step.
std::size_t substeps_for(double step, double max_step = 1e-3) noexcept;

/// max_t |closed(t) - sample(t)| over the grid.
double compare_traces(const Signal& closed, const TraceGrid& numeric);

}  // namespace accalc

#endif  // ACCALC_RK4_HPP
