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
#include "accalc/rk4.hpp"

#include <algorithm>
#include <cmath>

#include "accalc/error.hpp"

namespace accalc {

std::size_t substeps_for(double step, double max_step) noexcept {
  if (!(step > 0.0) || !(max_step > 0.0)) return 1;
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(step / max_step - 1e-9)));
}

TraceGrid rk4_solve(const DiffOperator& op, const std::function<double(double)>& input, const std::vector<double>& x0,
                    const TraceSpec& spec, std::size_t substeps) {
  const std::size_t n = op.order();
  if (x0.size() != n) throw InvalidInput("initial vector length does not match operator order");
  if (!(spec.t1 > spec.t0) || !(spec.step > 0.0) || !std::isfinite(spec.t1) || !std::isfinite(spec.t0)) {
    throw InvalidInput("trace grid needs t1 > t0 and step > 0");
  }
  if (substeps == 0) throw InvalidInput("substeps must be positive");

  const double span = spec.t1 - spec.t0;
  const auto intervals = static_cast<std::size_t>(std::ceil(span / spec.step - 1e-9));
  const double step = span / static_cast<double>(intervals);
  const double h = step / static_cast<double>(substeps);
  if (h > kMaxIntegrationStep * (1.0 + 1e-12)) throw InvalidInput("integration step exceeds the oracle limit");

  const auto a = op.coeffs();
  const double an = a[n];
  auto rhs = [&](double t, const std::vector<double>& y, std::vector<double>& dy) {
    double acc = input(t);
    for (std::size_t i = 0; i < n; ++i) {
      acc -= a[i] * y[i];
      if (i + 1 < n) dy[i] = y[i + 1];
    }
    dy[n - 1] = acc / an;
  };

  TraceGrid grid{spec.t0, spec.t1, step, {}};
  grid.samples.reserve(intervals + 1);
  std::vector<double> y = x0, k1(n), k2(n), k3(n), k4(n), tmp(n);
  grid.samples.emplace_back(spec.t0, y[0]);
  for (std::size_t i = 0; i < intervals; ++i) {
    const double base = spec.t0 + static_cast<double>(i) * step;
    for (std::size_t s = 0; s < substeps; ++s) {
      const double t = base + static_cast<double>(s) * h;
      rhs(t, y, k1);
      for (std::size_t j = 0; j < n; ++j) tmp[j] = y[j] + 0.5 * h * k1[j];
      rhs(t + 0.5 * h, tmp, k2);
      for (std::size_t j = 0; j < n; ++j) tmp[j] = y[j] + 0.5 * h * k2[j];
      rhs(t + 0.5 * h, tmp, k3);
      for (std::size_t j = 0; j < n; ++j) tmp[j] = y[j] + h * k3[j];
      rhs(t + h, tmp, k4);
      for (std::size_t j = 0; j < n; ++j) y[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    }
    for (double v : y)
      if (!std::isfinite(v)) throw NumericalError("integration diverged");
    const double t_next = (i + 1 == intervals) ? spec.t1 : spec.t0 + static_cast<double>(i + 1) * step;
    grid.samples.emplace_back(t_next, y[0]);
  }
  return grid;
}

double compare_traces(const Signal& closed, const TraceGrid& numeric) {
  double worst = 0.0;
  for (const auto& [t, x] : numeric.samples) worst = std::max(worst, std::abs(closed(t) - x));
  return worst;
}

}  // namespace accalc
