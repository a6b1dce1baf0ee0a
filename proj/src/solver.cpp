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
#include "accalc/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <type_traits>

#include "accalc/error.hpp"

namespace accalc {

namespace {

template <class T>
bool all_finite(const std::vector<T>& v) {
  for (const auto& x : v) {
    if constexpr (std::is_same_v<T, Complex>) {
      if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
    } else {
      if (!std::isfinite(x)) return false;
    }
  }
  return true;
}

using Wide = long double;
using WideComplex = std::complex<Wide>;

/// p_L^(j)(s) / j!, j = 0 .. count-1, by repeated synthetic division
/// (Taylor coefficients of p_L around s) in extended precision.
std::vector<WideComplex> taylor_at(const Polynomial& p, Complex s, std::size_t count) {
  std::vector<WideComplex> c(p.coeffs().begin(), p.coeffs().end());
  const WideComplex z{s.real(), s.imag()};
  std::vector<WideComplex> out(count, WideComplex{0.0L, 0.0L});
  for (std::size_t j = 0; j < count && !c.empty(); ++j) {
    // divide by (t - s): remainder is the j-th Taylor coefficient
    for (std::size_t i = c.size() - 1; i-- > 0;) c[i] += z * c[i + 1];
    out[j] = c.front();
    c.erase(c.begin());
  }
  return out;
}

/**
 * Particular-solution coordinates for input coordinates gamma (degree m) at a
 * root of multiplicity mu (mu = 0 off resonance).
 *
 * The operator matrix A(k, l) = binom(l, k) p_L^(l-k)(s) is upper triangular.
 * With x_0 .. x_{mu-1} = 0, rows 0 .. m of A x = gamma form a triangular
 * system in x_mu .. x_{m+mu} with diagonal binom(k+mu, k) p_L^(mu)(s). The
 * entries with l - k < mu vanish at an exact root; in floating point they are
 * of rounding size and are folded back in by iterative refinement.
 */
template <class T>
std::vector<T> solve_coordinates(const DiffOperator& op, Complex s, const std::vector<T>& gamma, std::size_t mu) {
  const std::size_t m = gamma.size() - 1;
  const std::size_t size = m + mu + 1;
  // A(k, l) = binom(l, k) p^(l-k)(s) = binom(l, k) (l-k)! c_{l-k}
  const auto taylor = taylor_at(op.characteristic(), s, size);
  std::vector<WideComplex> deriv(size);
  Wide fact = 1.0L;
  for (std::size_t j = 0; j < size; ++j) {
    if (j > 0) fact *= static_cast<Wide>(j);
    deriv[j] = taylor[j] * fact;
  }
  auto entry = [&](std::size_t k, std::size_t l) -> WideComplex {
    return static_cast<Wide>(binomial(l, k)) * deriv[l - k];
  };

  std::vector<WideComplex> g(m + 1);
  for (std::size_t k = 0; k <= m; ++k) g[k] = WideComplex(gamma[k]);
  std::vector<WideComplex> x(size, WideComplex{0.0L, 0.0L});

  auto triangular = [&](const std::vector<WideComplex>& rhs) {
    std::vector<WideComplex> y(size, WideComplex{0.0L, 0.0L});
    for (std::size_t k = m + 1; k-- > 0;) {
      WideComplex acc = rhs[k];
      for (std::size_t l = k + mu + 1; l < size; ++l) acc -= entry(k, l) * y[l];
      y[k + mu] = acc * (1.0L / entry(k, k + mu));
    }
    return y;
  };

  x = triangular(g);
  if (mu > 0) {
    for (int pass = 0; pass < 3; ++pass) {
      std::vector<WideComplex> residual(m + 1);
      for (std::size_t k = 0; k <= m; ++k) {
        WideComplex acc = g[k];
        for (std::size_t l = std::max(k, mu); l < size; ++l) acc -= entry(k, l) * x[l];
        residual[k] = acc;
      }
      const auto dx = triangular(residual);
      for (std::size_t l = mu; l < size; ++l) x[l] += dx[l];
    }
  }

  std::vector<T> out(size);
  for (std::size_t l = 0; l < size; ++l) {
    if constexpr (std::is_same_v<T, double>) {
      out[l] = static_cast<double>(x[l].real());
    } else {
      out[l] = Complex{static_cast<double>(x[l].real()), static_cast<double>(x[l].imag())};
    }
  }
  return out;
}

std::string describe(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real();
  if (z.imag() != 0.0) os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "j";
  return os.str();
}

}  // namespace

HomogeneousBasis homogeneous_basis(const DiffOperator& op) { return homogeneous_basis(find_roots(op.characteristic())); }

HomogeneousBasis homogeneous_basis(const RootMultiset& roots) {
  HomogeneousBasis basis;
  for (const auto& r : roots) {
    if (r.value.imag() < 0.0) continue;  // represented by its upper partner
    const double lambda = r.value.real();
    const double omega = r.value.imag();
    for (std::size_t i = 0; i < r.multiplicity; ++i) {
      basis.functions.emplace_back(lambda, omega, Polynomial::monomial(i));
      if (omega > 0.0) basis.functions.emplace_back(lambda, omega, Polynomial{}, Polynomial::monomial(i));
    }
  }
  return basis;
}

std::size_t resonance_multiplicity(const DiffOperator& op, Complex s, const RootMultiset& roots) {
  if (std::abs(evaluate(op.characteristic(), s)) > kResonanceTolerance * op.scale_at(s)) return 0;
  return roots.nearest(s).multiplicity;
}

bool is_resonant(const DiffOperator& op, Complex s) {
  return std::abs(evaluate(op.characteristic(), s)) <= kResonanceTolerance * op.scale_at(s);
}

Term particular_term(const DiffOperator& op, const Term& r) {
  if (r.is_zero() || !is_resonant(op, r.exponent())) return particular_term(op, r, RootMultiset{});
  return particular_term(op, r, find_roots(op.characteristic()));
}

Term particular_term(const DiffOperator& op, const Term& r, const RootMultiset& roots) {
  if (r.is_zero()) return Term(r.lambda(), r.omega(), {});
  const Complex s = r.exponent();
  std::size_t mu = 0;
  if (is_resonant(op, s)) {
    mu = roots.size() > 0 ? resonance_multiplicity(op, s, roots)
                          : resonance_multiplicity(op, s, find_roots(op.characteristic()));
  }
  const std::size_t m = *r.degree();

  if (r.omega() == 0.0) {
    std::vector<double> gamma(m + 1);
    for (std::size_t k = 0; k <= m; ++k) gamma[k] = r.p()[k];
    const auto x = solve_coordinates(op, s, gamma, mu);
    if (!all_finite(x)) throw NumericalError("particular solution is not finite");
    return Term(r.lambda(), 0.0, Polynomial(x));
  }
  const auto x = solve_coordinates(op, s, coordinates(r), mu);
  if (!all_finite(x)) throw NumericalError("particular solution is not finite");
  return from_coordinates(r.lambda(), r.omega(), x);
}

Signal particular_solution(const DiffOperator& op, const Signal& r) {
  std::optional<RootMultiset> roots;
  Signal out;
  for (const auto& term : r.terms()) {
    if (!roots && is_resonant(op, term.exponent())) roots = find_roots(op.characteristic());
    out += particular_term(op, term, roots ? *roots : RootMultiset{});
  }
  return out;
}

std::string_view to_string(DecompositionKind kind) noexcept {
  switch (kind) {
    case DecompositionKind::generic:
      return "generic";
    case DecompositionKind::zero_state_zero_input:
      return "zero_state_zero_input";
    case DecompositionKind::steady_transient:
      return "steady_transient";
  }
  return "generic";
}

Signal SolutionReport::homogeneous() const {
  Signal h;
  for (std::size_t i = 0; i < basis.functions.size(); ++i) h += cmul(Complex{homogeneous_coeffs[i], 0.0}, basis.functions[i]);
  return h;
}

SolutionReport solve_ivp(const IVProblem& problem) {
  const DiffOperator& op = problem.op;
  const std::size_t n = op.order();
  if (problem.x0.size() != n) {
    throw InvalidInput("initial vector has " + std::to_string(problem.x0.size()) + " entries, operator order is " +
                       std::to_string(n));
  }
  for (double v : problem.x0)
    if (!std::isfinite(v)) throw InvalidInput("initial values must be finite");

  const RootMultiset roots = find_roots(op.characteristic());
  SolutionReport report;
  for (const auto& term : problem.input.terms()) report.particular += particular_term(op, term, roots);
  report.basis = homogeneous_basis(roots);

  Matrix<double> w(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto col = initial_vector(Signal(report.basis.functions[k]), n);
    for (std::size_t i = 0; i < n; ++i) w(i, k) = col[i];
  }
  const auto xp0 = initial_vector(report.particular, n);
  std::vector<double> rhs(n);
  for (std::size_t i = 0; i < n; ++i) rhs[i] = problem.x0[i] - xp0[i];

  const LinearSolution sol = solve_linear(w, rhs);
  if (!(sol.condition <= kMaxWronskianCondition)) {
    throw NumericalError("initial-condition system is ill-conditioned (condition estimate " +
                         std::to_string(sol.condition) + ")");
  }
  if (!all_finite(sol.x)) throw NumericalError("initial-condition solve produced non-finite values");
  report.homogeneous_coeffs = sol.x;
  report.total = report.particular + report.homogeneous();
  return report;
}

SolutionReport zero_state(const DiffOperator& op, const Signal& r) {
  auto report = solve_ivp({op, r, std::vector<double>(op.order(), 0.0)});
  report.kind = DecompositionKind::zero_state_zero_input;
  return report;
}

SolutionReport zero_input(const DiffOperator& op, std::vector<double> x0) {
  auto report = solve_ivp({op, Signal{}, std::move(x0)});
  report.kind = DecompositionKind::zero_state_zero_input;
  return report;
}

bool is_hurwitz(const RootMultiset& roots) noexcept {
  for (const auto& r : roots)
    if (!(r.value.real() < -kHurwitzTolerance)) return false;
  return true;
}

SolutionReport steady_transient(const IVProblem& problem) {
  const RootMultiset roots = find_roots(problem.op.characteristic());
  for (const auto& r : roots) {
    if (!(r.value.real() < -kHurwitzTolerance)) {
      throw PreconditionError("operator is not Hurwitz: root " + describe(r.value) + " has non-negative real part");
    }
  }
  bool bounded = true;
  for (const auto& term : problem.input.terms()) {
    if (is_resonant(problem.op, term.exponent())) {
      throw PreconditionError("input exponent " + describe(term.exponent()) + " is resonant");
    }
    if (term.lambda() != 0.0) bounded = false;
  }
  auto report = solve_ivp(problem);
  report.kind = bounded ? DecompositionKind::steady_transient : DecompositionKind::generic;
  return report;
}

}  // namespace accalc
