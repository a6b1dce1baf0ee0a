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
#ifndef ACCALC_SOLVER_HPP
#define ACCALC_SOLVER_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "accalc/diff_operator.hpp"
#include "accalc/roots.hpp"
#include "accalc/signal.hpp"

namespace accalc {

/// Roots with Re < -kHurwitzTolerance count as stable.
inline constexpr double kHurwitzTolerance = 1e-9;
/// |p_L(s)| <= kResonanceTolerance * op.scale_at(s) selects the resonant branch.
inline constexpr double kResonanceTolerance = 1e-8;
/// Initial-condition systems with a larger condition estimate are rejected.
inline constexpr double kMaxWronskianCondition = 1e12;

/**
 * n real solutions of L(x) = 0 spanning the solution space:
 * t^i e^{lambda t} for a real root lambda of multiplicity k, and
 * t^i e^{lambda t} cos(omega t), t^i e^{lambda t} sin(omega t) for a pair
 * lambda +- j omega, 0 <= i < k. Ordered by (Re root, Im root, power), cosine
 * before sine.
 */
struct HomogeneousBasis {
  std::vector<Term> functions;

  std::size_t size() const noexcept { return functions.size(); }
};

HomogeneousBasis homogeneous_basis(const DiffOperator& op);
HomogeneousBasis homogeneous_basis(const RootMultiset& roots);

/// Multiplicity of s as a root of p_L, 0 when s is not resonant.
std::size_t resonance_multiplicity(const DiffOperator& op, Complex s, const RootMultiset& roots);
bool is_resonant(const DiffOperator& op, Complex s);

/**
 * One particular solution of L(x) = r for a single term r with key
 * s = lambda + j omega and degree m.
 *
 * Off resonance the result has the same key and degree, obtained by back
 * substitution on the triangular operator matrix (over the reals when
 * omega == 0, over complex coordinates otherwise). When s is a root of
 * multiplicity mu the ansatz is lifted to t^mu times a degree-m polynomial:
 * the mu lowest coefficients are zero and the rest solve the shifted
 * triangular system.
 */
Term particular_term(const DiffOperator& op, const Term& r);
Term particular_term(const DiffOperator& op, const Term& r, const RootMultiset& roots);

/// Term-wise particular_term, merged.
Signal particular_solution(const DiffOperator& op, const Signal& r);

struct IVProblem {
  DiffOperator op;
  Signal input;
  /// x(0), x'(0), ..., x^(n-1)(0)
  std::vector<double> x0;
};

enum class DecompositionKind { generic, zero_state_zero_input, steady_transient };

std::string_view to_string(DecompositionKind kind) noexcept;

struct SolutionReport {
  Signal particular;
  std::vector<double> homogeneous_coeffs;
  HomogeneousBasis basis;
  Signal total;
  DecompositionKind kind = DecompositionKind::generic;

  /// sum_i b_i basis_i, i.e. total - particular.
  Signal homogeneous() const;
};

/**
 * Full solution of L(x) = r, x(0) = x0: particular solution plus the
 * combination of basis functions matching the initial vector.
 * Throws NumericalError when the t = 0 Wronskian is ill-conditioned.
 */
SolutionReport solve_ivp(const IVProblem& problem);

/// Response to r from rest (x0 = 0).
SolutionReport zero_state(const DiffOperator& op, const Signal& r);
/// Response to x0 with no input.
SolutionReport zero_input(const DiffOperator& op, std::vector<double> x0);

/**
 * Steady-state / transient split: particular = steady part, homogeneous() =
 * transient. Requires a Hurwitz operator and non-resonant input keys
 * (PreconditionError otherwise). kind is steady_transient only when every
 * input key has lambda == 0, i.e. the input is bounded.
 */
SolutionReport steady_transient(const IVProblem& problem);

bool is_hurwitz(const RootMultiset& roots) noexcept;

}  // namespace accalc

#endif  // ACCALC_SOLVER_HPP
