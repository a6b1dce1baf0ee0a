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
#ifndef ACCALC_ROOTS_HPP
#define ACCALC_ROOTS_HPP

#include <cstddef>
#include <vector>

#include "accalc/polynomial.hpp"

namespace accalc {

struct Root {
  Complex value;
  std::size_t multiplicity = 1;
};

/**
 * Roots of a real polynomial counted with multiplicity.
 *
 * Entries are sorted by (real part, imaginary part). Non-real roots come in
 * exact conjugate pairs with equal multiplicity, and real roots have an
 * imaginary part of exactly zero.
 */
class RootMultiset {
 public:
  RootMultiset() = default;
  explicit RootMultiset(std::vector<Root> entries);

  const std::vector<Root>& entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  std::size_t size() const noexcept { return entries_.size(); }
  /// Sum of multiplicities.
  std::size_t total_multiplicity() const noexcept;
  /// Entry closest to s; the multiset must be non-empty.
  const Root& nearest(Complex s) const;

 private:
  std::vector<Root> entries_;
};

/// Relative distance under which two converged roots are one root:
/// tol = kClusterTolerance * (1 + max |root|).
inline constexpr double kClusterTolerance = 1e-6;

/**
 * All complex roots of p with multiplicities.
 *
 * Works on the monic normalization p / leading(p) with Aberth-Ehrlich
 * iteration. Approximations closer than the cluster tolerance are merged into
 * their arithmetic mean; wider groups (a multiple root of order mu splits by
 * roughly eps^(1/mu)) are merged only when the derivatives p, p', ...,
 * p^(mu-1) all vanish to rounding level at the refined centre. Roots within
 * the cluster tolerance of the real axis are snapped onto it.
 *
 * Throws InvalidInput for constant or zero polynomials, NumericalError when
 * the iteration does not produce a conjugate-symmetric result.
 */
RootMultiset find_roots(const Polynomial& p);

}  // namespace accalc

#endif  // ACCALC_ROOTS_HPP
