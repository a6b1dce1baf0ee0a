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
#include "accalc/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "accalc/error.hpp"

namespace accalc {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIterations = 5000;
// Groups wider than the cluster tolerance but within this radius are checked
// for a genuine multiple root.
constexpr double kLooseClusterRadius = 2e-2;
// |p^(j)(c)| relative to its magnitude bound below which the derivative counts
// as vanishing.
constexpr double kVanishingResidual = 1e-11;

double residual_ratio(const Polynomial& p, Complex z) {
  const double bound = magnitude_bound(p, std::abs(z));
  if (bound == 0.0) return 0.0;
  return std::abs(evaluate(p, z)) / bound;
}

std::vector<Complex> aberth(const Polynomial& monic) {
  const auto c = monic.coeffs();
  const std::size_t n = c.size() - 1;
  if (n == 1) return {Complex{-c[0], 0.0}};

  const Polynomial dp = derivative(monic);

  // Initial guesses on a circle around the root centroid, radius from the
  // Cauchy bound, with an angular offset that breaks conjugate symmetry.
  const Complex centre{-c[n - 1] / static_cast<double>(n), 0.0};
  double radius = 0.0;
  for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, std::abs(c[k]));
  radius = std::min(1.0 + radius, 1.0 + std::abs(centre) + std::pow(std::abs(c[0]) + 1.0, 1.0 / n));
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    z[k] = centre + std::polar(radius, angle);
  }

  std::vector<bool> done(n, false);
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const Complex pz = evaluate(monic, z[i]);
      if (std::abs(pz) <= 4.0 * kEps * magnitude_bound(monic, std::abs(z[i]))) {
        done[i] = true;
        continue;
      }
      all_done = false;
      const Complex dpz = evaluate(dp, z[i]);
      Complex repulsion{0.0, 0.0};
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      const Complex ratio = (dpz == Complex{0.0, 0.0}) ? Complex{1.0, 0.0} : pz / dpz;
      const Complex step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
        throw NumericalError("root iteration produced a non-finite step");
      }
      z[i] -= step;
      if (std::abs(step) <= 2.0 * kEps * std::abs(z[i])) done[i] = true;
    }
    if (all_done) break;
  }
  return z;
}

struct Cluster {
  std::vector<Complex> members;
  Complex centre;
};

Complex mean(const std::vector<Complex>& v) {
  Complex acc{0.0, 0.0};
  for (const auto& x : v) acc += x;
  return acc / static_cast<double>(v.size());
}

// Newton on p^(mu-1), whose simple root is a mu-fold root of p. The refined
// point is kept only if it stays inside the cluster and lowers the residual.
Complex refine(const Polynomial& p, Complex start, std::size_t mu, double radius) {
  const Polynomial f = derivative(p, mu - 1);
  const Polynomial df = derivative(f);
  Complex z = start;
  double best = std::abs(evaluate(f, z));
  Complex best_z = z;
  for (int iter = 0; iter < 50 && best > 0.0; ++iter) {
    const Complex d = evaluate(df, z);
    if (d == Complex{0.0, 0.0}) break;
    const Complex next = z - evaluate(f, z) / d;
    if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) break;
    if (std::abs(next - start) > radius) break;
    z = next;
    const double r = std::abs(evaluate(f, z));
    if (r < best) {
      best = r;
      best_z = z;
    } else if (iter > 3) {
      break;
    }
  }
  return best_z;
}

bool is_multiple_root(const Polynomial& p, Complex c, std::size_t mu) {
  for (std::size_t j = 0; j < mu; ++j)
    if (residual_ratio(derivative(p, j), c) > kVanishingResidual) return false;
  return true;
}

std::vector<Cluster> cluster(const Polynomial& monic, const std::vector<Complex>& raw) {
  double scale = 1.0;
  for (const auto& z : raw) scale = std::max(scale, 1.0 + std::abs(z));
  const double tight = kClusterTolerance * scale;
  const double loose = kLooseClusterRadius * scale;

  std::vector<Cluster> clusters;
  for (const auto& z : raw) clusters.push_back({{z}, z});

  // Agglomerate closest pairs first until no admissible merge remains.
  for (;;) {
    struct Candidate {
      double distance;
      std::size_t a, b;
    };
    std::vector<Candidate> candidates;
    for (std::size_t a = 0; a < clusters.size(); ++a)
      for (std::size_t b = a + 1; b < clusters.size(); ++b) {
        const double d = std::abs(clusters[a].centre - clusters[b].centre);
        if (d <= loose) candidates.push_back({d, a, b});
      }
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& x, const Candidate& y) { return x.distance < y.distance; });

    bool merged = false;
    for (const auto& cand : candidates) {
      std::vector<Complex> members = clusters[cand.a].members;
      members.insert(members.end(), clusters[cand.b].members.begin(), clusters[cand.b].members.end());
      const Complex m = mean(members);
      const std::size_t mu = members.size();
      double spread = 0.0;
      for (const auto& x : members) spread = std::max(spread, std::abs(x - m));
      Complex centre = m;
      bool accept = cand.distance <= tight;
      if (!accept) {
        centre = refine(monic, m, mu, std::max(2.0 * spread, tight));
        accept = is_multiple_root(monic, centre, mu);
      }
      if (accept) {
        clusters[cand.a] = {std::move(members), centre};
        clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(cand.b));
        merged = true;
        break;
      }
    }
    if (!merged) break;
  }

  for (auto& c : clusters) {
    double spread = 0.0;
    for (const auto& x : c.members) spread = std::max(spread, std::abs(x - c.centre));
    c.centre = refine(monic, c.centre, c.members.size(), std::max(2.0 * spread, tight));
  }
  return clusters;
}

}  // namespace

RootMultiset::RootMultiset(std::vector<Root> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), [](const Root& a, const Root& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
}

std::size_t RootMultiset::total_multiplicity() const noexcept {
  std::size_t n = 0;
  for (const auto& r : entries_) n += r.multiplicity;
  return n;
}

const Root& RootMultiset::nearest(Complex s) const {
  if (entries_.empty()) throw InvalidInput("nearest root requested from an empty root set");
  return *std::min_element(entries_.begin(), entries_.end(), [s](const Root& a, const Root& b) {
    return std::abs(a.value - s) < std::abs(b.value - s);
  });
}

RootMultiset find_roots(const Polynomial& p) {
  const auto deg = p.degree();
  if (!deg || *deg == 0) throw InvalidInput("root finding needs a polynomial of degree >= 1");
  for (double c : p.coeffs())
    if (!std::isfinite(c)) throw InvalidInput("polynomial has non-finite coefficients");

  const Polynomial monic = p * (1.0 / p.leading());
  const std::vector<Complex> raw = aberth(monic);
  std::vector<Cluster> clusters = cluster(monic, raw);

  double scale = 1.0;
  for (const auto& c : clusters) scale = std::max(scale, 1.0 + std::abs(c.centre));
  const double tol = kClusterTolerance * scale;

  std::vector<Root> real_roots;
  std::vector<Root> upper;
  std::vector<Root> lower;
  for (const auto& c : clusters) {
    Root r{c.centre, c.members.size()};
    if (std::abs(r.value.imag()) <= tol) {
      real_roots.push_back({Complex{r.value.real(), 0.0}, r.multiplicity});
    } else if (r.value.imag() > 0.0) {
      upper.push_back(r);
    } else {
      lower.push_back(r);
    }
  }
  if (upper.size() != lower.size()) throw NumericalError("complex roots are not conjugate-paired");

  std::vector<Root> out = std::move(real_roots);
  std::vector<bool> used(lower.size(), false);
  for (const auto& u : upper) {
    std::size_t best = lower.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < lower.size(); ++i) {
      if (used[i] || lower[i].multiplicity != u.multiplicity) continue;
      const double d = std::abs(lower[i].value - std::conj(u.value));
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    if (best == lower.size()) throw NumericalError("complex roots are not conjugate-paired");
    used[best] = true;
    const Complex v = 0.5 * (u.value + std::conj(lower[best].value));
    out.push_back({v, u.multiplicity});
    out.push_back({std::conj(v), u.multiplicity});
  }
  return RootMultiset(std::move(out));
}

}  // namespace accalc
