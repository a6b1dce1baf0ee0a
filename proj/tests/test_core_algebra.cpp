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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "accalc/error.hpp"
#include "accalc/polynomial.hpp"
#include "accalc/roots.hpp"
#include "support.hpp"

using namespace accalc;
using namespace accalc::testing;

TEST_CASE("polynomial canonical form") {
  CHECK(Polynomial{1.0, 2.0, 0.0, 0.0}.coeffs().size() == 2);
  CHECK_FALSE(Polynomial{}.degree().has_value());
  CHECK_FALSE(Polynomial{0.0, 0.0}.degree().has_value());
  CHECK(Polynomial{0.0, 0.0}.is_zero());
  CHECK(*Polynomial{3.0}.degree() == 0);
  CHECK((Polynomial{1.0, 1.0} - Polynomial{1.0, 1.0}).is_zero());
  CHECK(Polynomial{1.0, 2.0}[7] == 0.0);
}

TEST_CASE("poly_eval examples") {
  CHECK(evaluate(Polynomial{1.0, 1.0}, Complex{0.0, 1.0}) == Complex{1.0, 1.0});
  CHECK(std::abs(evaluate(Polynomial{1.0, 0.0, 1.0}, Complex{0.0, 1.0})) == 0.0);

  // s^3 - 2 s + 5 at 1 + 2j; by hand (1+2j)^2 = -3+4j, (1+2j)^3 = -11-2j,
  // so p = -11-2j - 2-4j + 5 = -8-6j.
  const Polynomial p{5.0, -2.0, 0.0, 1.0};
  const Complex s{1.0, 2.0};
  const Complex brute = power_sum(p, s);
  CHECK(brute.real() == doctest::Approx(-8.0));
  CHECK(brute.imag() == doctest::Approx(-6.0));
  const Complex horner = evaluate(p, s);
  CHECK(horner.real() == doctest::Approx(-8.0).epsilon(1e-15));
  CHECK(horner.imag() == doctest::Approx(-6.0).epsilon(1e-15));
}

TEST_CASE("poly_eval respects conjugation") {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const Polynomial p = random_polynomial(rng, uniform_int(rng, 0, 8), -10.0, 10.0);
    const Complex s{uniform(rng, -3.0, 3.0), uniform(rng, -3.0, 3.0)};
    const Complex a = evaluate(p, std::conj(s));
    const Complex b = std::conj(evaluate(p, s));
    CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)));
  }
}

TEST_CASE("poly_derivative examples") {
  CHECK(derivative(Polynomial{0.0, 0.0, 1.0}, 1) == Polynomial{0.0, 2.0});
  CHECK(derivative(Polynomial{0.0, 0.0, 1.0}, 3).is_zero());
  CHECK(derivative(Polynomial{0.0, 3.0, 0.0, 0.0, 1.0}, 2) == Polynomial{0.0, 0.0, 12.0});
  CHECK(derivative(Polynomial{}, 2).is_zero());
  CHECK(derivative(Polynomial{4.0, 1.0}, 0) == Polynomial{4.0, 1.0});
}

TEST_CASE("derivative composes exactly") {
  Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    const Polynomial p = random_polynomial(rng, uniform_int(rng, 0, 10), -10.0, 10.0);
    CHECK(derivative(derivative(p, 1), 1) == derivative(p, 2));
    CHECK(derivative(derivative(p, 2), 3) == derivative(p, 5));
  }
}

TEST_CASE("poly_roots examples") {
  SUBCASE("s^2 + 1") {
    const auto r = find_roots(Polynomial{1.0, 0.0, 1.0});
    REQUIRE(r.size() == 2);
    CHECK(r.entries()[0].value == Complex{0.0, -1.0});
    CHECK(r.entries()[1].value == Complex{0.0, 1.0});
    CHECK(r.entries()[0].multiplicity == 1);
  }
  SUBCASE("(s + 1)^2") {
    const auto r = find_roots(Polynomial{1.0, 2.0, 1.0});
    REQUIRE(r.size() == 1);
    CHECK(r.entries()[0].multiplicity == 2);
    CHECK(r.entries()[0].value.imag() == 0.0);
    CHECK(r.entries()[0].value.real() == doctest::Approx(-1.0).epsilon(1e-12));
  }
  SUBCASE("s^3 - 1 by residual") {
    const Polynomial p{-1.0, 0.0, 0.0, 1.0};
    const auto r = find_roots(p);
    REQUIRE(r.size() == 3);
    for (const auto& root : r) {
      CHECK(root.multiplicity == 1);
      CHECK(std::abs(evaluate(p, root.value)) <= 1e-10);
    }
    CHECK(r.entries()[0].value.real() == doctest::Approx(-0.5));
    CHECK(std::abs(r.entries()[0].value.imag()) == doctest::Approx(std::sqrt(3.0) / 2.0));
    CHECK(r.entries()[2].value == Complex{1.0, 0.0});
  }
  SUBCASE("non-monic input is normalized") {
    const auto r = find_roots(Polynomial{6.0, 10.0, 4.0});  // 2 (s + 1)(2 s + 3)
    REQUIRE(r.size() == 2);
    CHECK(r.entries()[0].value.real() == doctest::Approx(-1.5));
    CHECK(r.entries()[1].value.real() == doctest::Approx(-1.0));
  }
}

TEST_CASE("poly_roots rejects constants") {
  CHECK_THROWS_AS(find_roots(Polynomial{}), InvalidInput);
  CHECK_THROWS_AS(find_roots(Polynomial{3.0}), InvalidInput);
}

TEST_CASE("multiple roots are clustered") {
  struct Case {
    std::vector<PlantedRoot> roots;
  };
  const std::vector<Case> cases = {
      {{{-1.0, 0.0, 3}}},
      {{{0.0, 0.0, 4}}},
      {{{0.5, 0.0, 5}}},
      {{{-0.3, 1.7, 2}}},
      {{{0.0, 1.0, 3}}},
      {{{-2.0, 0.0, 2}, {1.0, 3.0, 2}}},
      {{{2.0, 0.0, 3}, {-1.0, 0.0, 1}, {0.0, 2.0, 1}}},
  };
  for (const auto& c : cases) {
    const Polynomial p = polynomial_from_roots(c.roots, 2.5);
    const auto found = find_roots(p);
    CHECK(found.total_multiplicity() == planted_degree(c.roots));
    for (const auto& planted : c.roots) {
      const Root& r = found.nearest(Complex{planted.lambda, planted.omega});
      CHECK(r.multiplicity == planted.multiplicity);
      CHECK(std::abs(r.value - Complex{planted.lambda, planted.omega}) <= 1e-8);
    }
  }
}

TEST_CASE("close but distinct roots stay separate") {
  const auto found = find_roots(polynomial_from_roots({{1.0, 0.0, 1}, {1.001, 0.0, 1}}, 1.0));
  CHECK(found.size() == 2);
}

TEST_CASE("root multiset invariants") {
  Rng rng(13);
  for (int i = 0; i < 300; ++i) {
    const std::size_t deg = uniform_int(rng, 1, 8);
    const Polynomial p = random_polynomial(rng, deg, -10.0, 10.0);
    const auto roots = find_roots(p);
    CHECK(roots.total_multiplicity() == deg);
    for (const auto& r : roots) {
      if (r.value.imag() == 0.0) continue;
      bool paired = false;
      for (const auto& other : roots)
        if (other.value == std::conj(r.value) && other.multiplicity == r.multiplicity) paired = true;
      CHECK(paired);
    }
  }
}

TEST_CASE("roots reconstruct the normalized polynomial") {
  Rng rng(14);
  for (int i = 0; i < 300; ++i) {
    const std::size_t deg = uniform_int(rng, 1, 8);
    const Polynomial p = random_polynomial(rng, deg, -10.0, 10.0);
    const auto roots = find_roots(p);
    // expand prod (s - r)^m with complex arithmetic
    std::vector<Complex> prod{Complex{1.0, 0.0}};
    for (const auto& r : roots)
      for (std::size_t k = 0; k < r.multiplicity; ++k) {
        std::vector<Complex> next(prod.size() + 1, Complex{0.0, 0.0});
        for (std::size_t j = 0; j < prod.size(); ++j) {
          next[j + 1] += prod[j];
          next[j] -= r.value * prod[j];
        }
        prod = next;
      }
    REQUIRE(prod.size() == deg + 1);
    const Polynomial monic = p * (1.0 / p.leading());
    double scale = 0.0;
    for (double c : monic.coeffs()) scale = std::max(scale, std::abs(c));
    for (std::size_t k = 0; k <= deg; ++k) CHECK(std::abs(prod[k] - monic[k]) <= 1e-6 * scale);
  }
}
