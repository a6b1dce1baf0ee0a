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
#include <numbers>

#include "accalc/diff_operator.hpp"
#include "accalc/error.hpp"
#include "accalc/signal.hpp"
#include "accalc/term.hpp"
#include "support.hpp"

using namespace accalc;
using namespace accalc::testing;

namespace {

bool coeffs_close(const Term& a, const Term& b, double rel) {
  const double scale = std::max({1e-300, a.p().max_abs_coeff(), a.q().max_abs_coeff(), b.p().max_abs_coeff(),
                                 b.q().max_abs_coeff()});
  return a.lambda() == b.lambda() && a.omega() == b.omega() &&
         std::max((a.p() - b.p()).max_abs_coeff(), (a.q() - b.q()).max_abs_coeff()) <= rel * scale;
}

Term random_oscillating(Rng& rng, std::size_t max_degree) {
  return random_term(rng, uniform(rng, -3.0, 3.0), uniform(rng, 0.5, 5.0), uniform_int(rng, 0, max_degree));
}

}  // namespace

TEST_CASE("term canonical form") {
  const Term neg(0.0, -2.0, Polynomial{}, Polynomial{0.0, 1.0});  // t sin(-2t)
  CHECK(neg.omega() == 2.0);
  CHECK(neg.q() == Polynomial{0.0, -1.0});
  const Term real(1.0, 0.0, Polynomial{1.0}, Polynomial{5.0});
  CHECK(real.q().is_zero());
  CHECK(Term(0.0, 1.0, Polynomial{}, Polynomial{}).is_zero());
  CHECK(*Term(0.0, 1.0, Polynomial{1.0}, Polynomial{0.0, 0.0, 2.0}).degree() == 2);
}

TEST_CASE("cmul examples") {
  const double alpha = 1.25;
  const double beta = -0.75;
  const double w = 3.0;
  const Term x(0.0, w, Polynomial{alpha}, Polynomial{beta});
  const Term jx = cmul(Complex{0.0, 1.0}, x);
  // j . (alpha cos + beta sin) = -alpha sin + beta cos
  CHECK(jx.p() == Polynomial{beta});
  CHECK(jx.q() == Polynomial{-alpha});
  CHECK(cmul(Complex{1.0, 0.0}, x) == x);

  const double amp = 1.7;
  const double phi = 0.6;
  const Term z = cmul(std::polar(amp, phi), Term(0.0, w, Polynomial{1.0}));
  for (int i = 0; i <= 20; ++i) {
    const double t = 0.1 * i;
    CHECK(z(t) == doctest::Approx(amp * std::cos(w * t + phi)).epsilon(1e-13));
  }
}

TEST_CASE("cmul rejects complex scalars on real spaces") {
  const Term x(-1.0, 0.0, Polynomial{1.0, 2.0});
  CHECK_THROWS_AS(cmul(Complex{0.0, 1.0}, x), StructureError);
  CHECK(cmul(Complex{2.0, 0.0}, x).p() == Polynomial{2.0, 4.0});
}

TEST_CASE("complex structure axioms") {
  Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    const Term x = random_oscillating(rng, 4);
    const Complex g{uniform(rng, -3, 3), uniform(rng, -3, 3)};
    const Complex d{uniform(rng, -3, 3), uniform(rng, -3, 3)};
    CHECK(coeffs_close(cmul(g * d, x), cmul(g, cmul(d, x)), 1e-12));
    const Term sum = cmul(g + d, x);
    const Term a = cmul(g, x);
    const Term b = cmul(d, x);
    CHECK(coeffs_close(sum, Term(x.lambda(), x.omega(), a.p() + b.p(), a.q() + b.q()), 1e-12));
    CHECK(cmul(Complex{1.0, 0.0}, x) == x);
    CHECK(cmul(g, x).lambda() == x.lambda());
    CHECK(cmul(g, x).omega() == x.omega());
  }
}

TEST_CASE("differentiate examples") {
  const double alpha = 2.0;
  const double beta = 3.0;
  const double w = 1.5;
  const Term x(0.0, w, Polynomial{alpha}, Polynomial{beta});
  const Term dx = differentiate(x);
  CHECK(dx.p() == Polynomial{w * beta});
  CHECK(dx.q() == Polynomial{-w * alpha});
  CHECK(dx == cmul(Complex{0.0, w}, x));

  const double lambda = -0.7;
  const Term te(lambda, 0.0, Polynomial{0.0, 1.0});  // t e^{lambda t}
  CHECK(differentiate(te) == Term(lambda, 0.0, Polynomial{1.0, lambda}));

  const Term damped(lambda, w, Polynomial{alpha}, Polynomial{beta});
  CHECK(differentiate(damped) == cmul(Complex{lambda, w}, damped));
}

TEST_CASE("differentiate is multiplication plus polynomial derivative") {
  Rng rng(22);
  for (int i = 0; i < 300; ++i) {
    const Term x = random_oscillating(rng, 5);
    const Term lhs = differentiate(x);
    const Term m = cmul(x.exponent(), x);
    const Term rhs(x.lambda(), x.omega(), m.p() + derivative(x.p()), m.q() + derivative(x.q()));
    CHECK(coeffs_close(lhs, rhs, 1e-15));
    CHECK(lhs.lambda() == x.lambda());
    CHECK(lhs.omega() == x.omega());
  }
}

TEST_CASE("differentiate agrees with finite differences") {
  Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    const auto [l, w] = random_key(rng);
    const Term x = random_term(rng, l, w, uniform_int(rng, 0, 4));
    const double t = uniform(rng, 0.0, 1.0);
    const double fd = central_first([&x](double s) { return x(s); }, t, 1e-4);
    CHECK(close(differentiate(x)(t), fd, 1e-4));
  }
}

TEST_CASE("coordinates use gamma = p - j q") {
  const Term x(0.0, 2.0, Polynomial{1.0, 2.0}, Polynomial{3.0});
  const auto g = coordinates(x);
  REQUIRE(g.size() == 2);
  CHECK(g[0] == Complex{1.0, -3.0});
  CHECK(g[1] == Complex{2.0, 0.0});
  CHECK(from_coordinates(0.0, 2.0, g) == x);
}

TEST_CASE("operator matrix examples") {
  SUBCASE("s^2 at s = 1, m = 1") {
    const DiffOperator op({0.0, 0.0, 1.0});
    const auto a = operator_matrix(op, Complex{1.0, 0.0}, 1);
    CHECK(a(0, 0) == Complex{1.0, 0.0});
    CHECK(a(0, 1) == Complex{2.0, 0.0});
    CHECK(a(1, 0) == Complex{0.0, 0.0});
    CHECK(a(1, 1) == Complex{1.0, 0.0});
    // Hand oracle: (t e^t)'' = (t e^t + e^t)' = t e^t + 2 e^t, so L u_1 = 2 u_0 + u_1,
    // and L u_0 = u_0.
    const Term lu1 = apply(op, Term(1.0, 0.0, Polynomial{0.0, 1.0}));
    CHECK(lu1.p()[0] == doctest::Approx(2.0));
    CHECK(lu1.p()[1] == doctest::Approx(1.0));
  }
  SUBCASE("m = 0 is p_L(s)") {
    const DiffOperator op({2.0, -1.0, 0.5, 3.0});
    const Complex s{0.3, 1.1};
    const auto a = operator_matrix(op, s, 0);
    CHECK(a.rows() == 1);
    CHECK(a(0, 0) == evaluate(op.characteristic(), s));
  }
  SUBCASE("resonant diagonal vanishes") {
    const DiffOperator op({1.0, 0.0, 1.0});
    const auto a = operator_matrix(op, Complex{0.0, 1.0}, 2);
    for (std::size_t k = 0; k < 3; ++k) CHECK(std::abs(a(k, k)) == 0.0);
  }
}

TEST_CASE("apply examples") {
  const DiffOperator op({2.0, 3.0, 1.0});
  const double w = 2.0;
  const Term x(0.0, w, Polynomial{0.4}, Polynomial{-1.3});
  const Term lx = apply(op, x);
  const Term expected = cmul(evaluate(op.characteristic(), Complex{0.0, w}), x);
  CHECK(coeffs_close(lx, expected, 1e-14));

  // d^2/dt^2 (t e^t) = (t + 2) e^t
  const Term y = apply(DiffOperator({0.0, 0.0, 1.0}), Term(1.0, 0.0, Polynomial{0.0, 1.0}));
  CHECK(y == Term(1.0, 0.0, Polynomial{2.0, 1.0}));

  CHECK(apply(op, Term(0.5, 1.0, Polynomial{})).is_zero());
}

TEST_CASE("apply matches the operator matrix") {
  Rng rng(24);
  for (int i = 0; i < 200; ++i) {
    const DiffOperator op = random_operator(rng, uniform_int(rng, 1, 6));
    const Term x = random_oscillating(rng, 5);
    const auto gamma = coordinates(x);
    const auto a = operator_matrix(op, x.exponent(), gamma.size() - 1);
    std::vector<Complex> image(gamma.size());
    for (std::size_t k = 0; k < gamma.size(); ++k)
      for (std::size_t l = k; l < gamma.size(); ++l) image[k] += a(k, l) * gamma[l];
    const Term via_matrix = from_coordinates(x.lambda(), x.omega(), image);
    CHECK(coeffs_close(apply(op, x), via_matrix, 1e-12));
  }
}

TEST_CASE("apply agrees with finite differences for low orders") {
  Rng rng(25);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = uniform_int(rng, 1, 2);
    const DiffOperator op = random_operator(rng, n);
    const Signal x = random_signal(rng, 3, 3);
    const double t = uniform(rng, 0.0, 1.0);
    const auto f = [&x](double s) { return x(s); };
    const auto a = op.coeffs();
    double expected = a[0] * x(t) + a[1] * central_first(f, t, 1e-4);
    if (n == 2) expected += a[2] * central_second(f, t, 1e-4);
    CHECK(close(apply(op, x)(t), expected, 1e-4));
  }
}

TEST_CASE("signal algebra") {
  const Signal cos_t(Term(0.0, 1.0, Polynomial{1.0}));
  const Signal sin_t(Term(0.0, 1.0, Polynomial{}, Polynomial{1.0}));
  const Signal sum = cos_t + sin_t;
  REQUIRE(sum.size() == 1);
  CHECK(sum.terms()[0] == Term(0.0, 1.0, Polynomial{1.0}, Polynomial{1.0}));

  Rng rng(26);
  const Signal a = random_signal(rng, 3, 3);
  CHECK((a + (-1.0) * a).empty());
  CHECK((a - a).empty());
  CHECK((0.0 * a).empty());

  // keys within the tolerance merge
  Signal s(Term(1.0, 2.0, Polynomial{1.0}));
  s += Term(1.0 + 1e-10, 2.0 - 1e-10, Polynomial{1.0});
  CHECK(s.size() == 1);
  CHECK(s.terms()[0].p() == Polynomial{2.0});
  s += Term(1.0 + 1e-6, 2.0, Polynomial{1.0});
  CHECK(s.size() == 2);
}

TEST_CASE("signal apply distributes over addition") {
  Rng rng(27);
  for (int i = 0; i < 100; ++i) {
    const DiffOperator op = random_operator(rng, uniform_int(rng, 1, 4));
    const Signal a = random_signal(rng, 3, 3);
    const Signal b = random_signal(rng, 3, 3);
    const Signal lhs = apply(op, a + b);
    const Signal rhs = apply(op, a) + apply(op, b);
    for (int k = 0; k <= 10; ++k) {
      const double t = 0.1 * k;
      CHECK(close(lhs(t), rhs(t), 1e-9));
    }
  }
}

TEST_CASE("evaluate examples") {
  CHECK(Signal{}(3.7) == 0.0);
  CHECK(Signal(Term(0.0, 0.0, Polynomial{0.0, 0.0, 1.0}))(3.0) == 9.0);
  CHECK(Signal(Term(-1.0, 2.0, Polynomial{1.0}, Polynomial{1.0}))(0.0) == 1.0);
}

TEST_CASE("phasor conversion") {
  const double w = 2.5;
  const Phasor unit = sinusoid_to_phasor(1.0, w, 0.0);
  CHECK(unit.value == Complex{1.0, 0.0});
  CHECK(phasor_to_term(unit) == Term(0.0, w, Polynomial{1.0}));

  const Phasor quarter = sinusoid_to_phasor(1.0, w, std::numbers::pi / 2.0);
  CHECK(quarter.value.real() == doctest::Approx(0.0));
  CHECK(quarter.value.imag() == doctest::Approx(1.0));
  const Term minus_sin = phasor_to_term(quarter);
  CHECK(minus_sin.q()[0] == doctest::Approx(-1.0));
  CHECK(std::abs(minus_sin.p()[0]) < 1e-15);

  const Phasor p = sinusoid_to_phasor(2.0, w, std::numbers::pi / 4.0);
  CHECK(p.value.real() == doctest::Approx(std::sqrt(2.0)));
  CHECK(p.value.imag() == doctest::Approx(std::sqrt(2.0)));
  const Term z = phasor_to_term(p);
  for (int i = 0; i <= 10; ++i) {
    const double t = 0.1 * i;
    CHECK(std::abs(z(t) - 2.0 * std::cos(w * t + std::numbers::pi / 4.0)) <= 1e-12);
  }

  CHECK_THROWS_AS(sinusoid_to_phasor(1.0, 0.0, 0.0), InvalidInput);
  CHECK_THROWS_AS(sinusoid_to_phasor(1.0, -1.0, 0.0), InvalidInput);
  CHECK_THROWS_AS(phasor_to_term(Phasor{0.0, Complex{1.0, 0.0}}), InvalidInput);
}

TEST_CASE("operator validation") {
  CHECK_THROWS_AS(DiffOperator({1.0}), InvalidInput);
  CHECK_THROWS_AS(DiffOperator({1.0, 0.0}), InvalidInput);
  CHECK(DiffOperator({1.0, 2.0, 3.0}).order() == 2);
}
