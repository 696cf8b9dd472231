// Copyright 2026 The rispace authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "rispace/errors.hpp"
#include "rispace/family.hpp"
#include "rispace/gridfn.hpp"
#include "rispace/grid.hpp"
#include "rispace/io.hpp"
#include "rispace/powlog.hpp"
#include "rispace/quadrature.hpp"
#include "support.hpp"

using namespace rispace;

TEST_CASE("make_log_grid basic examples") {
  const GridPtr g = make_log_grid(0.001, 1);
  REQUIRE(g->size() == 4);
  CHECK(g->node(0) == doctest::Approx(0.001).epsilon(1e-14));
  CHECK(g->node(1) == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(g->node(2) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(g->node(3) == 1.0);

  const GridPtr deep = make_log_grid(1e-30, 64);
  CHECK(deep->size() == 1921);
  // Constant consecutive ratios within 1e-12 relative.
  const double r0 = deep->node(1) / deep->node(0);
  for (std::size_t i = 1; i + 1 < deep->size(); ++i) {
    CHECK(oracle::rel_err(deep->node(i + 1) / deep->node(i), r0) < 1e-12);
  }
  CHECK(deep->node(deep->size() - 1) == 1.0);

  CHECK_THROWS_AS(make_log_grid(0.5, 64), Error);
  CHECK_THROWS_AS(make_log_grid(-1.0, 64), Error);
  CHECK_THROWS_AS(make_log_grid(1e-6, 0), Error);

  CHECK(default_grid()->size() >= 16);
}

TEST_CASE("grid cells tile (0,1]") {
  const GridPtr g = make_log_grid(1e-10, 32);
  double total = 0.0;
  for (std::size_t i = 0; i < g->size(); ++i) total += g->cell_weight(i);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("quad_powlog trivial and exact cases") {
  CHECK(quad_powlog(0.0, 0.0, 0.25, 1.0) == doctest::Approx(0.75).epsilon(1e-14));

  // a = -1 closed form (the antiderivative used by the witness integral).
  const double b = -0.25;
  for (double t : {1e-2, 1e-8, 1e-20}) {
    const double expect =
        (std::pow(std::log(2.0 / t), b + 1.0) - std::pow(std::log(2.0), b + 1.0)) /
        (b + 1.0);
    CHECK(oracle::rel_err(quad_powlog(-1.0, b, t, 1.0), expect) < 1e-14);
  }
  // Frozen instance of the same closed form.
  CHECK(quad_powlog(-1.0, -0.25, 1e-8, 1.0) ==
        doctest::Approx(11.175598738844231).epsilon(1e-13));

  // b = 0 power antiderivative.
  CHECK(oracle::rel_err(quad_powlog(-0.5, 0.0, 0.04, 1.0), 2.0 * (1.0 - 0.2)) <
        1e-14);
}

TEST_CASE("quad_powlog general case against independent quadrature") {
  // Frozen value computed with an independent high-precision oracle.
  const double v = quad_powlog(-0.5, 0.5, 1e-6, 1.0);
  CHECK(v == doctest::Approx(3.0930244128761444).epsilon(1e-10));
  const double ora = oracle::integrate_in_u(
      [](double t) { return std::pow(t, -0.5) * std::pow(std::log(2.0 / t), 0.5); },
      1e-6, 1.0);
  CHECK(oracle::rel_err(v, ora) < 1e-8);

  // A few random-ish (a, b) pairs against the oracle.
  for (auto [a, bb] : {std::pair{-0.9, 1.7}, {-0.3, -1.2}, {0.4, 2.0},
                       {-0.99, 0.3}}) {
    const double got = quad_powlog(a, bb, 1e-5, 0.7);
    const double want = oracle::integrate_in_u(
        [a, bb](double t) {
          return std::pow(t, a) * std::pow(std::log(2.0 / t), bb);
        },
        1e-5, 0.7);
    CAPTURE(a);
    CAPTURE(bb);
    CHECK(oracle::rel_err(got, want) < 1e-9);
  }
}

TEST_CASE("quad_powlog additivity property") {
  Rng rng(7);
  for (int k = 0; k < 50; ++k) {
    const double a = rng.uniform(-0.95, 0.5);
    const double b = rng.uniform(-2.0, 2.0);
    const double lo = std::pow(10.0, rng.uniform(-12.0, -1.0));
    const double hi = rng.uniform(0.5, 1.0);
    const double mid = std::sqrt(lo * hi);
    const double whole = quad_powlog(a, b, lo, hi);
    const double split = quad_powlog(a, b, lo, mid) + quad_powlog(a, b, mid, hi);
    CHECK(oracle::rel_err(whole, split) < 1e-9);
  }
}

TEST_CASE("quad_powlog from zero: convergent and divergent") {
  // Convergent tail at zero.
  const double got = quad_powlog(-0.5, 0.0, 0.0, 1.0);
  CHECK(got == doctest::Approx(2.0).epsilon(1e-12));
  // a = -1 with b < -1 converges; b >= -1 diverges.
  CHECK(std::isfinite(quad_powlog(-1.0, -2.0, 0.0, 1.0)));
  CHECK_THROWS_AS(quad_powlog(-1.0, -0.5, 0.0, 1.0), Error);
  CHECK_THROWS_AS(quad_powlog(-1.5, 0.0, 0.0, 1.0), Error);
}

TEST_CASE("integrate on PowLogFn") {
  const PowLogFn f = PowLogFn::atom(1.0, -0.5, 0.0);
  for (double t : {0.9, 0.25, 1e-6}) {
    CHECK(oracle::rel_err(integrate(f, t, 1.0), 2.0 * (1.0 - std::sqrt(t))) <
          1e-13);
  }

  // Linearity: integrate(c f + g) = c integrate(f) + integrate(g).
  Rng rng(11);
  for (int k = 0; k < 20; ++k) {
    const PowLogFn a = PowLogFn::atom(rng.uniform(0.1, 3.0), rng.uniform(-0.9, 0.5),
                                      rng.uniform(-2.0, 2.0));
    const PowLogFn b = PowLogFn::atom(rng.uniform(0.1, 3.0), rng.uniform(-0.9, 0.5),
                                      rng.uniform(-2.0, 2.0));
    const double c = rng.uniform(0.2, 5.0);
    const double lhs = integrate(a * c + b, 1e-8, 1.0);
    const double rhs = c * integrate(a, 1e-8, 1.0) + integrate(b, 1e-8, 1.0);
    CHECK(oracle::rel_err(lhs, rhs) < 1e-9);
  }
}

TEST_CASE("integrate GridFn: trapezoid in u") {
  const GridPtr g = make_log_grid(1e-10, 64);
  const GridFn one = GridFn::constant(g, 1.0);
  // Full span: integral of 1 over the grid span equals 1 - t_min.
  CHECK(integrate(one, 0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-9));

  // Random multi-atom PowLogFn vs its own sampling at 256 points/decade.
  Rng rng(23);
  const GridPtr fine = make_log_grid(1e-8, 256);
  for (int k = 0; k < 5; ++k) {
    PowLogFn f;
    for (int j = 0; j < 8; ++j) {
      f += PowLogFn::atom(rng.uniform(0.1, 2.0), rng.uniform(-0.8, 0.0),
                          rng.uniform(-2.0, 2.0));
    }
    const double exact = integrate(f, 1e-6, 1.0);
    const double sampled = integrate(f.sample(fine), 1e-6, 1.0);
    CHECK(oracle::rel_err(exact, sampled) < 1e-4);
  }

  // Range handling.
  CHECK_THROWS_AS(integrate(one, 0.0, 1.5), Error);
  CHECK_THROWS_AS(integrate(one, 1e-12, 1e-11), Error);

  // +inf propagates through any touched cell.
  GridFn with_inf = one;
  with_inf.values()[g->size() / 2] = kInf;
  CHECK(std::isinf(integrate(with_inf, 0.0, 1.0)));
  // An interval avoiding the infinite cell stays finite.
  CHECK(std::isfinite(integrate(with_inf, 0.9, 1.0)));
}

TEST_CASE("sup_on examples") {
  const PowLogFn increasing = PowLogFn::atom(1.0, 0.5, 0.0);
  CHECK(sup_on(increasing, 0.25, 1.0) == doctest::Approx(1.0).epsilon(1e-12));

  const PowLogFn logq = PowLogFn::atom(1.0, 0.0, 0.25);
  CHECK(sup_on(logq, 1e-8, 1.0) ==
        doctest::Approx(2.0909175986741074).epsilon(1e-12));

  // Interior maximum at the atom critical point u = b/a = 4.
  const PowLogFn humped = PowLogFn::atom(1.0, 0.5, 2.0);
  const double got = sup_on(humped, 1e-12, 1.0);
  CHECK(got == doctest::Approx(3.0622878883331492).epsilon(1e-12));
  const double scan = oracle::dense_sup(
      [&humped](double t) { return humped(t); }, 1e-12, 1.0);
  CHECK(oracle::rel_err(got, scan) < 1e-6);
  CHECK(got >= scan * (1.0 - 1e-12));  // critical point beats the scan

  // The left-endpoint-dominated shape agrees with the dense scan too.
  const PowLogFn steep = PowLogFn::atom(1.0, -0.5, -2.0);
  CHECK(oracle::rel_err(
            sup_on(steep, 1e-12, 1.0),
            oracle::dense_sup([&steep](double t) { return steep(t); }, 1e-12,
                              1.0)) < 1e-6);
}

TEST_CASE("sup_on monotone in the interval") {
  Rng rng(5);
  for (int k = 0; k < 30; ++k) {
    PowLogFn f;
    for (int j = 0; j < 3; ++j) {
      f += PowLogFn::atom(rng.uniform(0.1, 2.0), rng.uniform(-0.6, 0.6),
                          rng.uniform(-1.5, 1.5));
    }
    const double lo = std::pow(10.0, rng.uniform(-10.0, -2.0));
    const double hi = rng.uniform(0.3, 1.0);
    const double inner = sup_on(f, lo * 4.0, hi * 0.5);
    const double outer = sup_on(f, lo, hi);
    CHECK(outer >= inner * (1.0 - 1e-12));
  }

  const GridPtr g = make_log_grid(1e-6, 64);
  const GridFn one = GridFn::constant(g, 1.0);
  CHECK_THROWS_AS(sup_on(one, 1e-9, 1e-8), Error);
}

TEST_CASE("PowLogFn text form") {
  const PowLogFn f = PowLogFn::parse("1*t^-0.5*log^-0.25");
  REQUIRE(f.atoms().size() == 1);
  CHECK(f.atoms()[0].coef == 1.0);
  CHECK(f.atoms()[0].t_exp == -0.5);
  CHECK(f.atoms()[0].log_exp == -0.25);

  const PowLogFn g = PowLogFn::parse("2*t^0*log^1; -1*t^0.25*log^0");
  CHECK(g.atoms().size() == 2);
  const PowLogFn round = PowLogFn::parse(g.to_string());
  CHECK(round.atoms().size() == g.atoms().size());
  for (double t : {1e-9, 0.3, 0.99}) {
    CHECK(oracle::rel_err(g(t), round(t)) < 1e-15);
  }

  // Duplicate atoms merge; zero coefficients drop.
  const PowLogFn merged = PowLogFn::parse("1*t^1*log^0; 2*t^1*log^0");
  REQUIRE(merged.atoms().size() == 1);
  CHECK(merged.atoms()[0].coef == 3.0);

  CHECK_THROWS_AS(PowLogFn::parse("1*t^-0.5"), Error);
  CHECK_THROWS_AS(PowLogFn::parse("x*t^1*log^0"), Error);
  CHECK_THROWS_AS(PowLogFn::parse(""), Error);
}

TEST_CASE("GridFn CSV round trip") {
  const GridPtr g = make_log_grid(1e-4, 16);
  GridFn f = GridFn::sample(g, [](double t) { return 1.0 / std::sqrt(t); });
  f.values()[3] = kInf;

  std::ostringstream out;
  std::vector<double> us(g->size());
  for (std::size_t i = 0; i < g->size(); ++i) us[i] = g->u(i);
  write_gridfn_csv(out, {"t", "value"}, {g->nodes(), f.values()});

  std::istringstream in(out.str());
  const GridFn back = read_gridfn_csv(in, "roundtrip");
  REQUIRE(back.size() == f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (std::isinf(f[i])) {
      CHECK(std::isinf(back[i]));
    } else {
      CHECK(oracle::rel_err(f[i], back[i]) < 1e-15);
    }
  }

  std::istringstream bad("t,value\n0.5,1\n");
  CHECK_THROWS_AS(read_gridfn_csv(bad, "bad"), Error);
}

TEST_CASE("GridFn interpolation is linear in u and clamps") {
  const GridPtr g = make_log_grid(1e-6, 64);
  const GridFn f = GridFn::sample(g, [](double t) { return std::log(2.0 / t); });
  // u itself is linear in u, so interpolation is exact between nodes.
  for (double t : {2e-6, 3.3e-4, 0.123, 0.77}) {
    CHECK(oracle::rel_err(f.eval(t), std::log(2.0 / t)) < 1e-12);
  }
  CHECK(f.eval(1e-9) == f.values().front());
}
