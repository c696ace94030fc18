#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dampedwaves/errors.hpp"
#include "dampedwaves/evolution.hpp"
#include "dampedwaves/lemmas.hpp"
#include "dampedwaves/wiener.hpp"
#include "oracles.hpp"

using namespace dw;

namespace {

SpectrumField mode(int n_modes, int k, cplx c) {
  SpectrumField f(n_modes);
  f.set(k, c);
  return f;
}

oracle::Mat2 generator(int n, double alpha, double kappa) {
  const double d = alpha * n * n * std::exp(-2 * kappa * n * n);
  const double b = std::exp(-kappa * n * n), c = std::abs(n) * std::exp(-2 * kappa * n * n);
  return {{{-d, -b}, {c, -d}}};
}

double mat_diff(const Mat2& a, const oracle::Mat2& b) {
  double e = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) e = std::max(e, std::abs(a[i][j] - b[i][j]));
  return e;
}

EvolutionOptions opts(int intervals = 256) {
  EvolutionOptions o;
  o.grid = DepthGrid{8.0, intervals};
  return o;
}

double diff(const SpectrumField& a, const SpectrumField& b) { return (a - b).max_abs(); }

}  // namespace

TEST_SUITE("evolution") {

TEST_CASE("linear propagator") {
  SUBCASE("n = 1, alpha = 0, full rotation") {
    const auto e = linear_propagator(1, 0.0, 2 * std::numbers::pi);
    CHECK(mat_diff(e, {{{1, 0}, {0, 1}}}) < 1e-12);
  }
  SUBCASE("n = 0 is nilpotent") {
    const auto e = linear_propagator(0, 3.0, 0.7);
    CHECK(mat_diff(e, {{{1, -0.7}, {0, 1}}}) < 1e-15);
  }
  SUBCASE("n = 2, alpha = 3, dt = 0.1 against the series") {
    const auto e = linear_propagator(2, 3.0, 0.1);
    CHECK(mat_diff(e, oracle::expm_series(generator(2, 3.0, 0.0), 0.1)) < 1e-12);
    // eigenvalues -12 +- i sqrt 2: |det|^{1/2} is the spectral radius
    const double det = e[0][0] * e[1][1] - e[0][1] * e[1][0];
    CHECK(std::sqrt(det) == doctest::Approx(std::exp(-1.2)).epsilon(1e-12));
  }
  SUBCASE("mollified symbols") {
    for (int n : {1, 3, 5})
      CHECK(mat_diff(linear_propagator(n, 1.5, 0.3, 0.02), oracle::expm_series(generator(n, 1.5, 0.02), 0.3)) < 1e-12);
  }
}

TEST_CASE("right-hand sides") {
  const ModelParams p{1.0, 1.0, 0.0, 0.0};
  const Evolver ev(p, opts(), 32);
  SUBCASE("zero state") {
    const SimState s{SpectrumField(32), SpectrumField(32), 0.0};
    const auto c = ev.prepare(s, 1e-12);
    CHECK(rhs_interface(s, c, p).max_abs() == 0.0);
    CHECK(rhs_potential(s, c, p).max_abs() == 0.0);
  }
  SUBCASE("small data linearizes") {
    const double d = 1e-6;
    const SimState s{mode(32, 1, 0.5 * d), mode(32, 1, cplx(0, -0.5 * d)), 0.0};
    const auto c = ev.prepare(s, 1e-14);
    const auto hi = rhs_interface(s, c, p);
    // h_t = Lambda xi + h,11 = d sin x1 - d cos x1
    CHECK(std::abs(hi.coeff(1) - cplx(-0.5 * d, -0.5 * d)) < 10 * d * d);
    CHECK(diff(hi, linear_interface(s, p)) < 10 * d * d);
    CHECK(diff(rhs_potential(s, c, p), linear_potential(s, p)) < 10 * d * d);
  }
  SUBCASE("stale cache") {
    const SimState s{mode(32, 1, 0.01), mode(32, 2, 0.01), 0.0};
    const auto c = ev.prepare(s, 1e-12);
    SimState t = s;
    t.xi.set(3, 0.001);
    CHECK_THROWS_AS(rhs_interface(t, c, p), ConsistencyError);
    CHECK_THROWS_AS(rhs_potential(t, c, p), ConsistencyError);
  }
}

TEST_CASE("flat geometry closed form for the potential") {
  // alpha = 0, h = 0, xi = d cos x1: xi_t = -(1/2)(xi,1^2 + (Lambda xi)^2) + (Lambda xi)^2
  const double d = 0.01;
  const ModelParams p{0.0, 1.0, 0.0, 0.0};
  const Evolver ev(p, opts(512), 32);
  const SimState s{SpectrumField(32), mode(32, 1, 0.5 * d), 0.0};
  const auto c = ev.prepare(s, 1e-14);
  const auto r = rhs_potential(s, c, p);
  // -(d^2/2)(sin^2 + cos^2) + d^2 cos^2 = (d^2/2) cos 2x1
  CHECK(std::abs(r.coeff(0)) < 1e-14);
  CHECK(std::abs(r.coeff(2) - 0.25 * d * d) < 1e-12);
}

TEST_CASE("interface rhs has zero mean") {
  // the flux through the truncated bottom is O(e^{-2 depth}) times the amplitude squared
  const ModelParams p{3.0, 1.0, 0.0, 0.0};
  EvolutionOptions o;
  o.grid = DepthGrid{12.0, 384};
  const Evolver ev(p, o, 64);
  FieldSampler rnd(8);
  for (int t = 0; t < 5; ++t) {
    auto h = rnd.trig(64, 4, true), xi = rnd.trig(64, 4, false);
    h *= 0.025 / wiener_norm(h, 1.0);
    xi *= 0.025 / wiener_norm(xi, 1.0);
    const SimState s{h, xi, 0.0};
    const auto c = ev.prepare(s, 1e-12);
    CHECK(std::abs(rhs_interface(s, c, p).coeff(0)) < 1e-12);
  }
}

TEST_CASE("mollified rhs converges linearly in kappa") {
  const SimState s{mode(32, 2, 0.01), mode(32, 1, 0.02), 0.0};
  auto rhs = [&](double kappa) {
    const ModelParams p{3.0, 1.0, kappa, 0.0};
    const Evolver ev(p, opts(), 32);
    const auto c = ev.prepare(s, 1e-13);
    return rhs_interface(s, c, p);
  };
  const auto r0 = rhs(0.0);
  const double e1 = diff(rhs(1e-3), r0), e2 = diff(rhs(5e-4), r0);
  CHECK(e2 < e1);
  CHECK(e1 / e2 == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("stepping") {
  SUBCASE("linear-only runs match the propagator") {
    const ModelParams p{3.0, 1.0, 0.0, 0.0};
    auto o = opts();
    o.linear_only = true;
    const Evolver ev(p, o, 16);
    SimState s{mode(16, 1, 0.3) + mode(16, 3, cplx(0.1, 0.2)), mode(16, 2, 0.4), 0.0};
    const auto s0 = s;
    for (int k = 0; k < 10; ++k) s = ev.step(s, 0.01);
    for (int n = 1; n < 8; ++n) {
      const auto e = linear_propagator(n, 3.0, 0.1);
      const cplx x = e[0][0] * s0.xi.coeff(n) + e[0][1] * s0.h.coeff(n);
      const cplx h = e[1][0] * s0.xi.coeff(n) + e[1][1] * s0.h.coeff(n);
      CHECK(std::abs(s.xi.coeff(n) - x) < 1e-12);
      CHECK(std::abs(s.h.coeff(n) - h) < 1e-12);
    }
  }
  SUBCASE("zero stays zero") {
    const Evolver ev(ModelParams{}, opts(64), 16);
    SimState s{SpectrumField(16), SpectrumField(16), 0.0};
    for (int k = 0; k < 3; ++k) s = ev.step(s, 0.01);
    CHECK(s.h.max_abs() == 0.0);
    CHECK(s.xi.max_abs() == 0.0);
  }
  SUBCASE("second order under dt halving") {
    const Evolver ev(ModelParams{1.0, 1.0, 0.0, 0.0}, opts(128), 16);
    const SimState s0{mode(16, 1, 0.05) + mode(16, 2, 0.02), mode(16, 1, cplx(0, -0.05)), 0.0};
    auto run = [&](int steps) {
      SimState s = s0;
      for (int k = 0; k < steps; ++k) s = ev.step(s, 0.4 / steps);
      return s;
    };
    const auto a = run(10), b = run(20), c = run(40);
    const double e1 = diff(a.h, b.h) + diff(a.xi, b.xi), e2 = diff(b.h, c.h) + diff(b.xi, c.xi);
    CHECK(std::log2(e1 / e2) == doctest::Approx(2.0).epsilon(0.1));
  }
  SUBCASE("failures carry the state") {
    const Evolver ev(ModelParams{}, opts(64), 16);
    const SimState s{mode(16, 1, 0.48), SpectrumField(16), 0.25};
    try {
      ev.step(s, 0.01);
      FAIL("expected a step error");
    } catch (const StepError& e) {
      CHECK(e.snapshot().t == 0.25);
    }
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS((ModelParams{3.0, 1.0, 0.0, 2.0}.validate(true)), ConfigError);
  CHECK_NOTHROW((ModelParams{3.0, 1.0, 0.0, 1.0}.validate(true)));
  CHECK_THROWS_AS((ModelParams{-1.0, 1.0, 0.0, 0.0}.validate(false)), ConfigError);
}

}
