#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dampedwaves/config.hpp"
#include "dampedwaves/diagnostics.hpp"
#include "dampedwaves/errors.hpp"
#include "dampedwaves/simulation.hpp"

using namespace dw;

namespace {

RunConfig linear_run(double t_final) {
  RunConfig cfg;
  cfg.n_modes = 16;
  cfg.grid = DepthGrid{8.0, 64};
  cfg.dt = 1e-2;
  cfg.cadence = 1;
  cfg.t_final = t_final;
  cfg.linear_only = true;
  cfg.initial.preset = "single_mode";
  cfg.initial.amplitude = 0.01;
  cfg.initial.mode = 1;
  return cfg;
}

}  // namespace

TEST_SUITE("diagnostics") {

TEST_CASE("radius of exact log-linear data") {
  SpectrumField f(64);
  for (int n = 0; n < 32; ++n) f.set(n, std::exp(-0.7 * n));
  const auto r = analyticity_radius(f);
  REQUIRE(r.defined);
  CHECK(std::abs(r.rho - 0.7) < 1e-10);
  CHECK(r.rms < 1e-10);
}

TEST_CASE("single mode has no radius") {
  SpectrumField f(64);
  f.set(1, 0.5);
  CHECK_FALSE(analyticity_radius(f).defined);
}

TEST_CASE("denoise drops round-off only") {
  SpectrumField f(16);
  f.set(1, 1.0);
  f.set(2, 1e-12);
  f.set(3, 1e-14);
  const auto d = denoise(f, 1e-13);
  CHECK(d.coeff(2) == f.coeff(2));
  CHECK(d.coeff(3) == cplx(0.0));
}

TEST_CASE("decay rate") {
  Series s;
  for (int i = 0; i <= 20; ++i) s.emplace_back(0.1 * i, std::exp(-3.0 * 0.1 * i));
  CHECK(decay_rate(s, 0.0, 2.0) == doctest::Approx(3.0).epsilon(1e-12));
  s.emplace_back(2.1, 0.0);
  CHECK_THROWS_AS(decay_rate(s, 0.0, 2.2), NumericError);
}

TEST_CASE("monotonicity check") {
  Series zero{{0.0, 0.0}, {0.1, 0.0}, {0.2, 0.0}};
  CHECK(check_lyapunov_monotone(zero, 1e-6).holds);
  Series bump{{0.0, 1.0}, {0.1, 0.5}, {0.2, 0.6}, {0.3, 0.4}};
  CHECK_FALSE(check_lyapunov_monotone(bump, 1e-6).holds);
  CHECK(check_lyapunov_monotone(bump, 1e-6, 0.15).holds);
}

TEST_CASE("energy functional structure") {
  CHECK(energy_functional(std::vector<DiagRecord>{DiagRecord{}}, 1.0) == 0.0);
  std::vector<DiagRecord> frozen;
  for (int i = 0; i <= 10; ++i) {
    DiagRecord r;
    r.t = 0.1 * i;
    r.sobolev_h3 = 0.3;
    r.sobolev_xi3 = 0.4;
    r.bulk = 2.0;
    frozen.push_back(r);
  }
  for (int i = 0; i <= 10; ++i)
    CHECK(energy_functional(frozen, 0.1 * i) == doctest::Approx(0.25 + 2.0 * 0.1 * i));
  frozen[4].bulk = NAN;
  CHECK_THROWS_AS(energy_functional(frozen, 1.0), NumericError);
}

TEST_CASE("linear single-mode run decays at rate alpha") {
  const auto cfg = linear_run(2 * std::numbers::pi);
  const auto tr = run(cfg);
  Series s;
  for (const auto& r : tr.records) s.emplace_back(r.t, r.lyapunov);
  CHECK(decay_rate(s, 0.0, cfg.t_final) == doctest::Approx(3.0).epsilon(0.02));
  // after one period of the slowest mode the envelope is monotone
  const double tr0 = default_transient(tr.states.front().h, tr.states.front().xi);
  CHECK(tr0 == doctest::Approx(2 * std::numbers::pi));
  CHECK(check_lyapunov_monotone(s, 1e-6, 0.0).holds);
}

TEST_CASE("records are finite and nonnegative") {
  auto cfg = linear_run(0.2);
  cfg.linear_only = false;
  cfg.initial.preset = "multi_mode";
  cfg.initial.top_mode = 4;
  cfg.params.mu = 1.0;
  const auto tr = run(cfg);
  for (const auto& r : tr.records) {
    for (double v : {r.sobolev_h3, r.sobolev_xi3, r.wiener_h, r.wiener_xi, r.energy, r.lyapunov, r.bulk}) {
      CHECK(std::isfinite(v));
      CHECK(v >= 0.0);
    }
    CHECK(r.lyapunov == doctest::Approx(r.wiener_h + r.wiener_xi));
    CHECK(std::isfinite(r.budget_xi));
    CHECK_FALSE(r.smallness_flag);
  }
  CHECK(check_budget(tr.records, true, 0.05).holds);
  CHECK(check_budget(tr.records, false, 0.05).holds);
}

}
