#include <doctest.h>

#include <cmath>

#include "dampedwaves/elliptic.hpp"
#include "dampedwaves/errors.hpp"
#include "dampedwaves/harness.hpp"
#include "dampedwaves/lemmas.hpp"
#include "oracles.hpp"

using namespace dw;

namespace {

SpectrumField mode(int n_modes, int k, cplx c) {
  SpectrumField f(n_modes);
  f.set(k, c);
  return f;
}

std::vector<cplx> col(const StripField& u, int n) {
  auto c = u.column(n);
  return {c.begin(), c.end()};
}

}  // namespace

TEST_SUITE("halfstrip_elliptic") {

TEST_CASE("phi1 closed forms") {
  const DepthGrid g{8.0, 512};
  const auto p = solve_phi1(mode(16, 1, 0.5), g);
  for (int j = 0; j < g.nodes(); j += 31) CHECK(std::abs(p(1, j) - 0.5 * std::exp(g.z(j))) < 1e-16);
  CHECK(solve_phi1(SpectrumField(16), g).max_abs() == 0.0);
  // d_z^2 phi1 at the top for xi = cos 2x1 is Lambda^2 xi = 4 cos 2x1
  const auto xi2 = mode(16, 2, 0.5);
  CHECK(std::abs(apply_multiplier(xi2, symbols::calderon(2.0)).coeff(2) - 2.0) < 1e-15);
  const auto p2 = solve_phi1(xi2, g);
  CHECK(std::abs(vertical_derivative(p2, 2)(2, g.top()) - 2.0) < 1e-4);
  CHECK(std::abs(solve_phi1(mode(16, 1, 0.5), g)(1, g.top()) - 0.5) < 1e-16);
}

TEST_CASE("manufactured solution") {
  const DepthGrid g{8.0, 512};
  StripField g1(16, g), g2(16, g);
  for (int j = 0; j < g.nodes(); ++j) g2.at(1, j) = std::exp(g.z(j));
  const auto r = poisson_divform(g1, g2);
  double err = 0.0;
  for (int j = 0; j < g.nodes(); ++j)
    err = std::max(err, 2.0 * std::abs(r.phi(1, j) - 0.5 * g.z(j) * std::exp(g.z(j))));
  CHECK(err <= 1e-4);
  // d_z phi at the top is cos x1
  CHECK(std::abs(r.dphi_dz(1, g.top()) - 0.5) < 1e-4);
  CHECK_FALSE(r.net_flux);

  const auto rows = manufactured_study(8.0, {128, 256, 512});
  for (size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].order == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("zero data") {
  const DepthGrid g{8.0, 64};
  const auto r = poisson_divform(StripField(16, g), StripField(16, g));
  CHECK(r.phi.max_abs() == 0.0);
  CHECK(r.dphi_dz.max_abs() == 0.0);
}

TEST_CASE("agrees with a finite-difference solver") {
  const DepthGrid g{8.0, 512};
  FieldSampler rnd(21);
  const auto g1 = rnd.strip(16, 5, g);
  const auto g2 = rnd.strip(16, 5, g);
  const auto r = poisson_divform(g1, g2);
  const double scale = std::max(g1.max_abs(), g2.max_abs());
  for (int n = 0; n <= 5; ++n) {
    const auto fd = oracle::fd_poisson(n, col(g1, n), col(g2, n), g.depth);
    double err = 0.0;
    for (int j = 0; j < g.nodes(); ++j) err = std::max(err, std::abs(fd[j] - r.phi(n, j)));
    const double tol = (30.0 * g.dz() * g.dz() + std::exp(-g.depth)) * scale;
    CHECK_MESSAGE(err <= tol, "mode " << n << " err " << err << " tol " << tol);
  }
}

TEST_CASE("bottom diagnostics") {
  const DepthGrid g{8.0, 128};
  StripField g1(16, g), g2(16, g);
  for (int j = 0; j < g.nodes(); ++j) g2.at(0, j) = 1.0;
  const auto r = poisson_divform(g1, g2);
  CHECK(r.net_flux);
  CHECK(r.tail_warning);
}

TEST_CASE("picard iteration") {
  const DepthGrid g{8.0, 512};
  SUBCASE("flat interface gives phi2 = 0 at once") {
    const auto geo = build_geometry(SpectrumField(64), g);
    const auto sol = solve_phi2(geo, solve_phi1(mode(64, 1, 0.3), g));
    CHECK(sol.phi2.max_abs() == 0.0);
    CHECK(sol.picard_iters == 1);
    CHECK(sol.traces.dphi2_dz0.max_abs() == 0.0);
    CHECK(sol.traces.d2phi2_dz0.max_abs() == 0.0);
  }
  SUBCASE("h = 0.05 cos x1, xi = 0.05 sin x1") {
    const auto geo = build_geometry(mode(64, 1, 0.025), g);
    const auto sol = solve_phi2(geo, solve_phi1(mode(64, 1, cplx(0.0, -0.025)), g));
    CHECK(sol.picard_iters <= 20);
    CHECK(sol.residual <= 1e-8);
    for (size_t i = 1; i < sol.increments.size(); ++i)
      CHECK(sol.increments[i] < 0.5 * sol.increments[i - 1]);
    CHECK(stencil_residual(sol, geo) <= 1e-6);
    // the two top second-derivative evaluations agree
    const auto d = sol.traces.d2phi2_dz0 - sol.traces.d2phi2_dz0_kernel;
    CHECK(d.max_abs() <= 1e-5 * sol.traces.d2phi2_dz0.max_abs());
  }
  SUBCASE("no convergence within max_iter") {
    const auto geo = build_geometry(mode(64, 1, 0.3), g);
    CHECK_THROWS_AS(solve_phi2(geo, solve_phi1(mode(64, 1, 0.3), g), EllipticOptions{1e-14, 3}),
                    ContractionError);
  }
}

TEST_CASE("kernel bounds with the swapped order") {
  const auto rows = kernel_bounds(4, 8.0, 512);
  double sharp = 0.0;
  for (const auto& r : rows) {
    // trapezoid overshoot is at most (k dz)^2 / 12
    CHECK_MESSAGE(r.swapped <= r.bound * (1 + 1e-3), "k=" << r.k << " j=" << r.j << " l=" << r.l);
    sharp = std::max(sharp, r.swapped / r.bound);
  }
  CHECK(sharp >= 0.999);
  // the literal order grows with the truncation depth for Pi_1 with j even
  const auto deep = kernel_bounds(1, 16.0, 1024);
  CHECK(deep.front().literal > 1.5 * rows.front().literal);
}

TEST_CASE("elliptic estimate ensemble") {
  for (const auto& r : elliptic_bounds(5, 3)) CHECK(r.report.holds);
}

}
