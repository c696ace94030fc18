#include <doctest.h>

#include <cmath>

#include "dampedwaves/errors.hpp"
#include "dampedwaves/geometry.hpp"
#include "dampedwaves/lemmas.hpp"

using namespace dw;

namespace {

SpectrumField cosine(int n_modes, double amp) {
  SpectrumField f(n_modes);
  f.set(1, 0.5 * amp);
  return f;
}

// value of a strip field at x1 = 0 on node j
double at_origin(const StripField& u, int j) {
  return to_grid(u.layer(j), u.n_modes())[0];
}

}  // namespace

TEST_SUITE("domain_geometry") {

TEST_CASE("harmonic extension closed form") {
  const DepthGrid g{8.0, 256};
  const auto d = harmonic_extension(cosine(16, 0.1), g);
  for (int j = 0; j < g.nodes(); j += 17) CHECK(std::abs(d(1, j) - 0.05 * std::exp(g.z(j))) < 1e-16);
  CHECK(harmonic_extension(SpectrumField(16), g).max_abs() == 0.0);
}

TEST_CASE("harmonic extension solves Laplace on the interior") {
  // 5-point 4th-order second difference: error about n^6 dz^4 / 90
  const DepthGrid g{8.0, 1024};
  const double dz = g.dz();
  FieldSampler rnd(4);
  auto h = rnd.trig(32, 4, true);
  h *= 0.1 / h.max_abs();
  const auto d = harmonic_extension(h, g);
  double res = 0.0;
  for (int n = 0; n <= 16; ++n)
    for (int j = 2; j < g.nodes() - 2; ++j) {
      const cplx d2 = (-d(n, j + 2) + 16.0 * d(n, j + 1) - 30.0 * d(n, j) + 16.0 * d(n, j - 1) - d(n, j - 2)) /
                      (12.0 * dz * dz);
      res = std::max(res, std::abs(d2 - double(n * n) * d(n, j)));
    }
  CHECK(res <= 1e-6 * d.max_abs());
}

TEST_CASE("flat interface") {
  const auto geo = build_geometry(SpectrumField(16), DepthGrid{8.0, 64});
  CHECK(geo.diffeo_margin == doctest::Approx(1.0));
  for (int j = 0; j < 65; j += 8) {
    CHECK(at_origin(geo.J, j) == doctest::Approx(1.0));
    CHECK(at_origin(geo.A[0][0], j) == doctest::Approx(1.0));
    CHECK(at_origin(geo.A[1][1], j) == doctest::Approx(1.0));
    CHECK(at_origin(geo.A[1][0], j) == 0.0);
    CHECK(geo.Q[0][0].max_abs() == 0.0);
    CHECK(geo.Q[1][1].max_abs() == 0.0);
  }
  CHECK(check_piola(geo) == 0.0);
}

TEST_CASE("h = 0.1 cos x1 at the origin") {
  const DepthGrid g{8.0, 512};
  const auto geo = build_geometry(cosine(64, 0.1), g);
  CHECK(at_origin(geo.J, g.top()) == doctest::Approx(1.1).epsilon(1e-12));
  CHECK(at_origin(geo.A[1][1], g.top()) == doctest::Approx(1.0 / 1.1).epsilon(1e-12));
  CHECK(std::abs(at_origin(geo.A[1][0], g.top())) < 1e-14);
  // Q^1_1 = delta_psi,2
  double diff = 0.0;
  for (int n = 0; n <= 32; ++n)
    for (int j = 0; j < g.nodes(); ++j) diff = std::max(diff, std::abs(geo.Q[0][0](n, j) - geo.d2(n, j)));
  CHECK(diff < 1e-14);
  CHECK(check_piola(geo) <= 1e-8);
  CHECK(check_inverse_identity(geo) <= 1e-10);
}

TEST_CASE("large amplitude is not a diffeomorphism") {
  CHECK_THROWS_AS(build_geometry(cosine(16, 0.95), DepthGrid{8.0, 64}), GeometryError);
}

}
