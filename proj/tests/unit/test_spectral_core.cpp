#include <doctest.h>

#include <cmath>
#include <random>

#include "dampedwaves/errors.hpp"
#include "dampedwaves/spectrum.hpp"
#include "oracles.hpp"

using namespace dw;

namespace {

std::vector<double> samples_of(int n, const std::function<double(double)>& f) {
  std::vector<double> s(n);
  for (int j = 0; j < n; ++j) s[j] = f(grid_point(j, n));
  return s;
}

SpectrumField random_field(int n_modes, int top, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  SpectrumField f(n_modes);
  f.set(0, g(rng));
  for (int n = 1; n <= top; ++n) f.set(n, cplx(g(rng), g(rng)) / double(n * n));
  return f;
}

}  // namespace

TEST_SUITE("spectral_core") {

TEST_CASE("cos on N=8 has coefficients one half at +-1") {
  const auto f = transform(samples_of(8, [](double x) { return std::cos(x); }));
  for (int n = -3; n <= 3; ++n) {
    const double want = std::abs(n) == 1 ? 0.5 : 0.0;
    CHECK(std::abs(f.coeff(n) - want) < 1e-15);
  }
}

TEST_CASE("zero samples give zero coefficients") {
  const auto f = transform(std::vector<double>(16, 0.0));
  CHECK(f.max_abs() == 0.0);
}

TEST_CASE("round trip and naive DFT agree on random samples") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<double> s(64);
  for (auto& v : s) v = u(rng);
  // odd-symmetric Nyquist content is dropped by the convention, so remove it first
  const auto dft = oracle::naive_dft(s);
  for (int j = 0; j < 64; ++j) s[j] -= dft[32].real() * (j % 2 == 0 ? 1.0 : -1.0);
  const auto f = transform(s);
  const auto dft2 = oracle::naive_dft(s);
  for (int n = 0; n < 32; ++n) CHECK(std::abs(f.coeff(n) - dft2[n]) < 1e-14);
  const auto back = inverse_transform(f);
  double err = 0, mx = 0;
  for (int j = 0; j < 64; ++j) {
    err = std::max(err, std::abs(back[j] - s[j]));
    mx = std::max(mx, std::abs(s[j]));
  }
  CHECK(err <= 1e-12 * mx);
}

TEST_CASE("invalid sizes are rejected") {
  CHECK_THROWS_AS(SpectrumField(7), ConfigError);
  CHECK_THROWS_AS(SpectrumField(2), ConfigError);
  CHECK_THROWS_AS(transform(std::vector<double>(5, 0.0)), ConfigError);
}

TEST_CASE("multipliers") {
  SpectrumField c1(16), c2(16);
  c1.set(1, 0.5);
  c2.set(2, 0.5);
  SUBCASE("Lambda cos x = cos x") {
    CHECK(apply_multiplier(c1, symbols::calderon()) == c1);
  }
  SUBCASE("d11 cos x = -cos x") {
    const auto r = apply_multiplier(c1, symbols::d11());
    CHECK(std::abs(r.coeff(1) + 0.5) < 1e-15);
    CHECK(std::abs(r.coeff(-1) + 0.5) < 1e-15);
  }
  SUBCASE("Lambda^{1/2} cos 2x = sqrt 2 cos 2x") {
    const auto r = apply_multiplier(c2, symbols::calderon(0.5));
    CHECK(std::abs(r.coeff(2) - std::sqrt(2.0) * 0.5) < 1e-15);
  }
  SUBCASE("non-finite symbol values are reported") {
    CHECK_THROWS_AS(apply_multiplier(c1, [](int) { return cplx(INFINITY, 0.0); }), NumericError);
  }
}

TEST_CASE("mollify") {
  SpectrumField c1(16), c2(16);
  c1.set(1, 0.5);
  c2.set(2, 0.5);
  CHECK(std::abs(mollify(c1, 0.1).coeff(1) - std::exp(-0.1) / 2) < 1e-15);
  CHECK(std::abs(mollify(c1, 0.1).coeff(1).real() - 0.45242) < 1e-5);
  CHECK(mollify(c1, 0.0) == c1);
  CHECK(std::abs(mollify(c2, 0.5).coeff(2) - 0.5 * std::exp(-2.0)) < 1e-15);
  CHECK_THROWS_AS(mollify(c1, -0.1), ConfigError);
}

TEST_CASE("pointwise product") {
  SpectrumField c1(16);
  c1.set(1, 0.5);
  SUBCASE("cos^2 = 1/2 + cos 2x / 2") {
    const auto p = pointwise_product(c1, c1);
    CHECK(std::abs(p.coeff(0) - 0.5) < 1e-15);
    CHECK(std::abs(p.coeff(2) - 0.25) < 1e-15);
    CHECK(std::abs(p.coeff(1)) < 1e-15);
  }
  SUBCASE("times zero") {
    CHECK(pointwise_product(c1, SpectrumField(16)).max_abs() == 0.0);
  }
  SUBCASE("mismatched sizes") {
    CHECK_THROWS_AS(pointwise_product(c1, SpectrumField(32)), ConfigError);
  }
  SUBCASE("random fields: N=64 against N=256 and the direct convolution") {
    std::mt19937_64 rng(3);
    const auto f = random_field(64, 21, rng);
    const auto g = random_field(64, 21, rng);
    SpectrumField F(256), G(256);
    for (int n = 0; n <= 21; ++n) {
      F.set(n, f.coeff(n));
      G.set(n, g.coeff(n));
    }
    const auto p = pointwise_product(f, g);
    const auto P = pointwise_product(F, G);
    std::vector<cplx> fh(22), gh(22);
    for (int n = 0; n <= 21; ++n) {
      fh[n] = f.coeff(n);
      gh[n] = g.coeff(n);
    }
    const auto conv = oracle::convolve(fh, gh, 21);
    for (int n = 0; n <= dealias_cutoff(64); ++n) {
      CHECK(std::abs(p.coeff(n) - P.coeff(n)) < 1e-10);
      CHECK(std::abs(p.coeff(n) - conv[n]) < 1e-12);
    }
    for (int n = dealias_cutoff(64) + 1; n < 32; ++n) CHECK(p.coeff(n) == cplx(0.0));
  }
}

TEST_CASE("padded grid and cutoff") {
  CHECK(padded_size(64) == 96);
  CHECK(dealias_cutoff(64) == 21);
}

}
