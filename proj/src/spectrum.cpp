#include "dampedwaves/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dampedwaves/errors.hpp"
#include "dampedwaves/fft.hpp"

namespace dw {

namespace {

void check_n(int n) {
  if (n < 4 || n % 2 != 0)
    throw ConfigError("mode count must be even and at least 4, got " + std::to_string(n));
}

void same_n(const SpectrumField& a, const SpectrumField& b) {
  if (a.n_modes() != b.n_modes())
    throw ConfigError("mode count mismatch: " + std::to_string(a.n_modes()) + " vs " +
                      std::to_string(b.n_modes()));
}

}  // namespace

SpectrumField::SpectrumField(int n_modes) : n_(n_modes) {
  check_n(n_modes);
  c_.assign(n_modes / 2 + 1, cplx(0.0, 0.0));
}

cplx SpectrumField::coeff(int n) const {
  const int a = std::abs(n);
  if (a > n_ / 2) return 0.0;
  return n >= 0 ? c_[a] : std::conj(c_[a]);
}

void SpectrumField::set(int n, cplx value) {
  const int a = std::abs(n);
  if (a >= n_ / 2)
    throw ConfigError("mode " + std::to_string(n) + " not representable with N=" +
                      std::to_string(n_));
  if (n == 0) value = value.real();
  c_[a] = n >= 0 ? value : std::conj(value);
}

void SpectrumField::add(int n, cplx value) { set(n, coeff(n) + value); }

double SpectrumField::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& v : c_) m = std::max(m, std::abs(v));
  return m;
}

bool SpectrumField::is_zero_mean() const noexcept {
  if (c_.empty()) return true;
  return std::abs(c_[0]) <= 1e-14 * max_abs();
}

bool SpectrumField::is_finite() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](const cplx& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  });
}

void SpectrumField::remove_mean() noexcept {
  if (!c_.empty()) c_[0] = 0.0;
}

SpectrumField& SpectrumField::operator+=(const SpectrumField& o) {
  same_n(*this, o);
  for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

SpectrumField& SpectrumField::operator-=(const SpectrumField& o) {
  same_n(*this, o);
  for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

SpectrumField& SpectrumField::operator*=(double s) {
  for (auto& v : c_) v *= s;
  return *this;
}

SpectrumField operator+(SpectrumField a, const SpectrumField& b) { return a += b; }
SpectrumField operator-(SpectrumField a, const SpectrumField& b) { return a -= b; }
SpectrumField operator*(double s, SpectrumField a) { return a *= s; }

double grid_point(int j, int points) { return 2.0 * std::numbers::pi * j / points; }

SpectrumField transform(std::span<const double> samples) {
  const int n = static_cast<int>(samples.size());
  check_n(n);
  SpectrumField f(n);
  RealFft::get(n).forward(samples, f.half());
  f.half()[n / 2] = 0.0;
  f.half()[0] = f.half()[0].real();
  return f;
}

std::vector<double> inverse_transform(const SpectrumField& f) { return to_grid(f, f.n_modes()); }

std::vector<double> to_grid(const SpectrumField& f, int points) {
  if (points < f.n_modes() || points % 2 != 0)
    throw ConfigError("grid must be even and at least N");
  std::vector<cplx> c(points / 2 + 1, cplx(0.0, 0.0));
  std::copy(f.half().begin(), f.half().end(), c.begin());
  if (points > f.n_modes()) c[f.n_modes() / 2] = 0.0;
  std::vector<double> x(points);
  RealFft::get(points).inverse(c, x);
  return x;
}

SpectrumField from_grid(std::span<const double> samples, int n_modes, int cutoff) {
  const int m = static_cast<int>(samples.size());
  if (m % 2 != 0 || m < 4) throw ConfigError("grid must be even and at least 4");
  SpectrumField f(n_modes);
  std::vector<cplx> c(m / 2 + 1);
  RealFft::get(m).forward(samples, c);
  const int keep = std::min({cutoff, n_modes / 2 - 1, m / 2 - 1});
  for (int k = 0; k <= keep; ++k) f.half()[k] = c[k];
  f.half()[0] = f.half()[0].real();
  return f;
}

int padded_size(int n_modes) { return 3 * n_modes / 2 + (3 * n_modes / 2) % 2; }

int dealias_cutoff(int n_modes) { return (n_modes - 1) / 3; }

SpectrumField dealias(const SpectrumField& f) {
  SpectrumField out = f;
  const int cut = dealias_cutoff(f.n_modes());
  for (int k = cut + 1; k <= f.max_mode(); ++k) out.half()[k] = 0.0;
  return out;
}

SpectrumField apply_multiplier(const SpectrumField& f, const Symbol& m) {
  SpectrumField out(f.n_modes());
  for (int k = 0; k < f.max_mode(); ++k) {
    const cplx mk = m(k);
    if (!std::isfinite(mk.real()) || !std::isfinite(mk.imag()))
      throw NumericError("multiplier not finite at mode " + std::to_string(k));
    out.half()[k] = mk * f.half()[k];
  }
  out.half()[0] = out.half()[0].real();
  return out;
}

namespace symbols {

Symbol calderon(double power) {
  return [power](int n) -> cplx {
    const double a = std::abs(n);
    return a == 0.0 ? (power == 0.0 ? 1.0 : 0.0) : std::pow(a, power);
  };
}

Symbol d1() {
  return [](int n) { return cplx(0.0, static_cast<double>(n)); };
}

Symbol d11() {
  return [](int n) { return cplx(-static_cast<double>(n) * n, 0.0); };
}

Symbol exp_weight(double lambda) {
  return [lambda](int n) { return cplx(std::exp(lambda * std::abs(n)), 0.0); };
}

Symbol heat(double kappa) {
  return [kappa](int n) { return cplx(std::exp(-kappa * double(n) * n), 0.0); };
}

}  // namespace symbols

SpectrumField mollify(const SpectrumField& f, double kappa) {
  if (!(kappa >= 0.0)) throw ConfigError("mollification strength must be nonnegative");
  if (kappa == 0.0) return f;
  return apply_multiplier(f, symbols::heat(kappa));
}

SpectrumField pointwise_product(const SpectrumField& f, const SpectrumField& g) {
  same_n(f, g);
  const int m = padded_size(f.n_modes());
  auto a = to_grid(dealias(f), m);
  const auto b = to_grid(dealias(g), m);
  for (int j = 0; j < m; ++j) a[j] *= b[j];
  return from_grid(a, f.n_modes(), dealias_cutoff(f.n_modes()));
}

SpectrumField pointwise_map(const SpectrumField& f, const std::function<double(double)>& fn) {
  const int m = padded_size(f.n_modes());
  auto a = to_grid(dealias(f), m);
  for (int j = 0; j < m; ++j) {
    a[j] = fn(a[j]);
    if (!std::isfinite(a[j]))
      throw NumericError("pointwise map not finite at grid point " + std::to_string(j));
  }
  return from_grid(a, f.n_modes(), dealias_cutoff(f.n_modes()));
}

}  // namespace dw
