#include "dampedwaves/strip.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dampedwaves/errors.hpp"

namespace dw {

void DepthGrid::validate() const {
  if (!(depth > 0.0) || !std::isfinite(depth)) throw ConfigError("depth must be positive");
  if (intervals < 8) throw ConfigError("need at least 8 depth intervals");
}

StripField::StripField(int n_modes, DepthGrid grid) : n_(n_modes), grid_(grid) {
  if (n_modes < 4 || n_modes % 2 != 0) throw ConfigError("mode count must be even and >= 4");
  grid.validate();
  data_.assign(static_cast<size_t>(n_modes / 2 + 1) * grid.nodes(), cplx(0.0, 0.0));
}

cplx StripField::operator()(int n, int j) const {
  const int a = std::abs(n);
  if (a > n_ / 2) return 0.0;
  const cplx v = data_[static_cast<size_t>(a) * grid_.nodes() + j];
  return n >= 0 ? v : std::conj(v);
}

std::span<const cplx> StripField::column(int n) const {
  return {data_.data() + static_cast<size_t>(n) * grid_.nodes(), size_t(grid_.nodes())};
}

std::span<cplx> StripField::column(int n) {
  return {data_.data() + static_cast<size_t>(n) * grid_.nodes(), size_t(grid_.nodes())};
}

SpectrumField StripField::layer(int j) const {
  SpectrumField f(n_);
  for (int k = 0; k <= n_ / 2; ++k) f.half()[k] = (*this)(k, j);
  return f;
}

void StripField::set_layer(int j, const SpectrumField& f) {
  if (f.n_modes() != n_) throw ConfigError("layer mode count mismatch");
  for (int k = 0; k <= n_ / 2; ++k) at(k, j) = f.half()[k];
}

double StripField::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

StripField& StripField::operator+=(const StripField& o) {
  if (o.n_ != n_ || !(o.grid_ == grid_)) throw ConfigError("strip field shape mismatch");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

StripField& StripField::operator-=(const StripField& o) {
  if (o.n_ != n_ || !(o.grid_ == grid_)) throw ConfigError("strip field shape mismatch");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

StripField& StripField::operator*=(double s) {
  for (auto& v : data_) v *= s;
  return *this;
}

StripField operator+(StripField a, const StripField& b) { return a += b; }
StripField operator-(StripField a, const StripField& b) { return a -= b; }

StripSamples to_physical(const StripField& u, int points) {
  const int nodes = u.grid().nodes();
  StripSamples s(points, nodes);
  for (int j = 0; j < nodes; ++j) {
    const auto x = to_grid(u.layer(j), points);
    std::copy(x.begin(), x.end(), s.layer(j).begin());
  }
  return s;
}

StripField to_spectral(const StripSamples& s, int n_modes, const DepthGrid& grid, int cutoff) {
  if (s.nodes != grid.nodes()) throw ConfigError("sample layers do not match depth grid");
  StripField u(n_modes, grid);
  for (int j = 0; j < s.nodes; ++j) u.set_layer(j, from_grid(s.layer(j), n_modes, cutoff));
  return u;
}

StripField apply_multiplier(const StripField& u, const Symbol& m) {
  StripField out(u.n_modes(), u.grid());
  for (int k = 0; k < u.max_mode(); ++k) {
    const cplx mk = m(k);
    if (!std::isfinite(mk.real()) || !std::isfinite(mk.imag()))
      throw NumericError("multiplier not finite at mode " + std::to_string(k));
    auto src = u.column(k);
    auto dst = out.column(k);
    for (size_t j = 0; j < src.size(); ++j) dst[j] = mk * src[j];
  }
  return out;
}

StripField horizontal_derivative(const StripField& u) { return apply_multiplier(u, symbols::d1()); }

void stencil_d1(std::span<const cplx> f, double h, std::span<cplx> out) {
  const int n = static_cast<int>(f.size());
  if (n < 5) throw ConfigError("stencil needs at least 5 nodes");
  const double c = 1.0 / (12.0 * h);
  out[0] = c * (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]);
  out[1] = c * (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]);
  for (int j = 2; j < n - 2; ++j) out[j] = c * (f[j - 2] - 8.0 * f[j - 1] + 8.0 * f[j + 1] - f[j + 2]);
  out[n - 2] = c * (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] - f[n - 5]);
  out[n - 1] = c * (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] +
                    3.0 * f[n - 5]);
}

cplx top_derivative(std::span<const cplx> f, double h) {
  const int n = static_cast<int>(f.size());
  return (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] + 3.0 * f[n - 5]) /
         (12.0 * h);
}

StripField vertical_derivative(const StripField& u, int order) {
  StripField cur = u;
  for (int o = 0; o < order; ++o) {
    StripField next(u.n_modes(), u.grid());
    for (int k = 0; k <= u.max_mode(); ++k) stencil_d1(cur.column(k), u.grid().dz(), next.column(k));
    cur = std::move(next);
  }
  return cur;
}

double trapezoid(std::span<const double> f, double h) {
  if (f.size() < 2) return 0.0;
  double s = 0.5 * (f.front() + f.back());
  for (size_t j = 1; j + 1 < f.size(); ++j) s += f[j];
  return s * h;
}

}  // namespace dw
