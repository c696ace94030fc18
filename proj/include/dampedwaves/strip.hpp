#pragma once

#include <span>
#include <vector>

#include "dampedwaves/spectrum.hpp"

namespace dw {

// uniform depth nodes z_j = -depth + j*dz, j = 0..intervals (z = 0 is the top)
struct DepthGrid {
  double depth = 8.0;
  int intervals = 512;

  int nodes() const noexcept { return intervals + 1; }
  int top() const noexcept { return intervals; }
  double dz() const noexcept { return depth / intervals; }
  double z(int j) const noexcept { return -depth + j * dz(); }
  void validate() const;
  friend bool operator==(const DepthGrid&, const DepthGrid&) = default;
};

// Scalar field on the truncated half strip, stored mode by mode:
// column n >= 0 holds u^(n, z_j) for every depth node.
class StripField {
 public:
  StripField() = default;
  StripField(int n_modes, DepthGrid grid);

  int n_modes() const noexcept { return n_; }
  int max_mode() const noexcept { return n_ / 2; }
  const DepthGrid& grid() const noexcept { return grid_; }

  cplx operator()(int n, int j) const;
  cplx& at(int n, int j) { return data_[static_cast<size_t>(n) * grid_.nodes() + j]; }
  std::span<const cplx> column(int n) const;
  std::span<cplx> column(int n);

  SpectrumField layer(int j) const;
  void set_layer(int j, const SpectrumField& f);
  SpectrumField trace() const { return layer(grid_.top()); }

  double max_abs() const noexcept;

  StripField& operator+=(const StripField& o);
  StripField& operator-=(const StripField& o);
  StripField& operator*=(double s);

 private:
  int n_ = 0;
  DepthGrid grid_{};
  std::vector<cplx> data_;
};

StripField operator+(StripField a, const StripField& b);
StripField operator-(StripField a, const StripField& b);

// Physical samples on a points x nodes grid, layer-major.
struct StripSamples {
  int points = 0;
  int nodes = 0;
  std::vector<double> v;

  StripSamples() = default;
  StripSamples(int p, int n) : points(p), nodes(n), v(static_cast<size_t>(p) * n, 0.0) {}
  double& at(int i, int j) { return v[static_cast<size_t>(j) * points + i]; }
  double at(int i, int j) const { return v[static_cast<size_t>(j) * points + i]; }
  std::span<double> layer(int j) { return {v.data() + static_cast<size_t>(j) * points, size_t(points)}; }
  std::span<const double> layer(int j) const {
    return {v.data() + static_cast<size_t>(j) * points, size_t(points)};
  }
};

StripSamples to_physical(const StripField& u, int points);
// transform back and keep modes <= cutoff
StripField to_spectral(const StripSamples& s, int n_modes, const DepthGrid& grid, int cutoff);

StripField apply_multiplier(const StripField& u, const Symbol& m);
StripField horizontal_derivative(const StripField& u);

// 4th-order finite differences in depth (one-sided near both ends),
// applied `order` times
StripField vertical_derivative(const StripField& u, int order = 1);
void stencil_d1(std::span<const cplx> f, double h, std::span<cplx> out);

// value of the first derivative at the top node from a one-sided 5-point stencil
cplx top_derivative(std::span<const cplx> f, double h);

// composite trapezoid over the whole depth grid
double trapezoid(std::span<const double> f, double h);

}  // namespace dw
