#pragma once

#include <array>
#include <vector>

#include "dampedwaves/geometry.hpp"
#include "dampedwaves/spectrum.hpp"
#include "dampedwaves/strip.hpp"

namespace dw {

struct PoissonResult {
  StripField phi;
  StripField dphi_dz;       // from the kernel formula, not a stencil
  bool net_flux = false;    // mode 0 carries flux through the bottom
  bool tail_warning = false;
  double bottom_level = 0;  // max |g^(n, -depth)| / max |g|
};

// Solves  Laplace(phi) = div g  on the truncated strip, phi = 0 on top,
// decaying at depth; below -depth mode k of g is continued as g(-depth) e^{|k|(z+depth)}. Per mode k != 0 the Green's kernel
// (e^{K(x+y)} - e^{-K|x-y|}) / 2K (K = |k|) is integrated against
// piecewise-linear g with running sums; k = 0 is integrated directly.
class HalfStripSolver {
 public:
  HalfStripSolver(int n_modes, DepthGrid grid, double tail_tol = 1e-6);
  PoissonResult solve(const StripField& g1, const StripField& g2) const;

  int n_modes() const noexcept { return n_; }
  const DepthGrid& grid() const noexcept { return grid_; }

 private:
  int n_;
  DepthGrid grid_;
  double tail_tol_;
  std::vector<double> decay_, ca_, cb_;  // per mode: e^{-K dz} and the two interval weights
  std::vector<double> ekz_;              // e^{K z_j}, mode-major
};

PoissonResult poisson_divform(const StripField& g1, const StripField& g2, double tail_tol = 1e-6);

// phi1^(n, z) = e^{|n| z} xi^(n)
StripField solve_phi1(const SpectrumField& xi, const DepthGrid& grid);

struct Traces {
  SpectrumField dphi1_dz0;
  SpectrumField dphi2_dz0;
  SpectrumField d2phi2_dz0;         // from div g at the top, solved pointwise
  SpectrumField d2phi2_dz0_kernel;  // one-sided stencil on the kernel column
};

struct EllipticSolution {
  StripField phi1;
  StripField phi2;
  StripField dphi2_dz;
  StripField g1_last, g2_last;  // -Q grad(phi) for the returned phi2
  Traces traces;
  int picard_iters = 0;
  double residual = 0.0;  // relative fixed-point residual of the returned phi2
  std::vector<double> increments;
};

struct EllipticOptions {
  double tol = 1e-10;
  int max_iter = 50;
};

EllipticSolution solve_phi2(const GeometryBundle& geo, const StripField& phi1,
                            const HalfStripSolver& solver, const EllipticOptions& opt = {});
EllipticSolution solve_phi2(const GeometryBundle& geo, const StripField& phi1,
                            const EllipticOptions& opt = {});

Traces boundary_traces(const EllipticSolution& sol, const GeometryBundle& geo);

// gradient of phi = phi1 + phi2; [0] = d/dx1, [1] = d/dz
std::array<StripField, 2> gradient(const EllipticSolution& sol);

// div((I + Q) grad phi) with a 4th-order depth stencil, relative to the
// strip norm of grad phi
double stencil_residual(const EllipticSolution& sol, const GeometryBundle& geo);

}  // namespace dw
