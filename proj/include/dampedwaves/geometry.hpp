#pragma once

#include <array>

#include "dampedwaves/spectrum.hpp"
#include "dampedwaves/strip.hpp"

namespace dw {

// delta_psi^(n, z) = e^{|n| z} h^(n)
StripField harmonic_extension(const SpectrumField& h, const DepthGrid& grid);

struct GeometryBundle {
  SpectrumField h;
  StripField delta_psi;
  StripField d1;  // delta_psi,1
  StripField d2;  // delta_psi,2
  StripField J;
  std::array<std::array<StripField, 2>, 2> A;  // A[i][j] = A^i_j, upper index = row
  std::array<std::array<StripField, 2>, 2> Q;  // J A A^T - Id
  double diffeo_margin = 1.0;

  // samples on the padded grid, used by the elliptic iteration
  int points = 0;
  StripSamples a_s;  // delta_psi,1
  StripSamples b_s;  // delta_psi,2
  StripSamples q11_s, q12_s, q22_s;

  int n_modes() const noexcept { return h.n_modes(); }
  const DepthGrid& grid() const noexcept { return delta_psi.grid(); }
};

struct GeometryOptions {
  double margin_min = 0.1;
  bool spectral_tensors = true;  // also project J, A, Q back to mode columns
};

GeometryBundle build_geometry(const SpectrumField& h, const DepthGrid& grid,
                              const GeometryOptions& opt = {});

// max over i, modes and nodes of |(J A^1_i),1 + (J A^2_i),2|
double check_piola(const GeometryBundle& g);
// max over the padded grid of |A grad(psi) - Id|
double check_inverse_identity(const GeometryBundle& g);

}  // namespace dw
