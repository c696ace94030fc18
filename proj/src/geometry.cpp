#include "dampedwaves/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dampedwaves/errors.hpp"

namespace dw {

StripField harmonic_extension(const SpectrumField& h, const DepthGrid& grid) {
  if (!h.is_finite()) throw NumericError("interface has non-finite coefficients");
  StripField u(h.n_modes(), grid);
  for (int n = 0; n < h.max_mode(); ++n) {
    const cplx c = h.coeff(n);
    if (c == 0.0) continue;
    auto col = u.column(n);
    for (int j = 0; j < grid.nodes(); ++j) col[j] = std::exp(n * grid.z(j)) * c;
  }
  return u;
}

GeometryBundle build_geometry(const SpectrumField& h, const DepthGrid& grid,
                              const GeometryOptions& opt) {
  GeometryBundle g;
  const int N = h.n_modes();
  g.h = h;
  g.delta_psi = harmonic_extension(h, grid);
  g.d1 = horizontal_derivative(g.delta_psi);
  g.d2 = apply_multiplier(g.delta_psi, symbols::calderon(1.0));
  g.points = padded_size(N);
  g.a_s = to_physical(g.d1, g.points);
  g.b_s = to_physical(g.d2, g.points);

  const int M = g.points, nodes = grid.nodes();
  g.q11_s = g.b_s;
  g.q12_s = StripSamples(M, nodes);
  g.q22_s = StripSamples(M, nodes);
  StripSamples a21(M, nodes), a22(M, nodes);
  double margin = 1e300;
  int worst_i = 0, worst_j = 0;
  for (int j = 0; j < nodes; ++j) {
    for (int i = 0; i < M; ++i) {
      const double a = g.a_s.at(i, j), b = g.b_s.at(i, j);
      const double J = 1.0 + b;
      if (J < margin) {
        margin = J;
        worst_i = i;
        worst_j = j;
      }
      g.q12_s.at(i, j) = -a;
      g.q22_s.at(i, j) = (a * a - b) / J;
      a21.at(i, j) = -a / J;
      a22.at(i, j) = 1.0 / J;
    }
  }
  g.diffeo_margin = margin;
  if (!(margin > opt.margin_min)) {
    std::ostringstream os;
    os << "not a diffeomorphism at this amplitude: min J = " << margin << " at x1="
       << grid_point(worst_i, M) << ", x2=" << grid.z(worst_j) << " (need > " << opt.margin_min << ")";
    throw GeometryError(os.str(), margin);
  }

  if (opt.spectral_tensors) {
    const int cut = N / 2;
    g.J = g.d2;
    for (int j = 0; j < nodes; ++j) g.J.at(0, j) += 1.0;
    StripField one(N, grid);
    for (int j = 0; j < nodes; ++j) one.at(0, j) = 1.0;
    g.A[0][0] = one;
    g.A[0][1] = StripField(N, grid);
    g.A[1][0] = to_spectral(a21, N, grid, cut);
    g.A[1][1] = to_spectral(a22, N, grid, cut);
    g.Q[0][0] = g.d2;
    g.Q[0][1] = g.d1;
    g.Q[0][1] *= -1.0;
    g.Q[1][0] = g.Q[0][1];
    g.Q[1][1] = to_spectral(g.q22_s, N, grid, cut);
  }
  return g;
}

double check_piola(const GeometryBundle& g) {
  if (g.J.n_modes() == 0) throw ConfigError("piola check needs spectral tensors");
  const int N = g.n_modes(), M = g.points;
  const auto& grid = g.grid();
  const int cut = N / 2;
  const auto Js = to_physical(g.J, M);
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    const auto A1 = to_physical(g.A[0][i], M);
    const auto A2 = to_physical(g.A[1][i], M);
    StripSamples p1 = Js, p2 = Js;
    for (size_t k = 0; k < Js.v.size(); ++k) {
      p1.v[k] *= A1.v[k];
      p2.v[k] *= A2.v[k];
    }
    const auto r = horizontal_derivative(to_spectral(p1, N, grid, cut)) +
                   vertical_derivative(to_spectral(p2, N, grid, cut), 1);
    worst = std::max(worst, r.max_abs());
  }
  return worst;
}

double check_inverse_identity(const GeometryBundle& g) {
  if (g.J.n_modes() == 0) throw ConfigError("identity check needs spectral tensors");
  const int M = g.points;
  StripSamples A[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) A[i][j] = to_physical(g.A[i][j], M);
  double worst = 0.0;
  for (size_t k = 0; k < g.a_s.v.size(); ++k) {
    // grad psi = [[1, 0], [delta_psi,1, 1 + delta_psi,2]]
    const double G[2][2] = {{1.0, 0.0}, {g.a_s.v[k], 1.0 + g.b_s.v[k]}};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        double s = 0.0;
        for (int r = 0; r < 2; ++r) s += A[i][r].v[k] * G[r][j];
        worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
      }
  }
  return worst;
}

}  // namespace dw
