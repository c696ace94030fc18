#include "dampedwaves/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dampedwaves/errors.hpp"
#include "dampedwaves/wiener.hpp"

namespace dw {

namespace {

// 1 - e^{-x}(1 + x), accurate for small x
double one_minus_exp_poly(double x) {
  if (x > 0.1) return -std::expm1(-x) - x * std::exp(-x);
  // sum_{m>=2} (-1)^m (m-1) x^m / m!
  double term = x * x / 2.0, sum = 0.0;
  for (int m = 2; m < 30; ++m) {
    sum += (m % 2 == 0 ? 1.0 : -1.0) * (m - 1) * term;
    term *= x / (m + 1);
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

double grad_norm(const StripField& d1, const StripField& d2) {
  return strip_norm_of(d1, 0.0, 0.0).value + strip_norm_of(d2, 0.0, 0.0).value;
}

}  // namespace

HalfStripSolver::HalfStripSolver(int n_modes, DepthGrid grid, double tail_tol)
    : n_(n_modes), grid_(grid), tail_tol_(tail_tol) {
  if (n_modes < 4 || n_modes % 2 != 0) throw ConfigError("mode count must be even and >= 4");
  grid.validate();
  const int modes = n_modes / 2 + 1, nodes = grid.nodes();
  const double h = grid.dz();
  decay_.assign(modes, 1.0);
  ca_.assign(modes, h / 2);
  cb_.assign(modes, h / 2);
  ekz_.assign(static_cast<size_t>(modes) * nodes, 1.0);
  for (int n = 1; n < modes; ++n) {
    const double K = n, x = K * h;
    const double w0 = -std::expm1(-x) / K;
    const double w1 = one_minus_exp_poly(x) / (K * K);
    decay_[n] = std::exp(-x);
    ca_[n] = w1 / h;
    cb_[n] = w0 - w1 / h;
    for (int j = 0; j < nodes; ++j) ekz_[static_cast<size_t>(n) * nodes + j] = std::exp(K * grid.z(j));
  }
}

PoissonResult HalfStripSolver::solve(const StripField& g1, const StripField& g2) const {
  if (g1.n_modes() != n_ || g2.n_modes() != n_ || !(g1.grid() == grid_) || !(g2.grid() == grid_))
    throw ConfigError("poisson data does not match the solver grid");
  const int nodes = grid_.nodes(), top = grid_.top();
  const double h = grid_.dz();
  PoissonResult r{StripField(n_, grid_), StripField(n_, grid_)};

  const double gmax = std::max(g1.max_abs(), g2.max_abs());
  double bottom = 0.0;
  for (int n = 0; n <= n_ / 2; ++n)
    bottom = std::max({bottom, std::abs(g1(n, 0)), std::abs(g2(n, 0))});
  r.bottom_level = gmax > 0.0 ? bottom / gmax : 0.0;
  r.tail_warning = r.bottom_level > tail_tol_;

  // mode 0: phi' = g2, phi(0) = 0
  {
    auto f2 = g2.column(0);
    auto phi = r.phi.column(0);
    auto dphi = r.dphi_dz.column(0);
    phi[top] = 0.0;
    // phi' = g2 - g2(-depth): no flux through the bottom
    const double gb = f2[0].real();
    for (int j = top - 1; j >= 0; --j) phi[j] = phi[j + 1] - 0.5 * h * (f2[j] + f2[j + 1]).real() + h * gb;
    for (int j = 0; j < nodes; ++j) dphi[j] = f2[j].real() - gb;
    r.net_flux = gmax > 0.0 && std::abs(f2[0]) > tail_tol_ * gmax;
  }

  std::vector<cplx> L1(nodes), L2(nodes), U1(nodes), U2(nodes);
  for (int n = 1; n < n_ / 2; ++n) {
    auto f1 = g1.column(n);
    auto f2 = g2.column(n);
    const double d = decay_[n], ca = ca_[n], cb = cb_[n], K = n;
    // Pi_1 part (y below x) and Pi_2 part (y above x) as running sums
    L1[0] = L2[0] = 0.0;
    for (int j = 1; j < nodes; ++j) {
      L1[j] = d * L1[j - 1] + ca * f1[j - 1] + cb * f1[j];
      L2[j] = d * L2[j - 1] + ca * f2[j - 1] + cb * f2[j];
    }
    U1[top] = U2[top] = 0.0;
    for (int j = top - 1; j >= 0; --j) {
      U1[j] = d * U1[j + 1] + ca * f1[j + 1] + cb * f1[j];
      U2[j] = d * U2[j + 1] + ca * f2[j + 1] + cb * f2[j];
    }
    const cplx B1 = L1[top], B2 = L2[top];
    const cplx ik(0.0, K);
    const double* e = &ekz_[static_cast<size_t>(n) * nodes];
    auto phi = r.phi.column(n);
    auto dphi = r.dphi_dz.column(n);
    // below -depth the data is continued as g(-depth) e^{K(z + depth)};
    // gb is the boundary term of the integration by parts, c the continued source
    const cplx gb = f2[0];
    const cplx c = ik * f1[0] + K * f2[0];
    const double ebot = std::exp(-K * grid_.depth);
    for (int j = 0; j < nodes; ++j) {
      const double E = e[j] * ebot, F = ebot / e[j];
      phi[j] = ik / (2.0 * K) * (e[j] * B1 - (L1[j] + U1[j])) - 0.5 * (e[j] * B2 - (L2[j] - U2[j])) -
               (E - F) / (2.0 * K) * gb + c * (E - F) / (4.0 * K * K);
      dphi[j] = 0.5 * ik * (e[j] * B1 + (L1[j] - U1[j])) - 0.5 * K * (e[j] * B2 + (L2[j] + U2[j])) +
                f2[j] - 0.5 * (E + F) * gb + c * (E + F) / (4.0 * K);
    }
    phi[top] = 0.0;
  }
  return r;
}

PoissonResult poisson_divform(const StripField& g1, const StripField& g2, double tail_tol) {
  return HalfStripSolver(g1.n_modes(), g1.grid(), tail_tol).solve(g1, g2);
}

StripField solve_phi1(const SpectrumField& xi, const DepthGrid& grid) {
  return harmonic_extension(xi, grid);
}

namespace {

struct Phi1Grad {
  StripSamples p1, p2;
};

Phi1Grad phi1_gradient(const StripField& phi1, int points) {
  return {to_physical(horizontal_derivative(phi1), points),
          to_physical(apply_multiplier(phi1, symbols::calderon(1.0)), points)};
}

// g = -Q grad(phi1 + phi2)
std::pair<StripField, StripField> flux(const GeometryBundle& geo, const Phi1Grad& g1,
                                       const StripField& phi2, const StripField& dphi2) {
  const int N = geo.n_modes(), M = geo.points;
  auto p1 = to_physical(horizontal_derivative(phi2), M);
  auto p2 = to_physical(dphi2, M);
  StripSamples a(M, p1.nodes), b(M, p1.nodes);
  for (size_t k = 0; k < p1.v.size(); ++k) {
    const double u = p1.v[k] + g1.p1.v[k], w = p2.v[k] + g1.p2.v[k];
    a.v[k] = -(geo.q11_s.v[k] * u + geo.q12_s.v[k] * w);
    b.v[k] = -(geo.q12_s.v[k] * u + geo.q22_s.v[k] * w);
  }
  const int cut = dealias_cutoff(N);
  return {to_spectral(a, N, geo.grid(), cut), to_spectral(b, N, geo.grid(), cut)};
}

}  // namespace

EllipticSolution solve_phi2(const GeometryBundle& geo, const StripField& phi1,
                            const HalfStripSolver& solver, const EllipticOptions& opt) {
  if (!(geo.diffeo_margin > 0.0)) throw GeometryError("degenerate geometry", geo.diffeo_margin);
  if (phi1.n_modes() != geo.n_modes() || !(phi1.grid() == geo.grid()) ||
      solver.n_modes() != geo.n_modes() || !(solver.grid() == geo.grid()))
    throw ConfigError("elliptic inputs on different grids");
  if (opt.max_iter < 1 || !(opt.tol > 0.0)) throw ConfigError("bad picard options");

  const int N = geo.n_modes();
  const auto& grid = geo.grid();
  EllipticSolution sol;
  sol.phi1 = phi1;
  const auto g1 = phi1_gradient(phi1, geo.points);
  const auto d1phi1 = horizontal_derivative(phi1);
  const auto d2phi1 = apply_multiplier(phi1, symbols::calderon(1.0));

  StripField phi2(N, grid), dphi2(N, grid);
  auto relative_change = [&](const PoissonResult& r) {
    const double num = grad_norm(horizontal_derivative(r.phi - phi2), r.dphi_dz - dphi2);
    const double den = grad_norm(d1phi1 + horizontal_derivative(r.phi), d2phi1 + r.dphi_dz);
    return den > 0.0 ? num / den : num;
  };

  bool converged = false;
  for (int m = 1; m <= opt.max_iter; ++m) {
    auto [a, b] = flux(geo, g1, phi2, dphi2);
    auto r = solver.solve(a, b);
    const double inc = relative_change(r);
    if (!std::isfinite(inc)) throw NumericError("picard iteration produced non-finite values");
    sol.increments.push_back(inc);
    phi2 = std::move(r.phi);
    dphi2 = std::move(r.dphi_dz);
    sol.picard_iters = m;
    if (inc <= opt.tol) {
      converged = true;
      break;
    }
    const auto& I = sol.increments;
    if (m >= 4 && I[m - 1] >= I[m - 2] && I[m - 2] >= I[m - 3]) {
      std::ostringstream os;
      os << "amplitude outside contraction regime: picard increments grew to " << inc
         << " after " << m << " iterations";
      throw ContractionError(os.str(), m, inc);
    }
  }
  if (!converged) {
    std::ostringstream os;
    os << "amplitude outside contraction regime: no convergence to " << opt.tol << " in "
       << opt.max_iter << " iterations (last increment " << sol.increments.back() << ")";
    throw ContractionError(os.str(), opt.max_iter, sol.increments.back());
  }

  auto [a, b] = flux(geo, g1, phi2, dphi2);
  const auto check = solver.solve(a, b);
  sol.residual = relative_change(check);
  sol.phi2 = std::move(phi2);
  sol.dphi2_dz = std::move(dphi2);
  sol.g1_last = std::move(a);
  sol.g2_last = std::move(b);
  sol.traces = boundary_traces(sol, geo);
  return sol;
}

EllipticSolution solve_phi2(const GeometryBundle& geo, const StripField& phi1,
                            const EllipticOptions& opt) {
  const HalfStripSolver solver(geo.n_modes(), geo.grid());
  return solve_phi2(geo, phi1, solver, opt);
}

Traces boundary_traces(const EllipticSolution& sol, const GeometryBundle& geo) {
  const int N = geo.n_modes(), M = geo.points;
  const int top = geo.grid().top();
  const int cut = dealias_cutoff(N);
  Traces t;
  const SpectrumField xi = sol.phi1.trace();
  t.dphi1_dz0 = apply_multiplier(xi, symbols::calderon(1.0));
  t.dphi2_dz0 = sol.dphi2_dz.trace();
  t.d2phi2_dz0_kernel = SpectrumField(N);
  for (int n = 0; n < N / 2; ++n)
    t.d2phi2_dz0_kernel.set(n, top_derivative(sol.dphi2_dz.column(n), geo.grid().dz()));

  const auto& h = geo.h;
  const auto az = to_grid(apply_multiplier(h, [](int n) { return cplx(0.0, double(n) * std::abs(n)); }), M);
  const auto bz = to_grid(apply_multiplier(h, symbols::calderon(2.0)), M);
  const auto p2f = t.dphi1_dz0 + t.dphi2_dz0;
  const auto xi1 = to_grid(apply_multiplier(xi, symbols::d1()), M);
  const auto xi1z = to_grid(apply_multiplier(p2f, symbols::d1()), M);
  const auto p2 = to_grid(p2f, M);
  const auto phi1zz = to_grid(apply_multiplier(xi, symbols::calderon(2.0)), M);
  auto a = geo.a_s.layer(top), b = geo.b_s.layer(top);

  std::vector<double> g1(M);
  for (int i = 0; i < M; ++i) g1[i] = -(b[i] * xi1[i] - a[i] * p2[i]);
  const auto dg1 = to_grid(apply_multiplier(from_grid(g1, N, cut), symbols::d1()), M);

  std::vector<double> u(M);
  for (int i = 0; i < M; ++i) {
    const double J = 1.0 + b[i];
    const double q21 = -a[i], q22 = (a[i] * a[i] - b[i]) / J;
    const double dq21 = -az[i];
    const double dq22 = ((2.0 * a[i] * az[i] - bz[i]) * J - (a[i] * a[i] - b[i]) * bz[i]) / (J * J);
    u[i] = (dg1[i] - (dq21 * xi1[i] + q21 * xi1z[i] + dq22 * p2[i] + q22 * phi1zz[i])) / (1.0 + q22);
  }
  t.d2phi2_dz0 = from_grid(u, N, cut);
  return t;
}

std::array<StripField, 2> gradient(const EllipticSolution& sol) {
  return {horizontal_derivative(sol.phi1 + sol.phi2),
          apply_multiplier(sol.phi1, symbols::calderon(1.0)) + sol.dphi2_dz};
}

double stencil_residual(const EllipticSolution& sol, const GeometryBundle& geo) {
  const int N = geo.n_modes(), M = geo.points;
  const auto grad = gradient(sol);
  auto p1 = to_physical(grad[0], M);
  auto p2 = to_physical(grad[1], M);
  StripSamples f1(M, p1.nodes), f2(M, p1.nodes);
  for (size_t k = 0; k < p1.v.size(); ++k) {
    f1.v[k] = (1.0 + geo.q11_s.v[k]) * p1.v[k] + geo.q12_s.v[k] * p2.v[k];
    f2.v[k] = geo.q12_s.v[k] * p1.v[k] + (1.0 + geo.q22_s.v[k]) * p2.v[k];
  }
  const int cut = dealias_cutoff(N);
  const auto R = horizontal_derivative(to_spectral(f1, N, geo.grid(), cut)) +
                 vertical_derivative(to_spectral(f2, N, geo.grid(), cut), 1);
  const double den = grad_norm(grad[0], grad[1]);
  const double num = strip_norm_of(R, 0.0, 0.0).value;
  return den > 0.0 ? num / den : num;
}

}  // namespace dw
