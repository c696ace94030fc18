#include "dampedwaves/evolution.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace dw {

void ModelParams::validate(bool analyticity) const {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw ConfigError("alpha must be nonnegative");
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) throw ConfigError("epsilon must be nonnegative");
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) throw ConfigError("kappa must be nonnegative");
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw ConfigError("mu must be nonnegative");
  if (analyticity && !(mu < alpha / 2.0)) {
    std::ostringstream os;
    os << "mu = " << mu << " must be below alpha/2 = " << alpha / 2.0;
    throw ConfigError(os.str());
  }
}

namespace {

void require_current(const SimState& s, const EllipticCache& c) {
  if (!c.matches(s)) throw ConsistencyError("elliptic cache does not belong to this state");
}

struct Boundary {
  std::vector<double> flux;     // A^k_j phi,k n_j
  std::vector<double> bracket;  // xi equation before H_kappa, without -h
};

Boundary boundary_terms(const SimState& s, const EllipticCache& c, const ModelParams& p) {
  const int N = s.h.n_modes(), M = padded_size(N);
  const auto hk = mollify(s.h, p.kappa);
  const auto xk = mollify(s.xi, p.kappa);
  const auto& tr = c.elliptic.traces;
  const auto a = to_grid(apply_multiplier(hk, symbols::d1()), M);
  const auto lh = to_grid(apply_multiplier(hk, symbols::calderon(1.0)), M);
  const auto h11 = to_grid(apply_multiplier(hk, symbols::d11()), M);
  const auto p1 = to_grid(apply_multiplier(xk, symbols::d1()), M);
  const auto p2 = to_grid(tr.dphi1_dz0 + tr.dphi2_dz0, M);
  const auto phi22 = to_grid(apply_multiplier(xk, symbols::calderon(2.0)) + tr.d2phi2_dz0, M);
  const double e = p.epsilon, al = p.alpha;
  Boundary b{std::vector<double>(M), std::vector<double>(M)};
  for (int i = 0; i < M; ++i) {
    const double J = 1.0 + lh[i];
    if (!(J > 0.0)) throw GeometryError("1 + Lambda h vanished on the boundary", J);
    const double a21 = -a[i] / J, a22 = 1.0 / J;
    const double v1 = p1[i] + a21 * p2[i], v2 = a22 * p2[i];  // A^T grad phi
    const double fl = -e * a[i] * v1 + v2;
    const double D = phi22[i] / (J * J) + h11[i] * p2[i] / (J * J * J);
    b.flux[i] = fl;
    b.bracket[i] = -0.5 * e * (v1 * v1 + v2 * v2) - al * D + e * v2 * (fl + al * h11[i]);
  }
  return b;
}

}  // namespace

SpectrumField rhs_interface(const SimState& s, const EllipticCache& c, const ModelParams& p) {
  require_current(s, c);
  const int N = s.h.n_modes();
  const auto b = boundary_terms(s, c, p);
  auto ht = mollify(from_grid(b.flux, N, dealias_cutoff(N)), p.kappa);
  ht += p.alpha * apply_multiplier(mollify(s.h, 2.0 * p.kappa), symbols::d11());
  return ht;
}

SpectrumField rhs_potential(const SimState& s, const EllipticCache& c, const ModelParams& p) {
  require_current(s, c);
  const int N = s.h.n_modes();
  const auto b = boundary_terms(s, c, p);
  return mollify(from_grid(b.bracket, N, dealias_cutoff(N)) - s.h, p.kappa);
}

SpectrumField linear_interface(const SimState& s, const ModelParams& p) {
  const double k = p.kappa, al = p.alpha;
  SpectrumField out(s.h.n_modes());
  for (int n = 0; n < s.h.max_mode(); ++n) {
    const double e2 = std::exp(-2.0 * k * n * n);
    out.half()[n] = e2 * (double(n) * s.xi.half()[n] - al * n * n * s.h.half()[n]);
  }
  return out;
}

SpectrumField linear_potential(const SimState& s, const ModelParams& p) {
  const double k = p.kappa, al = p.alpha;
  SpectrumField out(s.h.n_modes());
  for (int n = 0; n < s.h.max_mode(); ++n) {
    const double e1 = std::exp(-k * n * n), e2 = e1 * e1;
    out.half()[n] = -e1 * s.h.half()[n] - al * n * n * e2 * s.xi.half()[n];
  }
  out.half()[0] = out.half()[0].real();
  return out;
}

Mat2 linear_propagator(int n, double alpha, double dt, double kappa) {
  const double nn = double(n) * n;
  const double b = std::exp(-kappa * nn), c = std::abs(n) * b * b, d = alpha * nn * b * b;
  const double w = std::sqrt(b * c);
  const double damp = std::exp(-d * dt);
  const double cs = std::cos(w * dt);
  // sin(w dt)/w, with the n = 0 limit dt
  const double sw = w > 0.0 ? std::sin(w * dt) / w : dt;
  return {{{damp * cs, -damp * b * sw}, {damp * c * sw, damp * cs}}};
}

Evolver::Evolver(const ModelParams& p, const EvolutionOptions& o, int n_modes)
    : p_(p), o_(o), n_(n_modes),
      solver_(std::make_shared<HalfStripSolver>(n_modes, o.grid)) {
  p.validate(false);
  if (o.picard_max_iter < 1 || !(o.picard_tol > 0.0)) throw ConfigError("bad picard options");
}

EllipticCache Evolver::prepare(const SimState& s, double picard_tol) const {
  EllipticCache c;
  c.h_key = s.h;
  c.xi_key = s.xi;
  // linear-only runs keep the reference geometry flat
  const SpectrumField hk = o_.linear_only ? SpectrumField(n_) : mollify(s.h, p_.kappa);
  c.geometry = build_geometry(hk, o_.grid, GeometryOptions{o_.margin_min, false});
  const auto phi1 = solve_phi1(mollify(s.xi, p_.kappa), o_.grid);
  c.elliptic = solve_phi2(c.geometry, phi1, *solver_, EllipticOptions{picard_tol, o_.picard_max_iter});
  return c;
}

Evolver::Nonlinear Evolver::nonlinear(const SimState& s, double picard_tol) const {
  if (o_.linear_only) return {SpectrumField(n_), SpectrumField(n_)};
  const auto c = prepare(s, picard_tol);
  Nonlinear out{rhs_potential(s, c, p_) - linear_potential(s, p_),
                rhs_interface(s, c, p_) - linear_interface(s, p_)};
  out.xi = dealias(out.xi);
  out.h = dealias(out.h);
  return out;
}

SimState Evolver::propagate(const SimState& s, double dt) const {
  SimState o{SpectrumField(n_), SpectrumField(n_), s.t + dt};
  for (int n = 0; n < n_ / 2; ++n) {
    const auto E = linear_propagator(n, p_.alpha, dt, p_.kappa);
    const cplx x = s.xi.half()[n], h = s.h.half()[n];
    o.xi.half()[n] = E[0][0] * x + E[0][1] * h;
    o.h.half()[n] = E[1][0] * x + E[1][1] * h;
  }
  return o;
}

SimState Evolver::step(const SimState& s, double dt) const {
  if (!(dt > 0.0)) throw ConfigError("time step must be positive");
  const double tol = std::min(o_.picard_tol, dt * dt * dt);
  try {
    const auto k1 = nonlinear(s, tol);
    SimState a = s;
    a.xi += dt * k1.xi;
    a.h += dt * k1.h;
    const SimState star = propagate(a, dt);
    const auto k2 = nonlinear(star, tol);
    SimState b = s;
    b.xi += 0.5 * dt * k1.xi;
    b.h += 0.5 * dt * k1.h;
    SimState next = propagate(b, dt);
    next.xi += 0.5 * dt * k2.xi;
    next.h += 0.5 * dt * k2.h;
    next.h.remove_mean();
    if (!next.h.is_finite() || !next.xi.is_finite()) throw NumericError("state became non-finite");
    return next;
  } catch (const StepError&) {
    throw;
  } catch (const Error& e) {
    std::ostringstream os;
    os << "step from t=" << s.t << " failed: " << e.what();
    throw StepError(os.str(), s);
  }
}

}  // namespace dw
