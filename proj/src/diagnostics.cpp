#include "dampedwaves/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "dampedwaves/errors.hpp"
#include "dampedwaves/wiener.hpp"

namespace dw {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

double bulk_proxy_norm(const EllipticSolution& sol) {
  const auto grad = gradient(sol);
  const auto& g = sol.phi1.grid();
  std::vector<double> f(g.nodes());
  double sum = 0.0;
  for (int n = 0; n <= sol.phi1.max_mode(); ++n) {
    auto c1 = grad[0].column(n);
    auto c2 = grad[1].column(n);
    for (int j = 0; j < g.nodes(); ++j) f[j] = std::norm(c1[j]) + std::norm(c2[j]);
    sum += (n == 0 ? 1.0 : 2.0) * std::pow(1.0 + n, 5) * trapezoid(f, g.dz());
  }
  return sum;
}

RadiusFit analyticity_radius(const SpectrumField& f, double noise_floor) {
  RadiusFit r;
  const double floor = noise_floor * f.max_abs();
  std::vector<double> xs, ys;
  for (int n = 1; n < f.max_mode(); ++n) {
    const double a = std::abs(f.coeff(n));
    if (a > floor && a > 0.0) {
      xs.push_back(n);
      ys.push_back(std::log(a));
    }
  }
  r.modes = static_cast<int>(xs.size());
  if (r.modes < 4) return r;
  const double m = static_cast<double>(xs.size());
  double sx = 0, sy = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double mx = sx / m, my = sy / m;
  double sxy = 0, sxx = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  const double slope = sxy / sxx;
  double rss = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (my + slope * (xs[i] - mx));
    rss += e * e;
  }
  r.defined = true;
  r.rho = -slope;
  r.rms = std::sqrt(rss / m);
  return r;
}

SpectrumField envelope(const SpectrumField& h, const SpectrumField& xi) {
  SpectrumField e(h.n_modes());
  for (int n = 0; n < h.max_mode(); ++n) e.half()[n] = std::abs(h.half()[n]) + std::abs(xi.half()[n]);
  return e;
}

double decay_rate(const Series& series, double t0, double t1) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (const auto& [t, v] : series) {
    if (t < t0 || t > t1) continue;
    if (!(v > 0.0)) throw NumericError("decay rate needs positive values");
    const double y = std::log(v);
    sx += t;
    sy += y;
    sxx += t * t;
    sxy += t * y;
    ++m;
  }
  if (m < 2) throw NumericError("decay rate needs at least two points in the window");
  const double den = m * sxx - sx * sx;
  if (!(den > 0.0)) throw NumericError("degenerate decay window");
  return -(m * sxy - sx * sy) / den;
}

InequalityReport check_lyapunov_monotone(const Series& series, double slack, double transient) {
  InequalityReport worst;
  double worst_gap = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i + 1 < series.size(); ++i) {
    if (series[i].first < transient) continue;
    const double lhs = series[i + 1].second, rhs = series[i].second * (1.0 + slack);
    if (lhs - rhs > worst_gap) {
      worst_gap = lhs - rhs;
      worst = make_report(lhs, rhs, 1.0 + slack, 0.0);
    }
  }
  return worst;
}

double default_transient(const SpectrumField& h, const SpectrumField& xi) {
  const auto e = envelope(h, xi);
  const double floor = 1e-13 * e.max_abs();
  for (int n = 1; n < e.max_mode(); ++n)
    if (std::abs(e.coeff(n)) > floor) return 2.0 * std::numbers::pi / std::sqrt(double(n));
  return 0.0;
}

double energy_functional(std::span<const DiagRecord> records, double up_to) {
  double boundary = 0.0, bulk = 0.0;
  for (size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (r.t > up_to + 1e-12) break;
    if (std::isnan(r.bulk)) {
      std::ostringstream os;
      os << "energy functional: missing elliptic snapshot at t=" << r.t;
      throw NumericError(os.str());
    }
    boundary = std::max(boundary, r.sobolev_h3 * r.sobolev_h3 + r.sobolev_xi3 * r.sobolev_xi3);
    if (i > 0) bulk += 0.5 * (r.t - records[i - 1].t) * (r.bulk + records[i - 1].bulk);
  }
  return boundary + bulk;
}

SpectrumField denoise(const SpectrumField& f, double noise_floor) {
  SpectrumField out = f;
  const double floor = noise_floor * f.max_abs();
  for (int n = 0; n < f.max_mode(); ++n)
    if (std::abs(f.coeff(n)) <= floor) out.set(n, 0.0);
  return out;
}

DiagRecord measure(const SimState& s, const EllipticCache* cache, const Evolver& ev,
                   const DiagOptions& opt) {
  DiagRecord r;
  r.t = s.t;
  const double lam = opt.mu * s.t;
  r.sobolev_h3 = sobolev_norm(s.h, 3.0);
  r.sobolev_xi3 = sobolev_norm(s.xi, 3.0);
  // round-off in the tail would otherwise be amplified by e^{mu t |n|}
  const auto hs = denoise(s.h, opt.noise_floor), xs = denoise(s.xi, opt.noise_floor);
  r.wiener_h = wiener_norm(hs, 1.0, lam);
  r.wiener_xi = wiener_norm(xs, 1.0, lam);
  r.lyapunov = r.wiener_h + r.wiener_xi;
  r.smallness_flag = r.lyapunov > opt.admissibility_cap;
  const auto fit = analyticity_radius(envelope(s.h, s.xi), opt.noise_floor);
  r.radius = fit.defined ? fit.rho : kNaN;

  const auto lh = apply_multiplier(hs, symbols::calderon(1.0));
  const double nlh = wiener_norm(lh, 1.0, lam);
  if (nlh > 0.0) {
    const auto a21 = pointwise_product(apply_multiplier(hs, symbols::d1()),
                                       pointwise_map(lh, [](double x) { return -1.0 / (1.0 + x); }));
    const auto a22m1 = pointwise_map(lh, [](double x) { return -x / (1.0 + x); });
    r.a_minus_id_ratio = (wiener_norm(denoise(a21, opt.noise_floor), 1.0, lam) +
                          wiener_norm(denoise(a22m1, opt.noise_floor), 1.0, lam)) / nlh;
  }

  r.bulk = kNaN;
  r.budget_xi = r.budget_h = kNaN;
  if (cache) {
    r.bulk = bulk_proxy_norm(cache->elliptic);
    const auto& p = ev.params();
    if (p.kappa == 0.0 && !ev.options().linear_only) {
      const auto nx = denoise(rhs_potential(s, *cache, p) - linear_potential(s, p), opt.noise_floor);
      const auto nh = denoise(rhs_interface(s, *cache, p) - linear_interface(s, p), opt.noise_floor);
      const auto l2 = symbols::calderon(2.0);
      r.budget_xi = -(p.alpha - opt.mu) * wiener_norm(apply_multiplier(xs, l2), 1.0, lam) +
                    r.wiener_h + wiener_norm(nx, 1.0, lam);
      r.budget_h = -(p.alpha - opt.mu) * wiener_norm(apply_multiplier(hs, l2), 1.0, lam) +
                   wiener_norm(apply_multiplier(xs, symbols::calderon(1.0)), 1.0, lam) +
                   wiener_norm(nh, 1.0, lam);
    }
  }
  return r;
}

InequalityReport check_budget(std::span<const DiagRecord> records, bool for_xi, double slack) {
  InequalityReport worst;
  double worst_gap = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i + 1 < records.size(); ++i) {
    const auto& a = records[i];
    const auto& b = records[i + 1];
    const double ba = for_xi ? a.budget_xi : a.budget_h;
    const double bb = for_xi ? b.budget_xi : b.budget_h;
    if (std::isnan(ba) || std::isnan(bb)) continue;
    const double dt = b.t - a.t;
    if (!(dt > 0.0)) continue;
    const double lhs = ((for_xi ? b.wiener_xi : b.wiener_h) - (for_xi ? a.wiener_xi : a.wiener_h)) / dt;
    const double rhs = 0.5 * (ba + bb);
    const double scale = std::max(std::abs(ba), std::abs(bb));
    const double gap = lhs - rhs - slack * scale;
    if (gap > worst_gap) {
      worst_gap = gap;
      worst = make_report(lhs, rhs, 1.0, 0.0, slack * scale);
    }
  }
  return worst;
}

}  // namespace dw
