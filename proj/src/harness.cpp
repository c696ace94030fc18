#include "dampedwaves/harness.hpp"

#include <algorithm>
#include <cmath>

#include "dampedwaves/errors.hpp"
#include "dampedwaves/evolution.hpp"
#include "dampedwaves/report.hpp"
#include "dampedwaves/wiener.hpp"

namespace dw {

std::vector<LinearRow> linear_validate(const LinearOptions& opt) {
  if (!(opt.dt > 0.0) || !(opt.t_final >= 0.0)) throw ConfigError("linear-validate needs dt > 0, T >= 0");
  std::vector<LinearRow> rows;
  const ModelParams p{opt.alpha, 1.0, 0.0, 0.0};
  EvolutionOptions eo;
  eo.grid = opt.grid;
  const Evolver ev(p, eo, opt.n_modes);
  const long steps = std::lround(std::ceil(opt.t_final / opt.dt - 1e-9));
  const double dt = steps > 0 ? opt.t_final / steps : opt.dt;
  for (int k : opt.modes) {
    if (k < 1 || k > dealias_cutoff(opt.n_modes))
      throw ConfigError("mode " + std::to_string(k) + " outside the resolved band");
    SimState s{SpectrumField(opt.n_modes), SpectrumField(opt.n_modes), 0.0};
    const cplx h0 = 0.5 * opt.amplitude, x0 = cplx(0.0, -0.5 * opt.amplitude);
    s.h.set(k, h0);
    s.xi.set(k, x0);
    LinearRow row{k, 0.0, 0.0};
    for (long n = 1; n <= steps; ++n) {
      s = ev.step(s, dt);
      const double t = n * dt;
      const auto E = linear_propagator(k, opt.alpha, t);
      const cplx xe = E[0][0] * x0 + E[0][1] * h0, he = E[1][0] * x0 + E[1][1] * h0;
      const double err = std::hypot(std::abs(s.xi.coeff(k) - xe), std::abs(s.h.coeff(k) - he));
      const double ref = std::hypot(std::abs(xe), std::abs(he));
      const double rel = err / ref;
      if (rel > row.max_rel_error) {
        row.max_rel_error = rel;
        row.t_worst = t;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<ManufacturedRow> manufactured_study(double depth, const std::vector<int>& intervals) {
  std::vector<ManufacturedRow> rows;
  for (int nz : intervals) {
    const DepthGrid g{depth, nz};
    StripField g1(8, g), g2(8, g);
    for (int j = 0; j < g.nodes(); ++j) g2.at(1, j) = std::exp(g.z(j));
    const auto r = poisson_divform(g1, g2);
    double err = 0.0;
    for (int j = 0; j < g.nodes(); ++j) {
      const double z = g.z(j);
      // physical max of a single cosine mode is twice the coefficient
      err = std::max(err, 2.0 * std::abs(r.phi(1, j) - 0.5 * z * std::exp(z)));
    }
    ManufacturedRow row{nz, err, 0.0};
    if (!rows.empty()) row.order = std::log2(rows.back().max_error / err);
    rows.push_back(row);
  }
  return rows;
}

namespace {

double vec_norm(const StripField& a, const StripField& b, double r, double s, double lambda, int k) {
  auto lam = [r](const StripField& u) { return r == 0.0 ? u : apply_multiplier(u, symbols::calderon(r)); };
  auto one = [&](const StripField& u) {
    const auto n = strip_norm_detailed(lam(u), NormSpec{s, lambda, k});
    return n.value + n.tail;
  };
  return one(a) + one(b);
}

}  // namespace

std::vector<EllipticBoundRow> elliptic_bounds(int trials, std::uint64_t seed, double slack) {
  if (trials < 1) throw ConfigError("need at least one trial");
  std::vector<EllipticBoundRow> rows;
  FieldSampler rnd(seed);
  const DepthGrid grid{8.0, 512};
  const int N = 32;
  const HalfStripSolver solver(N, grid);
  for (int t = 0; t < trials; ++t) {
    const int top = rnd.integer(1, 8);
    const auto g1 = rnd.strip(N, top, grid);
    const auto g2 = rnd.strip(N, top, grid);
    const auto sol = solver.solve(g1, g2);
    const auto d1 = horizontal_derivative(sol.phi);
    const auto& d2 = sol.dphi_dz;
    for (double lambda : {0.0, 0.2}) {
      for (double s : {0.0, 1.0, 2.0}) {
        for (double r : {0.0, 1.0, 2.0}) {
          const double lhs = vec_norm(d1, d2, r, s, lambda, 1);
          const double rhs = 12.0 * vec_norm(g1, g2, r, s, lambda, 1);
          rows.push_back({t, "first", r, s, lambda, make_report(lhs, rhs, 12.0, slack)});
        }
        const double lhs = vec_norm(d1, d2, 0.0, s, lambda, 2);
        const double rhs = 12.0 * vec_norm(g1, g2, 1.0, s, lambda, 1) + 4.0 * vec_norm(g1, g2, 0.0, s, lambda, 2);
        rows.push_back({t, "second", 0.0, s, lambda, make_report(lhs, rhs, 12.0, slack)});
      }
    }
  }
  return rows;
}

std::vector<KernelBoundRow> kernel_bounds(int k_max, double depth, int intervals) {
  const DepthGrid g{depth, intervals};
  const int nodes = g.nodes();
  std::vector<KernelBoundRow> rows;
  std::vector<double> f(nodes);
  for (int k = 1; k <= k_max; ++k) {
    const double K = k;
    for (int j = 0; j <= 3; ++j) {
      for (int l = 0; j + l <= 3; ++l) {
        const double c = std::pow(K, j + l);
        // Pi_1: y < x
        auto p1 = [&](double x, double y) {
          return c * std::exp(K * y) * (j % 2 == 0 ? std::sinh(K * x) : std::cosh(K * x));
        };
        // Pi_2 = (e^{K(x+y)} - e^{K(x-y)})/2 on x <= y
        auto p2 = [&](double x, double y) {
          return c * 0.5 * (std::exp(K * (x + y)) - (l % 2 == 0 ? 1.0 : -1.0) * std::exp(K * (x - y)));
        };
        for (int kernel = 1; kernel <= 2; ++kernel) {
          auto in = [&](int xi, int yi) { return kernel == 1 ? yi < xi : yi >= xi; };
          auto val = [&](int xi, int yi) {
            return std::abs(kernel == 1 ? p1(g.z(xi), g.z(yi)) : p2(g.z(xi), g.z(yi)));
          };
          double swapped = 0.0;
          for (int yi = 0; yi < nodes; ++yi) {
            std::fill(f.begin(), f.end(), 0.0);
            int lo = nodes, hi = -1;
            for (int xi = 0; xi < nodes; ++xi)
              if (in(xi, yi) || (kernel == 1 && xi == yi)) {
                f[xi] = val(xi, yi);
                lo = std::min(lo, xi);
                hi = std::max(hi, xi);
              }
            if (hi > lo) swapped = std::max(swapped, trapezoid(std::span<const double>(f).subspan(lo, hi - lo + 1), g.dz()));
          }
          for (int xi = 0; xi < nodes; ++xi) {
            double m = 0.0;
            for (int yi = 0; yi < nodes; ++yi)
              if (in(xi, yi)) m = std::max(m, val(xi, yi));
            f[xi] = m;
          }
          const double literal = trapezoid(f, g.dz());
          rows.push_back({k, j, l, kernel, swapped, literal, std::pow(K, j + l - 1)});
        }
      }
    }
  }
  return rows;
}

void write_elliptic_csv(std::ostream& os, const std::vector<ManufacturedRow>& m,
                        const std::vector<EllipticBoundRow>& b) {
  os << "# dampedwaves elliptic v1\n";
  os << "kind,params,lhs,rhs,margin,holds\n";
  for (const auto& r : m)
    os << "manufactured,depth_intervals=" << r.intervals << ";order=" << format_double(r.order) << ','
       << format_double(r.max_error) << ",1e-4," << format_double(1e-4 - r.max_error) << ','
       << (r.max_error <= 1e-4 ? "true" : "false") << '\n';
  for (const auto& r : b)
    os << "prop_" << r.estimate << ",trial=" << r.trial << ";r=" << r.r << ";s=" << r.s
       << ";lambda=" << r.lambda << ',' << format_double(r.report.lhs) << ','
       << format_double(r.report.rhs) << ',' << format_double(r.report.margin) << ','
       << (r.report.holds ? "true" : "false") << '\n';
}

}  // namespace dw
