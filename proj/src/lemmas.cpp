#include "dampedwaves/lemmas.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dampedwaves/errors.hpp"
#include "dampedwaves/wiener.hpp"

namespace dw {

InequalityReport make_report(double lhs, double rhs, double constant, double rel, double abs) {
  InequalityReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.constant_used = constant;
  r.margin = rhs - lhs;
  r.holds = lhs <= rhs * (1.0 + rel) + abs;
  return r;
}

namespace {

SpectrumField lam(const SpectrumField& f, double r) {
  return r == 0.0 ? f : apply_multiplier(f, symbols::calderon(r));
}

}  // namespace

InequalityReport check_product_rule(const SpectrumField& f, const SpectrumField& g, double r,
                                    double s, double lambda) {
  const double lhs = wiener_norm(lam(pointwise_product(f, g), r), s, lambda);
  if (r == 0.0 && s == 0.0) {
    const double rhs = wiener_norm(f, 0.0, lambda) * wiener_norm(g, 0.0, lambda);
    return make_report(lhs, rhs, 1.0);
  }
  const double c = constant_k(s) * constant_k(r);
  const double rhs = c * (wiener_norm(f, 0.0, lambda) * wiener_norm(lam(g, r), s, lambda) +
                          wiener_norm(lam(f, r), s, lambda) * wiener_norm(g, 0.0, lambda));
  return make_report(lhs, rhs, c);
}

InequalityReport check_power_rule(const SpectrumField& v, int n, double r, double s,
                                  double lambda) {
  SpectrumField p = v;
  for (int i = 1; i < n; ++i) p = pointwise_product(p, v);
  const double lhs = wiener_norm(lam(p, r), s, lambda);
  const double c = constant_K(r, s, n);
  const double rhs = c * std::pow(wiener_norm(v, 0.0, lambda), n - 1) * wiener_norm(lam(v, r), s, lambda);
  return make_report(lhs, rhs, c);
}

InequalityReport check_theta_interpolation(const SpectrumField& v, double s1, double s2,
                                           double theta, double lambda) {
  const double st = theta * s1 + (1.0 - theta) * s2;
  const double lhs = wiener_norm(v, st, lambda);
  const double rhs =
      std::pow(wiener_norm(v, s1, lambda), theta) * std::pow(wiener_norm(v, s2, lambda), 1.0 - theta);
  return make_report(lhs, rhs, 1.0);
}

InequalityReport check_interpolation(const SpectrumField& f, double s, double lambda) {
  if (!f.is_zero_mean()) throw ConfigError("interpolation estimate needs a zero-mean field");
  const double c = std::pow(2.0, 1.0 + s / (s + 1.0));
  const double lhs = wiener_norm(f, s, lambda);
  const double rhs = c * std::pow(wiener_norm(f, 0.0, lambda), 1.0 / (s + 1.0)) *
                     std::pow(wiener_norm(lam(f, 1.0), s, lambda), 1.0 - 1.0 / (s + 1.0));
  return make_report(lhs, rhs, c);
}

InequalityReport check_composition(const SpectrumField& v, double s, double lambda) {
  const double ks = constant_k(s);
  const double v0 = wiener_norm(v, 0.0, lambda);
  if (!(v0 < std::min(1.0, 1.0 / ks)))
    throw ConfigError("composition bound needs |v|_0 < min(1, 1/k_s)");
  const double lhs = wiener_norm(compose_G(v), s, lambda);
  const double rhs = wiener_norm(v, s, lambda) / (1.0 - ks * v0);
  return make_report(lhs, rhs, 1.0 / (1.0 - ks * v0));
}

InequalityReport check_trace_inequality(const StripField& u, double s, double lambda,
                                        double slack) {
  const double lhs = wiener_norm(u.trace(), s, lambda);
  const auto sn = strip_norm_detailed(u, NormSpec{s, lambda, 1});
  // the part of the strip below -depth is bounded below by the bottom values
  const double bottom = wiener_norm(u.layer(0), s, lambda);
  return make_report(lhs, sn.value + bottom, 1.0, slack);
}

InequalityReport check_semigroup_estimate(const SpectrumField& u, int j, double s,
                                          double lambda, const DepthGrid& grid,
                                          double slack) {
  if (j < 1) throw ConfigError("semigroup estimate needs j >= 1");
  StripField dj(u.n_modes(), grid);
  int top = 0;
  for (int n = 1; n < u.max_mode(); ++n) {
    if (u.coeff(n) == 0.0) continue;
    top = n;
    const double a = n;
    for (int k = 0; k < grid.nodes(); ++k) dj.at(n, k) = std::pow(a, j) * std::exp(a * grid.z(k)) * u.coeff(n);
  }
  const double lhs = strip_norm_of(dj, s, lambda).value;
  const double rhs = wiener_norm(lam(u, j - 1.0), s, lambda);
  // trapezoid on e^{a z} overshoots by at most (a dz)^2/12
  const double quad = std::pow(top * grid.dz(), 2) / 12.0;
  return make_report(lhs, rhs, 1.0, std::max(slack, quad));
}

double FieldSampler::uniform(double a, double b) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return a + (b - a) * u;
}

int FieldSampler::integer(int a, int b) {
  return a + static_cast<int>(rng() % static_cast<std::uint64_t>(b - a + 1));
}

SpectrumField FieldSampler::trig(int n_modes, int top, bool zero_mean) {
  SpectrumField f(n_modes);
  const double decay = uniform(0.0, 1.0);
  for (int n = zero_mean ? 1 : 0; n <= top; ++n) {
    const double amp = std::exp(-decay * n) * uniform(0.0, 1.0);
    const double ph = uniform(0.0, 2.0 * std::numbers::pi);
    f.set(n, n == 0 ? cplx(amp * std::cos(ph), 0.0) : std::polar(amp, ph));
  }
  return f;
}

StripField FieldSampler::strip(int n_modes, int top, const DepthGrid& grid) {
  StripField u(n_modes, grid);
  for (int n = 0; n <= top; ++n) {
    const double a1 = std::max<double>(n, 1.0) + uniform(0.0, 2.0);
    const double a2 = std::max<double>(n, 1.0) + uniform(1.0, 3.0);
    const cplx c1 = std::polar(uniform(0.0, 1.0), uniform(0.0, 2.0 * std::numbers::pi));
    const cplx c2 = std::polar(uniform(0.0, 1.0), uniform(0.0, 2.0 * std::numbers::pi));
    for (int k = 0; k < grid.nodes(); ++k) {
      const double z = grid.z(k);
      cplx v = c1 * std::exp(a1 * z) + c2 * z * std::exp(a2 * z);
      if (n == 0) v = v.real();
      u.at(n, k) = v;
    }
  }
  return u;
}

namespace {

std::string fmt(std::initializer_list<std::pair<const char*, double>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) os << ';';
    os << k << '=' << v;
    first = false;
  }
  return os.str();
}

}  // namespace

std::vector<LintRow> run_lemma_suite(int trials, std::uint64_t seed) {
  if (trials < 1) throw ConfigError("need at least one trial");
  std::vector<LintRow> rows;
  FieldSampler rnd(seed);
  const int N = 64;
  const std::array<double, 3> rs{0.0, 1.0, 2.0};

  for (int t = 0; t < trials; ++t) {
    const double r = rs[rnd.integer(0, 2)], s = rs[rnd.integer(0, 2)];
    const double l = rnd.integer(0, 1) ? 0.3 : 0.0;
    const auto f = rnd.trig(N, rnd.integer(1, 10), false);
    const auto g = rnd.trig(N, rnd.integer(1, 10), false);
    rows.push_back({"product", fmt({{"r", r}, {"s", s}, {"lambda", l}}), check_product_rule(f, g, r, s, l)});
  }
  for (int t = 0; t < trials; ++t) {
    const int n = rnd.integer(2, 4);
    const double r = rs[rnd.integer(0, 2)], s = rs[rnd.integer(0, 2)];
    const double l = rnd.integer(0, 1) ? 0.3 : 0.0;
    const auto v = rnd.trig(N, rnd.integer(1, 5), false);
    rows.push_back({"power", fmt({{"n", n}, {"r", r}, {"s", s}, {"lambda", l}}),
                    check_power_rule(v, n, r, s, l)});
  }
  const std::array<double, 5> ss{0.0, 0.5, 1.0, 2.0, 3.0};
  const std::array<double, 3> thetas{0.25, 0.5, 0.75};
  for (int t = 0; t < trials; ++t) {
    int a = rnd.integer(0, 4), b = rnd.integer(0, 4);
    if (a > b) std::swap(a, b);
    const double th = thetas[rnd.integer(0, 2)];
    const double l = rnd.integer(0, 1) ? 0.3 : 0.0;
    const auto v = rnd.trig(N, rnd.integer(1, 20), false);
    rows.push_back({"interpolation", fmt({{"s1", ss[a]}, {"s2", ss[b]}, {"theta", th}, {"lambda", l}}),
                    check_theta_interpolation(v, ss[a], ss[b], th, l)});
  }
  const std::array<double, 4> st{0.5, 1.0, 2.0, 3.0};
  for (int t = 0; t < trials; ++t) {
    const double s = st[rnd.integer(0, 3)];
    const double l = rnd.integer(0, 1) ? 0.3 : 0.0;
    const auto f = rnd.trig(N, rnd.integer(1, 20), true);
    rows.push_back({"technical_interpolation", fmt({{"s", s}, {"lambda", l}}), check_interpolation(f, s, l)});
  }
  const std::array<double, 5> sc{0.0, 0.5, 1.0, 1.5, 2.0};
  for (int t = 0; t < trials; ++t) {
    const double s = sc[rnd.integer(0, 4)];
    const double l = rnd.integer(0, 1) ? 0.3 : 0.0;
    auto v = rnd.trig(256, rnd.integer(1, 6), false);
    // scale uniformly inside the admissible ball
    const double cap = std::min(1.0, 1.0 / constant_k(s));
    const double target = rnd.uniform(0.0, 0.95) * cap;
    const double v0 = wiener_norm(v, 0.0, l);
    if (v0 > 0.0) v *= target / v0;
    rows.push_back({"composition", fmt({{"s", s}, {"lambda", l}, {"v0", target}}), check_composition(v, s, l)});
  }
  const DepthGrid tg{8.0, 1024};
  for (int t = 0; t < trials; ++t) {
    const double s = rs[rnd.integer(0, 2)];
    const double l = rnd.integer(0, 1) ? 0.2 : 0.0;
    const auto u = rnd.strip(16, rnd.integer(1, 4), tg);
    rows.push_back({"trace", fmt({{"s", s}, {"lambda", l}}), check_trace_inequality(u, s, l)});
  }
  const DepthGrid sg{8.0, 2048};
  for (int t = 0; t < trials; ++t) {
    const int j = rnd.integer(1, 3);
    const double s = rs[rnd.integer(0, 2)];
    const double l = rnd.integer(0, 1) ? 0.2 : 0.0;
    const auto u = rnd.trig(16, rnd.integer(1, 6), false);
    rows.push_back({"semigroup", fmt({{"j", j}, {"s", s}, {"lambda", l}}),
                    check_semigroup_estimate(u, j, s, l, sg)});
  }
  return rows;
}

}  // namespace dw
