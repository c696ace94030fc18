#include "dampedwaves/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dampedwaves/errors.hpp"
#include "dampedwaves/initial_data.hpp"

namespace dw {

Trajectory run(const RunConfig& cfg, bool throw_on_error) {
  return run_from(cfg, make_initial(cfg), throw_on_error);
}

Trajectory run_from(const RunConfig& cfg, const SimState& initial, bool throw_on_error) {
  cfg.params.validate(cfg.analyticity);
  const Evolver ev(cfg.params, cfg.evolution_options(), cfg.n_modes);
  const DiagOptions dopt{cfg.params.mu, cfg.noise_floor, cfg.admissibility_cap};
  Trajectory tr;

  auto record = [&](const SimState& s) {
    const auto cache = ev.prepare(s, cfg.picard_tol);
    auto r = measure(s, &cache, ev, dopt);
    tr.states.push_back(s);
    tr.records.push_back(r);
    tr.records.back().energy = energy_functional(tr.records, s.t);
  };

  SimState s = initial;
  s.t = 0.0;
  const long steps = cfg.t_final > 0.0 ? std::max(1L, std::lround(std::ceil(cfg.t_final / cfg.dt - 1e-9))) : 0;
  const double dt = steps > 0 ? cfg.t_final / steps : cfg.dt;
  try {
    record(s);
    for (long k = 1; k <= steps; ++k) {
      s = ev.step(s, dt);
      s.t = k * dt;
      if (k % cfg.cadence == 0 || k == steps) record(s);
    }
  } catch (const Error& e) {
    if (throw_on_error) throw;
    tr.failed = true;
    tr.failed_at = s.t;
    tr.error = e.what();
  }
  return tr;
}

bool all_mandatory_hold(const std::vector<Verdict>& v) {
  return std::all_of(v.begin(), v.end(), [](const Verdict& x) { return !x.mandatory || x.holds; });
}

double energy_doubling_time(const Trajectory& tr, bool* exceeded) {
  if (exceeded) *exceeded = false;
  if (tr.records.empty()) return 0.0;
  const double e0 = tr.records.front().energy;
  for (const auto& r : tr.records) {
    if (r.energy > 2.0 * e0) {
      if (exceeded) *exceeded = true;
      return r.t;
    }
  }
  return tr.records.back().t;
}

std::vector<Verdict> evaluate_run(const RunConfig& cfg, const Trajectory& tr) {
  std::vector<Verdict> out;
  {
    Verdict v{"completed", true, !tr.failed, 0, 0, tr.error};
    if (tr.failed) {
      std::ostringstream os;
      os << "failed at t=" << tr.failed_at << ": " << tr.error;
      v.detail = os.str();
    }
    out.push_back(v);
  }
  if (tr.records.empty()) return out;

  double drift = 0.0;
  for (const auto& s : tr.states) drift = std::max(drift, std::abs(s.h.coeff(0)));
  out.push_back({"zero_mean_h", true, drift <= 1e-10, drift, 1e-10, "max |mean h|"});

  int flagged = 0;
  double first = -1.0;
  for (const auto& r : tr.records)
    if (r.smallness_flag) {
      if (first < 0) first = r.t;
      ++flagged;
    }
  {
    std::ostringstream os;
    os << flagged << " records above the admissibility cap";
    if (flagged) os << ", first at t=" << first;
    out.push_back({"smallness_monitor", cfg.theorem_checks, flagged == 0, double(flagged), 0.0, os.str()});
  }

  bool exceeded = false;
  const double tstar = energy_doubling_time(tr, &exceeded);
  {
    std::ostringstream os;
    os << (exceeded ? "energy exceeded 2E(0) at t=" : "energy stayed below 2E(0) through t=") << tstar;
    out.push_back({"energy_doubling_time", false, tstar > 0.0, tstar, 0.0, os.str()});
  }

  double worst_a = 0.0;
  for (const auto& r : tr.records) worst_a = std::max(worst_a, r.a_minus_id_ratio);
  out.push_back({"a_minus_id_bound", cfg.theorem_checks, worst_a <= cfg.a_bound, worst_a, cfg.a_bound,
                 "max |A - Id| / |Lambda h| on the boundary"});

  if (!cfg.theorem_checks) return out;

  Series lyap;
  for (const auto& r : tr.records) lyap.emplace_back(r.t, r.lyapunov);
  const double transient = cfg.transient >= 0.0 ? cfg.transient
                                                : default_transient(tr.states.front().h, tr.states.front().xi);
  {
    const auto rep = check_lyapunov_monotone(lyap, cfg.monotone_slack, transient);
    std::ostringstream os;
    os << "worst step after t=" << transient;
    out.push_back({"lyapunov_monotone", true, rep.holds, rep.lhs, rep.rhs, os.str()});
  }
  {
    const bool ok = lyap.back().second <= lyap.front().second;
    out.push_back({"lyapunov_final_le_initial", true, ok, lyap.back().second, lyap.front().second, ""});
  }
  if (lyap.size() >= 2 && lyap.front().second > 0.0) {
    const double d = decay_rate(lyap, lyap.front().first, lyap.back().first);
    out.push_back({"decay_rate_positive", true, d > 0.0, d, 0.0, "fitted delta"});
  }
  for (bool xi : {true, false}) {
    const auto rep = check_budget(tr.records, xi, cfg.budget_slack);
    out.push_back({xi ? "wiener_budget_xi" : "wiener_budget_h", true, rep.holds, rep.lhs, rep.rhs,
                   "d/dt |.|_{1,mu t} against the budget"});
  }
  if (cfg.analyticity) {
    bool mono = true, growth = true;
    double worst_drop = 0.0, worst_short = 0.0, prev = -1e300;
    for (const auto& r : tr.records) {
      if (r.t < 0.2 - 1e-12 || r.t > 1.0 + 1e-12) continue;
      if (std::isnan(r.radius)) {
        mono = growth = false;
        continue;
      }
      if (r.radius < prev) {
        mono = false;
        worst_drop = std::max(worst_drop, prev - r.radius);
      }
      prev = r.radius;
      const double need = cfg.params.mu * r.t - 0.1;
      if (r.radius < need) {
        growth = false;
        worst_short = std::max(worst_short, need - r.radius);
      }
    }
    out.push_back({"radius_nondecreasing", true, mono, worst_drop, 0.0, "t in [0.2, 1]"});
    out.push_back({"radius_growth", true, growth, worst_short, 0.0, "rho >= mu t - 0.1 on [0.2, 1]"});
  }
  return out;
}

}  // namespace dw
