#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dampedwaves/elliptic.hpp"
#include "dampedwaves/evolution.hpp"
#include "dampedwaves/lemmas.hpp"
#include "dampedwaves/spectrum.hpp"

namespace dw {

struct DiagRecord {
  double t = 0.0;
  double sobolev_h3 = 0.0;
  double sobolev_xi3 = 0.0;
  double wiener_h = 0.0;   // |h|_{1, mu t}
  double wiener_xi = 0.0;  // |xi|_{1, mu t}
  double energy = 0.0;     // running energy proxy up to t
  double radius = 0.0;     // fitted analyticity radius, NaN if undefined
  double lyapunov = 0.0;   // wiener_h + wiener_xi
  double bulk = 0.0;       // sum (1+|n|)^5 int |grad phi^|^2, NaN if not measured
  // right-hand sides of the Wiener budget at t, NaN if not measured
  double budget_xi = 0.0;
  double budget_h = 0.0;
  double a_minus_id_ratio = 0.0;  // |A - Id|_{1, mu t} / |Lambda h|_{1, mu t} on the boundary
  bool smallness_flag = false;
};

// (1+|n|)^5 weighted L2 of grad phi over depth
double bulk_proxy_norm(const EllipticSolution& sol);

struct RadiusFit {
  bool defined = false;
  double rho = 0.0;
  double rms = 0.0;  // rms residual of the log fit
  int modes = 0;
};

// coefficients at or below noise_floor * max |f^| set to zero
SpectrumField denoise(const SpectrumField& f, double noise_floor);

// least-squares slope of log|f^(n)| against n over n >= 1 above the floor
// (noise_floor is relative to max |f^|)
RadiusFit analyticity_radius(const SpectrumField& f, double noise_floor = 1e-13);

// |h^(n)| + |xi^(n)|, the spectrum the run-time radius is fitted on
SpectrumField envelope(const SpectrumField& h, const SpectrumField& xi);

using Series = std::vector<std::pair<double, double>>;

// -slope of log(value) against t over t in [t0, t1]
double decay_rate(const Series& series, double t0, double t1);

// value(t_{i+1}) <= value(t_i)(1 + slack) for all t_i >= transient;
// lhs/rhs report the worst step
InequalityReport check_lyapunov_monotone(const Series& series, double slack, double transient = 0.0);

double default_transient(const SpectrumField& h, const SpectrumField& xi);

// 𝓔(t) = max_{s<=t}(|h|_3^2 + |xi|_3^2) + int_0^t bulk ds over the records
double energy_functional(std::span<const DiagRecord> records, double up_to);

struct DiagOptions {
  double mu = 0.0;
  double noise_floor = 1e-13;
  double admissibility_cap = 0.5;
};

DiagRecord measure(const SimState& s, const EllipticCache* cache, const Evolver& ev,
                   const DiagOptions& opt);

// d/dt |u|_{1,mu t} <= budget, checked between consecutive records with the
// trapezoid average of the budget; slack is relative to the budget scale
InequalityReport check_budget(std::span<const DiagRecord> records, bool for_xi, double slack);

}  // namespace dw
