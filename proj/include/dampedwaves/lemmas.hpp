#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dampedwaves/spectrum.hpp"
#include "dampedwaves/strip.hpp"

namespace dw {

struct InequalityReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double constant_used = 1.0;
  bool holds = true;
  double margin = 0.0;  // rhs - lhs
};

// holds <=> lhs <= rhs (1 + rel) + abs
InequalityReport make_report(double lhs, double rhs, double constant, double rel = 1e-9,
                             double abs = 0.0);

InequalityReport check_product_rule(const SpectrumField& f, const SpectrumField& g, double r,
                                    double s, double lambda);
InequalityReport check_power_rule(const SpectrumField& v, int n, double r, double s,
                                  double lambda);
InequalityReport check_theta_interpolation(const SpectrumField& v, double s1, double s2,
                                           double theta, double lambda);
InequalityReport check_interpolation(const SpectrumField& f, double s, double lambda);
InequalityReport check_composition(const SpectrumField& v, double s, double lambda);
InequalityReport check_trace_inequality(const StripField& u, double s, double lambda,
                                        double slack = 1e-6);
// || f(x2 Lambda) u ||_{s,j} <= C_f |Lambda^{j-1} u|_{s} for f = exp, C_f = 1
InequalityReport check_semigroup_estimate(const SpectrumField& u, int j, double s,
                                          double lambda, const DepthGrid& grid,
                                          double slack = 1e-6);

// random fields for the harnesses
struct FieldSampler {
  explicit FieldSampler(std::uint64_t seed) : rng(seed) {}
  std::mt19937_64 rng;

  double uniform(double a, double b);
  int integer(int a, int b);
  // random real trig polynomial with modes 0..top (mode 0 dropped if zero_mean)
  SpectrumField trig(int n_modes, int top, bool zero_mean);
  // decaying strip field: sum of a few e^{a z} z^p profiles per mode
  StripField strip(int n_modes, int top, const DepthGrid& grid);
};

struct LintRow {
  std::string lemma;
  std::string params;
  InequalityReport report;
};

// all inequality checks, `trials` per lemma, deterministic in seed
std::vector<LintRow> run_lemma_suite(int trials, std::uint64_t seed);

}  // namespace dw
