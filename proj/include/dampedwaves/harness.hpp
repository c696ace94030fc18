#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "dampedwaves/elliptic.hpp"
#include "dampedwaves/lemmas.hpp"

namespace dw {

struct LinearRow {
  int mode = 0;
  double max_rel_error = 0.0;
  double t_worst = 0.0;
};

struct LinearOptions {
  double alpha = 3.0;
  std::vector<int> modes{1, 2, 3};
  double t_final = 1.0;
  double dt = 1e-3;
  double amplitude = 1e-7;
  int n_modes = 16;
  DepthGrid grid{8.0, 64};
};

// full nonlinear stepper on small single-mode data against exp(t M(k))
std::vector<LinearRow> linear_validate(const LinearOptions& opt);

struct ManufacturedRow {
  int intervals = 0;
  double max_error = 0.0;  // max over the strip of |phi - x2 e^{x2} cos x1|
  double order = 0.0;      // log2 of the error ratio to the previous row
};

// g = (0, 2 e^{x2} cos x1), phi = x2 e^{x2} cos x1
std::vector<ManufacturedRow> manufactured_study(double depth, const std::vector<int>& intervals);

struct EllipticBoundRow {
  int trial = 0;
  std::string estimate;  // "first" or "second"
  double r = 0, s = 0, lambda = 0;
  InequalityReport report;
};

// both Poisson estimates with constants 12 and (12, 4) on random decaying g
std::vector<EllipticBoundRow> elliptic_bounds(int trials, std::uint64_t seed, double slack = 1e-6);

// Pi_1 = e^{K y} sinh(K x) for y < x, Pi_2 = e^{K y} sinh(K x) + sinh(K(y - x)) for x <= y <= 0.
// swapped: sup_y int |d^j_x d^l_y Pi_i| dx;  literal: int sup_y |d^j_x d^l_y Pi_i| dx
// on the truncated depth; bound = |k|^{j+l-1}
struct KernelBoundRow {
  int k = 0, j = 0, l = 0, kernel = 0;
  double swapped = 0.0;
  double literal = 0.0;
  double bound = 0.0;
};
std::vector<KernelBoundRow> kernel_bounds(int k_max, double depth, int intervals);

void write_elliptic_csv(std::ostream& os, const std::vector<ManufacturedRow>& m,
                        const std::vector<EllipticBoundRow>& b);

}  // namespace dw
