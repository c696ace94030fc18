#pragma once

#include <array>
#include <memory>

#include "dampedwaves/elliptic.hpp"
#include "dampedwaves/errors.hpp"
#include "dampedwaves/geometry.hpp"
#include "dampedwaves/spectrum.hpp"

namespace dw {

struct ModelParams {
  double alpha = 3.0;
  double epsilon = 1.0;
  double kappa = 0.0;
  double mu = 0.0;
  // mu < alpha/2 is required only when analyticity diagnostics are on
  void validate(bool analyticity) const;
};

struct SimState {
  SpectrumField h;
  SpectrumField xi;
  double t = 0.0;
};

struct EvolutionOptions {
  DepthGrid grid{8.0, 256};
  double margin_min = 0.1;
  double picard_tol = 1e-10;
  int picard_max_iter = 50;
  bool linear_only = false;
};

// geometry and potential belonging to one (h, xi)
struct EllipticCache {
  SpectrumField h_key, xi_key;
  GeometryBundle geometry;
  EllipticSolution elliptic;
  bool matches(const SimState& s) const { return s.h == h_key && s.xi == xi_key; }
};

// full right-hand sides; they throw ConsistencyError if the cache is stale
SpectrumField rhs_interface(const SimState& s, const EllipticCache& c, const ModelParams& p);
SpectrumField rhs_potential(const SimState& s, const EllipticCache& c, const ModelParams& p);

// the constant-coefficient part integrated exactly
SpectrumField linear_interface(const SimState& s, const ModelParams& p);
SpectrumField linear_potential(const SimState& s, const ModelParams& p);

using Mat2 = std::array<std::array<double, 2>, 2>;
// exp(dt M(n)) acting on (xi^, h^), M = [[-d, -b], [c, -d]] with
// d = alpha n^2 e^{-2 kappa n^2}, b = e^{-kappa n^2}, c = |n| e^{-2 kappa n^2}
Mat2 linear_propagator(int n, double alpha, double dt, double kappa = 0.0);

class StepError : public Error {
 public:
  StepError(const std::string& what, SimState snapshot)
      : Error(what), snapshot_(std::move(snapshot)) {}
  const SimState& snapshot() const noexcept { return snapshot_; }

 private:
  SimState snapshot_;
};

class Evolver {
 public:
  Evolver(const ModelParams& p, const EvolutionOptions& o, int n_modes);

  const ModelParams& params() const noexcept { return p_; }
  const EvolutionOptions& options() const noexcept { return o_; }
  int n_modes() const noexcept { return n_; }
  const HalfStripSolver& solver() const noexcept { return *solver_; }

  EllipticCache prepare(const SimState& s, double picard_tol) const;

  struct Nonlinear {
    SpectrumField xi, h;
  };
  Nonlinear nonlinear(const SimState& s, double picard_tol) const;

  // exact linear flow over dt
  SimState propagate(const SimState& s, double dt) const;
  // Lawson-Heun, second order
  SimState step(const SimState& s, double dt) const;

 private:
  ModelParams p_;
  EvolutionOptions o_;
  int n_;
  std::shared_ptr<const HalfStripSolver> solver_;
};

}  // namespace dw
