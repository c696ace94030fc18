#include "dampedwaves/initial_data.hpp"

#include <cmath>
#include <numbers>

#include "dampedwaves/errors.hpp"
#include "dampedwaves/lemmas.hpp"
#include "dampedwaves/wiener.hpp"

namespace dw {

namespace {

void scale_to_wiener(SimState& s, double target) {
  const double n = wiener_norm(s.h, 1.0) + wiener_norm(s.xi, 1.0);
  if (n > 0.0) {
    s.h *= target / n;
    s.xi *= target / n;
  }
}

// random phases, geometric decay e^{-n/2}
void fill_random(SimState& s, int top, FieldSampler& rnd) {
  for (int n = 1; n <= top; ++n) {
    const double a = std::exp(-0.5 * n);
    s.h.set(n, std::polar(a * rnd.uniform(0.5, 1.0), rnd.uniform(0.0, 2.0 * std::numbers::pi)));
    s.xi.set(n, std::polar(a * rnd.uniform(0.5, 1.0), rnd.uniform(0.0, 2.0 * std::numbers::pi)));
  }
}

}  // namespace

SimState make_initial(const RunConfig& cfg) {
  const int N = cfg.n_modes;
  SimState s{SpectrumField(N), SpectrumField(N), 0.0};
  const auto& in = cfg.initial;
  FieldSampler rnd(cfg.seed);
  if (in.preset == "zero") {
  } else if (in.preset == "single_mode") {
    // h = A cos(k x)
    s.h.set(in.mode, 0.5 * in.amplitude);
  } else if (in.preset == "small_two_mode") {
    s.h.set(1, 0.5);
    s.h.set(2, 0.25);
    s.xi.set(1, cplx(0.0, -0.5));
    s.xi.set(2, cplx(0.0, 0.25));
    scale_to_wiener(s, in.amplitude);
  } else if (in.preset == "multi_mode") {
    fill_random(s, in.top_mode, rnd);
    scale_to_wiener(s, in.amplitude);
  } else if (in.preset == "moderate") {
    fill_random(s, in.top_mode, rnd);
    const double e = std::pow(sobolev_norm(s.h, 3.0), 2) + std::pow(sobolev_norm(s.xi, 3.0), 2);
    const double f = std::sqrt(in.energy / e);
    s.h *= f;
    s.xi *= f;
  } else if (in.preset == "explicit") {
    for (const auto& [n, v] : in.h.modes) s.h.add(n, v);
    for (const auto& [n, v] : in.xi.modes) s.xi.add(n, v);
  } else {
    throw ConfigError("unknown preset " + in.preset);
  }
  s.h.remove_mean();
  return s;
}

}  // namespace dw
