#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dampedwaves/evolution.hpp"
#include "dampedwaves/spectrum.hpp"
#include "dampedwaves/strip.hpp"

namespace dw {

struct ModeList {
  std::vector<std::pair<int, cplx>> modes;  // n >= 1 (n >= 0 for xi)
};

struct InitialSpec {
  // zero | single_mode | small_two_mode | multi_mode | moderate | explicit
  std::string preset = "small_two_mode";
  double amplitude = 0.01;  // |h0|_1 + |xi0|_1 after scaling
  double energy = 1.0;      // |h0|_3^2 + |xi0|_3^2 for "moderate"
  int mode = 1;             // for single_mode
  int top_mode = 8;         // for multi_mode / moderate
  ModeList h, xi;           // for explicit
};

struct RunConfig {
  ModelParams params;
  int n_modes = 64;
  DepthGrid grid{8.0, 256};
  double dt = 1e-3;
  double t_final = 1.0;
  int cadence = 10;  // steps between records

  InitialSpec initial;

  double picard_tol = 1e-10;
  int picard_max_iter = 50;
  double margin_min = 0.1;
  double monotone_slack = 1e-6;
  double budget_slack = 0.05;
  double noise_floor = 1e-13;
  double admissibility_cap = 0.5;
  double transient = -1.0;  // negative: one linear period of the slowest mode
  double a_bound = 4.0;

  std::uint64_t seed = 42;
  bool linear_only = false;
  bool mollified = false;
  bool analyticity = true;
  bool theorem_checks = false;

  std::string output_dir = "out";
  std::string prefix = "run";

  EvolutionOptions evolution_options() const;
};

// key = value lines grouped under [section] headers; '#' starts a comment
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);

// output directory after the DW_OUTPUT_DIR override
std::string resolve_output_dir(const RunConfig& cfg);

}  // namespace dw
