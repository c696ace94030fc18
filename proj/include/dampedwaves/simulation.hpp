#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dampedwaves/config.hpp"
#include "dampedwaves/diagnostics.hpp"
#include "dampedwaves/evolution.hpp"

namespace dw {

struct Trajectory {
  std::vector<SimState> states;     // at record times
  std::vector<DiagRecord> records;  // same length as states
  bool failed = false;
  double failed_at = 0.0;
  std::string error;
};

// advances to t_final, recording every `cadence` steps (plus t = 0 and the end).
// With throw_on_error the step failure propagates; otherwise the partial
// trajectory carries the message and failing time.
Trajectory run(const RunConfig& cfg, bool throw_on_error = true);
Trajectory run_from(const RunConfig& cfg, const SimState& initial, bool throw_on_error = true);

struct Verdict {
  std::string property;
  bool mandatory = true;
  bool holds = true;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string detail;
};

std::vector<Verdict> evaluate_run(const RunConfig& cfg, const Trajectory& tr);
bool all_mandatory_hold(const std::vector<Verdict>& v);

// first record time where 𝓔 exceeds 2𝓔(0); the last record time if never
double energy_doubling_time(const Trajectory& tr, bool* exceeded = nullptr);

}  // namespace dw
