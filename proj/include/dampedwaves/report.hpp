#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "dampedwaves/lemmas.hpp"
#include "dampedwaves/simulation.hpp"

namespace dw {

inline constexpr const char* kSeriesHeader = "# dampedwaves series v1";

void write_series_csv(std::ostream& os, const Trajectory& tr);
void write_snapshots_jsonl(std::ostream& os, const Trajectory& tr);
void write_verdicts_jsonl(std::ostream& os, const std::vector<Verdict>& v);
void write_lint_csv(std::ostream& os, const std::vector<LintRow>& rows);

// shortest round-trip decimal form
std::string format_double(double x);

struct RunFiles {
  std::string series, snapshots, verdicts;
};
// writes all three files under dir (created if needed)
RunFiles write_run_outputs(const std::string& dir, const std::string& prefix, const Trajectory& tr,
                           const std::vector<Verdict>& verdicts);

}  // namespace dw
