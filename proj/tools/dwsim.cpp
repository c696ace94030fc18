#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "dampedwaves/config.hpp"
#include "dampedwaves/errors.hpp"
#include "dampedwaves/harness.hpp"
#include "dampedwaves/report.hpp"
#include "dampedwaves/simulation.hpp"

namespace {

std::string out_dir(const std::string& fallback) {
  const char* env = std::getenv("DW_OUTPUT_DIR");
  return env && *env ? env : fallback;
}

std::ofstream open_out(const std::string& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  const auto path = (std::filesystem::path(dir) / name).string();
  std::ofstream os(path);
  if (!os) throw dw::Error("cannot write " + path);
  std::cout << "wrote " << path << '\n';
  return os;
}

int cmd_run(const std::string& path) {
  const auto cfg = dw::load_config(path);
  const auto tr = dw::run(cfg, false);
  const auto verdicts = dw::evaluate_run(cfg, tr);
  const auto files = dw::write_run_outputs(dw::resolve_output_dir(cfg), cfg.prefix, tr, verdicts);
  std::cout << "series    " << files.series << "\nsnapshots " << files.snapshots << "\nverdicts  "
            << files.verdicts << '\n';
  if (tr.failed) std::cout << "run stopped at t=" << tr.failed_at << ": " << tr.error << '\n';
  for (const auto& v : verdicts)
    std::cout << (v.holds ? "ok   " : "FAIL ") << (v.mandatory ? "" : "(info) ") << v.property
              << "  lhs=" << dw::format_double(v.lhs) << " rhs=" << dw::format_double(v.rhs)
              << (v.detail.empty() ? "" : "  " + v.detail) << '\n';
  return dw::all_mandatory_hold(verdicts) ? 0 : 1;
}

int cmd_linear(double alpha, const std::vector<int>& modes, double t_final, double dt) {
  dw::LinearOptions opt;
  opt.alpha = alpha;
  opt.modes = modes;
  opt.t_final = t_final;
  opt.dt = dt;
  const auto rows = dw::linear_validate(opt);
  auto os = open_out(out_dir("out"), "linear_validate.csv");
  os << "# dampedwaves linear v1\nmode,max_rel_error,t_worst,holds\n";
  bool ok = true;
  std::cout << "mode  max_rel_error  t_worst\n";
  for (const auto& r : rows) {
    const bool h = r.max_rel_error <= 1e-6;
    ok = ok && h;
    os << r.mode << ',' << dw::format_double(r.max_rel_error) << ',' << dw::format_double(r.t_worst)
       << ',' << (h ? "true" : "false") << '\n';
    std::cout << r.mode << "     " << r.max_rel_error << "  " << r.t_worst << '\n';
  }
  return ok ? 0 : 1;
}

int cmd_elliptic(int trials, std::uint64_t seed) {
  const auto m = dw::manufactured_study(8.0, {64, 128, 256, 512});
  const auto b = dw::elliptic_bounds(trials, seed);
  auto os = open_out(out_dir("out"), "elliptic_validate.csv");
  dw::write_elliptic_csv(os, m, b);
  bool ok = m.back().max_error <= 1e-4;
  for (const auto& r : m)
    std::cout << "manufactured N_z=" << r.intervals << " max_error=" << r.max_error << " order=" << r.order << '\n';
  int bad = 0;
  for (const auto& r : b) bad += !r.report.holds;
  std::cout << "elliptic estimates: " << b.size() << " checks, " << bad << " violations\n";
  return ok && bad == 0 ? 0 : 1;
}

int cmd_lint(int trials, std::uint64_t seed) {
  const auto rows = dw::run_lemma_suite(trials, seed);
  auto os = open_out(out_dir("out"), "lint_inequalities.csv");
  dw::write_lint_csv(os, rows);
  std::map<std::string, std::pair<int, int>> tally;
  for (const auto& r : rows) {
    auto& t = tally[r.lemma];
    ++t.first;
    t.second += !r.report.holds;
  }
  int bad = 0;
  for (const auto& [name, t] : tally) {
    std::cout << name << ": " << t.first << " trials, " << t.second << " violations\n";
    bad += t.second;
  }
  return bad == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"damped water waves simulator"};
  app.require_subcommand(1);

  std::string config;
  auto* run = app.add_subcommand("run", "run a configured simulation");
  run->add_option("--config", config, "config file")->required()->check(CLI::ExistingFile);

  double alpha = 3.0, t_final = 1.0, dt = 1e-3;
  std::vector<int> modes{1, 2, 3};
  auto* lin = app.add_subcommand("linear-validate", "compare small-data runs with the linear propagator");
  lin->add_option("--alpha", alpha)->check(CLI::PositiveNumber);
  lin->add_option("--modes", modes)->delimiter(',');
  lin->add_option("--t-final", t_final)->check(CLI::NonNegativeNumber);
  lin->add_option("--dt", dt)->check(CLI::PositiveNumber);

  int trials = 100;
  std::uint64_t seed = 42;
  auto* ell = app.add_subcommand("elliptic-validate", "manufactured solution and Poisson estimate ensemble");
  ell->add_option("--trials", trials)->check(CLI::PositiveNumber);
  ell->add_option("--seed", seed);

  int lint_trials = 1000;
  std::uint64_t lint_seed = 42;
  auto* lint = app.add_subcommand("lint-inequalities", "randomized trials of the function-space inequalities");
  lint->add_option("--trials", lint_trials)->check(CLI::PositiveNumber);
  lint->add_option("--seed", lint_seed);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*run) return cmd_run(config);
    if (*lin) return cmd_linear(alpha, modes, t_final, dt);
    if (*ell) return cmd_elliptic(trials, seed);
    if (*lint) return cmd_lint(lint_trials, lint_seed);
  } catch (const dw::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
