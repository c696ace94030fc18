#include "dampedwaves/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "dampedwaves/errors.hpp"

namespace dw {

EvolutionOptions RunConfig::evolution_options() const {
  EvolutionOptions o;
  o.grid = grid;
  o.margin_min = margin_min;
  o.picard_tol = picard_tol;
  o.picard_max_iter = picard_max_iter;
  o.linear_only = linear_only;
  return o;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void fail(int line, const std::string& msg) {
  std::ostringstream os;
  os << "config line " << line << ": " << msg;
  throw ConfigError(os.str());
}

double to_double(const std::string& v, int line, const std::string& key) {
  double x = 0.0;
  const char* end = v.data() + v.size();
  auto [p, ec] = std::from_chars(v.data(), end, x);
  if (ec != std::errc() || p != end || !std::isfinite(x)) fail(line, "'" + key + "' expects a number, got '" + v + "'");
  return x;
}

long long to_int(const std::string& v, int line, const std::string& key) {
  long long x = 0;
  const char* end = v.data() + v.size();
  auto [p, ec] = std::from_chars(v.data(), end, x);
  if (ec != std::errc() || p != end) fail(line, "'" + key + "' expects an integer, got '" + v + "'");
  return x;
}

bool to_bool(const std::string& v, int line, const std::string& key) {
  if (v == "true" || v == "yes" || v == "on" || v == "1") return true;
  if (v == "false" || v == "no" || v == "off" || v == "0") return false;
  fail(line, "'" + key + "' expects true or false, got '" + v + "'");
}

// "n:re:im, n:re:im" (im optional)
ModeList to_modes(const std::string& v, int line, const std::string& key) {
  ModeList out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    std::vector<std::string> parts;
    std::stringstream is(item);
    std::string p;
    while (std::getline(is, p, ':')) parts.push_back(trim(p));
    if (parts.size() < 2 || parts.size() > 3) fail(line, "'" + key + "' entries look like n:re:im, got '" + item + "'");
    const int n = static_cast<int>(to_int(parts[0], line, key));
    const double re = to_double(parts[1], line, key);
    const double im = parts.size() == 3 ? to_double(parts[2], line, key) : 0.0;
    out.modes.emplace_back(n, cplx(re, im));
  }
  return out;
}

}  // namespace

RunConfig parse_config(std::string_view text) {
  RunConfig c;
  std::map<std::string, int> where;  // "section.key" -> line
  using Setter = std::function<void(const std::string&, int, const std::string&)>;
  const std::map<std::string, Setter> setters = {
      {"model.alpha", [&](auto& v, int l, auto& k) { c.params.alpha = to_double(v, l, k); }},
      {"model.epsilon", [&](auto& v, int l, auto& k) { c.params.epsilon = to_double(v, l, k); }},
      {"model.kappa", [&](auto& v, int l, auto& k) { c.params.kappa = to_double(v, l, k); }},
      {"model.mu", [&](auto& v, int l, auto& k) { c.params.mu = to_double(v, l, k); }},
      {"grid.modes", [&](auto& v, int l, auto& k) { c.n_modes = static_cast<int>(to_int(v, l, k)); }},
      {"grid.depth", [&](auto& v, int l, auto& k) { c.grid.depth = to_double(v, l, k); }},
      {"grid.depth_intervals", [&](auto& v, int l, auto& k) { c.grid.intervals = static_cast<int>(to_int(v, l, k)); }},
      {"time.dt", [&](auto& v, int l, auto& k) { c.dt = to_double(v, l, k); }},
      {"time.t_final", [&](auto& v, int l, auto& k) { c.t_final = to_double(v, l, k); }},
      {"time.cadence", [&](auto& v, int l, auto& k) { c.cadence = static_cast<int>(to_int(v, l, k)); }},
      {"initial.preset", [&](auto& v, int, auto&) { c.initial.preset = v; }},
      {"initial.amplitude", [&](auto& v, int l, auto& k) { c.initial.amplitude = to_double(v, l, k); }},
      {"initial.energy", [&](auto& v, int l, auto& k) { c.initial.energy = to_double(v, l, k); }},
      {"initial.mode", [&](auto& v, int l, auto& k) { c.initial.mode = static_cast<int>(to_int(v, l, k)); }},
      {"initial.top_mode", [&](auto& v, int l, auto& k) { c.initial.top_mode = static_cast<int>(to_int(v, l, k)); }},
      {"initial.h_modes", [&](auto& v, int l, auto& k) { c.initial.h = to_modes(v, l, k); }},
      {"initial.xi_modes", [&](auto& v, int l, auto& k) { c.initial.xi = to_modes(v, l, k); }},
      {"tolerances.picard_tol", [&](auto& v, int l, auto& k) { c.picard_tol = to_double(v, l, k); }},
      {"tolerances.picard_max_iter", [&](auto& v, int l, auto& k) { c.picard_max_iter = static_cast<int>(to_int(v, l, k)); }},
      {"tolerances.margin_min", [&](auto& v, int l, auto& k) { c.margin_min = to_double(v, l, k); }},
      {"tolerances.monotone_slack", [&](auto& v, int l, auto& k) { c.monotone_slack = to_double(v, l, k); }},
      {"tolerances.budget_slack", [&](auto& v, int l, auto& k) { c.budget_slack = to_double(v, l, k); }},
      {"tolerances.noise_floor", [&](auto& v, int l, auto& k) { c.noise_floor = to_double(v, l, k); }},
      {"tolerances.admissibility_cap", [&](auto& v, int l, auto& k) { c.admissibility_cap = to_double(v, l, k); }},
      {"tolerances.transient", [&](auto& v, int l, auto& k) { c.transient = to_double(v, l, k); }},
      {"tolerances.a_bound", [&](auto& v, int l, auto& k) { c.a_bound = to_double(v, l, k); }},
      {"run.seed", [&](auto& v, int l, auto& k) {
         const auto s = to_int(v, l, k);
         if (s < 0) fail(l, "seed must be nonnegative");
         c.seed = static_cast<std::uint64_t>(s);
       }},
      {"run.linear_only", [&](auto& v, int l, auto& k) { c.linear_only = to_bool(v, l, k); }},
      {"run.mollified", [&](auto& v, int l, auto& k) { c.mollified = to_bool(v, l, k); }},
      {"run.analyticity", [&](auto& v, int l, auto& k) { c.analyticity = to_bool(v, l, k); }},
      {"run.theorem_checks", [&](auto& v, int l, auto& k) { c.theorem_checks = to_bool(v, l, k); }},
      {"output.directory", [&](auto& v, int, auto&) { c.output_dir = v; }},
      {"output.prefix", [&](auto& v, int, auto&) { c.prefix = v; }},
  };

  std::string section;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') fail(line, "unterminated section header");
      section = trim(s.substr(1, s.size() - 2));
      static const char* known[] = {"model", "grid", "time", "initial", "tolerances", "run", "output"};
      bool ok = false;
      for (auto* k : known) ok = ok || section == k;
      if (!ok) fail(line, "unknown section [" + section + "]");
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) fail(line, "expected key = value");
    const std::string key = trim(s.substr(0, eq)), value = trim(s.substr(eq + 1));
    if (section.empty()) fail(line, "key '" + key + "' outside of any section");
    const std::string full = section + "." + key;
    auto it = setters.find(full);
    if (it == setters.end()) fail(line, "unknown key '" + key + "' in [" + section + "]");
    if (where.count(full)) fail(line, "duplicate key '" + key + "' in [" + section + "]");
    if (value.empty()) fail(line, "empty value for '" + key + "'");
    where[full] = line;
    it->second(value, line, key);
  }

  auto at = [&](const char* key) {
    auto it = where.find(key);
    return it == where.end() ? 0 : it->second;
  };
  auto check = [&](bool ok, const char* key, const std::string& msg) {
    if (!ok) {
      const int l = at(key);
      if (l > 0) fail(l, msg);
      throw ConfigError("config: " + msg + " (default value)");
    }
  };

  check(c.n_modes >= 8 && c.n_modes % 2 == 0, "grid.modes", "modes must be even and at least 8");
  check(c.grid.depth > 0.0, "grid.depth", "depth must be positive");
  check(c.grid.intervals >= 8, "grid.depth_intervals", "depth_intervals must be at least 8");
  check(c.dt > 0.0, "time.dt", "dt must be positive");
  check(c.t_final >= 0.0, "time.t_final", "t_final must be nonnegative");
  check(c.cadence >= 1, "time.cadence", "cadence must be at least 1");
  check(c.params.alpha >= 0.0, "model.alpha", "alpha must be nonnegative");
  check(c.params.epsilon >= 0.0, "model.epsilon", "epsilon must be nonnegative");
  check(c.params.kappa >= 0.0, "model.kappa", "kappa must be nonnegative");
  check(c.params.mu >= 0.0, "model.mu", "mu must be nonnegative");
  if (c.analyticity) {
    std::ostringstream os;
    os << "mu = " << c.params.mu << " must be below alpha/2 = " << c.params.alpha / 2.0
       << " when analyticity diagnostics are on";
    check(c.params.mu < c.params.alpha / 2.0, at("model.mu") ? "model.mu" : "model.alpha", os.str());
  }
  check(!(c.mollified && c.params.kappa == 0.0), "run.mollified", "mollified = true needs kappa > 0");
  check(!(!c.mollified && c.params.kappa > 0.0), "model.kappa", "kappa > 0 needs mollified = true");
  check(!(c.theorem_checks && c.linear_only), "run.theorem_checks", "theorem_checks cannot be combined with linear_only");
  check(c.picard_tol > 0.0, "tolerances.picard_tol", "picard_tol must be positive");
  check(c.picard_max_iter >= 1, "tolerances.picard_max_iter", "picard_max_iter must be at least 1");
  check(c.margin_min > 0.0 && c.margin_min < 1.0, "tolerances.margin_min", "margin_min must lie in (0, 1)");
  check(c.monotone_slack >= 0.0, "tolerances.monotone_slack", "monotone_slack must be nonnegative");
  check(c.budget_slack >= 0.0, "tolerances.budget_slack", "budget_slack must be nonnegative");
  check(c.noise_floor > 0.0 && c.noise_floor < 1.0, "tolerances.noise_floor", "noise_floor must lie in (0, 1)");
  check(c.admissibility_cap > 0.0, "tolerances.admissibility_cap", "admissibility_cap must be positive");
  check(c.a_bound > 0.0, "tolerances.a_bound", "a_bound must be positive");

  static const char* presets[] = {"zero", "single_mode", "small_two_mode", "multi_mode", "moderate", "explicit"};
  bool known = false;
  for (auto* p : presets) known = known || c.initial.preset == p;
  check(known, "initial.preset", "unknown preset '" + c.initial.preset + "'");
  const int cut = dealias_cutoff(c.n_modes);
  check(c.initial.amplitude >= 0.0, "initial.amplitude", "amplitude must be nonnegative");
  check(c.initial.energy >= 0.0, "initial.energy", "energy must be nonnegative");
  const auto& pre = c.initial.preset;
  if (pre == "single_mode")
    check(c.initial.mode >= 1 && c.initial.mode <= cut, "initial.mode",
          "mode must lie in 1.." + std::to_string(cut));
  if (pre == "multi_mode" || pre == "moderate")
    check(c.initial.top_mode >= 1 && c.initial.top_mode <= cut, "initial.top_mode",
          "top_mode must lie in 1.." + std::to_string(cut));
  for (const auto& [n, v] : c.initial.h.modes) {
    check(n != 0, "initial.h_modes", "initial h must be zero-mean (mode 0 given)");
    check(n >= 1 && n <= cut, "initial.h_modes", "h mode " + std::to_string(n) + " outside 1.." + std::to_string(cut));
  }
  for (const auto& [n, v] : c.initial.xi.modes)
    check(n >= 0 && n <= cut, "initial.xi_modes", "xi mode " + std::to_string(n) + " outside 0.." + std::to_string(cut));
  check(c.initial.preset == "explicit" || (c.initial.h.modes.empty() && c.initial.xi.modes.empty()),
        "initial.h_modes", "mode lists need preset = explicit");
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

std::string resolve_output_dir(const RunConfig& cfg) {
  if (const char* env = std::getenv("DW_OUTPUT_DIR"); env && *env) return env;
  return cfg.output_dir;
}

}  // namespace dw
