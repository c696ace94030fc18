#include "dampedwaves/report.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "dampedwaves/errors.hpp"

namespace dw {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, p);
}

void write_series_csv(std::ostream& os, const Trajectory& tr) {
  os << kSeriesHeader << '\n';
  os << "t,sobolev_h3,sobolev_xi3,wiener_h,wiener_xi,energy,radius,lyapunov\n";
  for (const auto& r : tr.records) {
    os << format_double(r.t) << ',' << format_double(r.sobolev_h3) << ',' << format_double(r.sobolev_xi3)
       << ',' << format_double(r.wiener_h) << ',' << format_double(r.wiener_xi) << ','
       << format_double(r.energy) << ',' << format_double(r.radius) << ',' << format_double(r.lyapunov)
       << '\n';
  }
}

namespace {

nlohmann::json coeffs(const SpectrumField& f) {
  auto a = nlohmann::json::array();
  for (const auto& c : f.half()) a.push_back({c.real(), c.imag()});
  return a;
}

nlohmann::json num(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

}  // namespace

void write_snapshots_jsonl(std::ostream& os, const Trajectory& tr) {
  for (const auto& s : tr.states) {
    nlohmann::json j;
    j["t"] = s.t;
    j["n_modes"] = s.h.n_modes();
    j["h"] = coeffs(s.h);
    j["xi"] = coeffs(s.xi);
    os << j.dump() << '\n';
  }
}

void write_verdicts_jsonl(std::ostream& os, const std::vector<Verdict>& v) {
  for (const auto& x : v) {
    nlohmann::json j;
    j["property"] = x.property;
    j["mandatory"] = x.mandatory;
    j["holds"] = x.holds;
    j["lhs"] = num(x.lhs);
    j["rhs"] = num(x.rhs);
    j["detail"] = x.detail;
    os << j.dump() << '\n';
  }
}

void write_lint_csv(std::ostream& os, const std::vector<LintRow>& rows) {
  os << "# dampedwaves lint v1\n";
  os << "lemma,params,lhs,rhs,margin,holds\n";
  for (const auto& r : rows)
    os << r.lemma << ',' << r.params << ',' << format_double(r.report.lhs) << ','
       << format_double(r.report.rhs) << ',' << format_double(r.report.margin) << ','
       << (r.report.holds ? "true" : "false") << '\n';
}

RunFiles write_run_outputs(const std::string& dir, const std::string& prefix, const Trajectory& tr,
                           const std::vector<Verdict>& verdicts) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error("cannot create output directory " + dir + ": " + ec.message());
  RunFiles f{(fs::path(dir) / (prefix + "_series.csv")).string(),
             (fs::path(dir) / (prefix + "_snapshots.jsonl")).string(),
             (fs::path(dir) / (prefix + "_verdicts.jsonl")).string()};
  auto open = [](const std::string& p) {
    std::ofstream o(p, std::ios::binary);
    if (!o) throw Error("cannot write " + p);
    return o;
  };
  {
    auto o = open(f.series);
    write_series_csv(o, tr);
  }
  {
    auto o = open(f.snapshots);
    write_snapshots_jsonl(o, tr);
  }
  {
    auto o = open(f.verdicts);
    write_verdicts_jsonl(o, verdicts);
  }
  return f;
}

}  // namespace dw
