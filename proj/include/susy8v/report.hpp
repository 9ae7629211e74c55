#pragma once

// Report rendering: JSON (schema 1), CSV and plain text.

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "susy8v/check.hpp"

namespace susy8v {

inline constexpr int report_schema = 1;

struct Summary {
  std::size_t total = 0, passed = 0, failed = 0;
  bool all_pass() const { return failed == 0; }
};

inline Summary summarise(const std::vector<CheckResult>& rs) {
  Summary s;
  s.total = rs.size();
  for (const auto& r : rs) (r.pass ? s.passed : s.failed)++;
  return s;
}

inline json config_json(const RunConfig& cfg) {
  json zetas = json::array(), mus = json::array(), nus = json::array();
  for (const auto& z : cfg.zeta_values) zetas.push_back(z.get_str());
  for (const auto& m : cfg.mu_values) mus.push_back(m.get_str());
  for (const auto& v : cfg.nu_values) nus.push_back(v.get_str());
  json j{{"suite", cfg.suite}, {"n_max", cfg.n_max}, {"seed", cfg.seed}, {"precision", cfg.precision},
         {"p_values", cfg.p_values}, {"zeta_values", zetas}, {"mu_values", mus}, {"nu_values", nus}};
  j["tol"] = cfg.tol_override ? json(*cfg.tol_override) : json(nullptr);
  return j;
}

inline json result_json(const CheckResult& r) {
  return {{"id", r.id},           {"suite", r.suite}, {"criterion", r.criterion}, {"anchor", r.anchor},
          {"pass", r.pass},       {"exact", r.exact}, {"residual", r.residual},   {"tol", r.tol},
          {"inputs", r.inputs},   {"message", r.message}, {"wall_ms", r.wall_ms}};
}

inline json report_json(const RunConfig& cfg, const std::vector<CheckResult>& rs, double total_ms) {
  const Summary s = summarise(rs);
  json checks = json::array();
  for (const auto& r : rs) checks.push_back(result_json(r));
  return {{"schema", report_schema},
          {"tool", "susy8v"},
          {"config", config_json(cfg)},
          {"summary", {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}, {"all_pass", s.all_pass()}}},
          {"checks", checks},
          {"wall_ms", total_ms}};
}

inline std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n ") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

inline std::string report_csv(const std::vector<CheckResult>& rs) {
  std::ostringstream os;
  os << "id,suite,criterion,anchor,pass,exact,residual,tol,wall_ms,message\n";
  for (const auto& r : rs)
    os << csv_field(r.id) << ',' << r.suite << ',' << r.criterion << ',' << csv_field(r.anchor) << ','
       << (r.pass ? "true" : "false") << ',' << (r.exact ? "true" : "false") << ',' << fmt_double(r.residual) << ','
       << fmt_double(r.tol) << ',' << fmt_double(r.wall_ms) << ',' << csv_field(r.message) << '\n';
  return os.str();
}

inline std::string report_text(const std::vector<CheckResult>& rs) {
  std::ostringstream os;
  for (const auto& r : rs) {
    os << (r.pass ? "PASS " : "FAIL ") << r.id << "  [" << r.anchor << "]";
    if (r.exact)
      os << "  exact";
    else
      os << "  residual " << fmt_double(r.residual) << (r.tol > 0 ? " tol " + fmt_double(r.tol) : "");
    if (!r.message.empty()) os << "  " << r.message;
    os << '\n';
  }
  const Summary s = summarise(rs);
  os << s.passed << '/' << s.total << " checks passed\n";
  return os.str();
}

inline std::string render_report(const RunConfig& cfg, const std::vector<CheckResult>& rs, double total_ms) {
  if (cfg.format == "csv") return report_csv(rs);
  if (cfg.format == "text") return report_text(rs);
  return report_json(cfg, rs, total_ms).dump(2) + "\n";
}

}  // namespace susy8v
