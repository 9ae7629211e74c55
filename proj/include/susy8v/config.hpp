#pragma once

// Key = value configuration files (a TOML subset) and the precision override.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "susy8v/check.hpp"
#include "susy8v/errors.hpp"
#include "susy8v/numeric.hpp"

namespace susy8v {

namespace detail {

inline std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n"), b = s.find_last_not_of(" \t\r\n");
  return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

inline std::string unquote(std::string s) {
  s = trim(s);
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) return s.substr(1, s.size() - 2);
  return s;
}

inline std::vector<std::string> list_items(const std::string& key, std::string v) {
  v = trim(v);
  if (v.size() < 2 || v.front() != '[' || v.back() != ']') throw ConfigError(key + ": expected a [..] list");
  std::vector<std::string> out;
  std::stringstream ss(v.substr(1, v.size() - 2));
  for (std::string item; std::getline(ss, item, ',');)
    if (!trim(item).empty()) out.push_back(unquote(item));
  return out;
}

inline double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size()) throw ConfigError(key + ": trailing characters in '" + v + "'");
    return d;
  } catch (const std::logic_error&) {
    throw ConfigError(key + ": not a number: '" + v + "'");
  }
}

inline long long parse_int(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const long long i = std::stoll(v, &used);
    if (used != v.size()) throw ConfigError(key + ": not an integer: '" + v + "'");
    return i;
  } catch (const std::logic_error&) {
    throw ConfigError(key + ": not an integer: '" + v + "'");
  }
}

inline BigRational parse_rational(const std::string& key, const std::string& v) {
  try {
    BigRational q(v);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ConfigError(key + ": not a rational: '" + v + "'");
  }
}

inline std::vector<BigRational> rational_list(const std::string& key, const std::string& v) {
  std::vector<BigRational> out;
  for (const auto& s : list_items(key, v)) out.push_back(parse_rational(key, s));
  return out;
}

}  // namespace detail

// Apply one key = value assignment.
inline void apply_setting(RunConfig& cfg, const std::string& key, const std::string& raw) {
  using namespace detail;
  const std::string v = unquote(raw);
  if (key == "n_max") cfg.n_max = static_cast<int>(parse_int(key, v));
  else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(parse_int(key, v));
  else if (key == "precision") cfg.precision = static_cast<int>(parse_int(key, v));
  else if (key == "jobs") cfg.jobs = static_cast<int>(parse_int(key, v));
  else if (key == "tol") cfg.tol_override = parse_double(key, v);
  else if (key == "suite") cfg.suite = v;
  else if (key == "out") cfg.out = v;
  else if (key == "format") cfg.format = v;
  else if (key == "p_values") {
    cfg.p_values.clear();
    for (const auto& s : list_items(key, raw)) cfg.p_values.push_back(parse_double(key, s));
  } else if (key == "zeta_values") cfg.zeta_values = rational_list(key, raw);
  else if (key == "mu_values") cfg.mu_values = rational_list(key, raw);
  else if (key == "nu_values") cfg.nu_values = rational_list(key, raw);
  else throw ConfigError("unknown configuration key '" + key + "'");
}

inline void load_config_text(RunConfig& cfg, const std::string& text) {
  std::stringstream ss(text);
  int line_no = 0;
  for (std::string line; std::getline(ss, line);) {
    ++line_no;
    if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = detail::trim(line);
    if (line.empty() || line.front() == '[') continue;  // blank, comment or table header
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    apply_setting(cfg, detail::trim(line.substr(0, eq)), detail::trim(line.substr(eq + 1)));
  }
}

inline void load_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  load_config_text(cfg, ss.str());
}

// SUSY8V_PRECISION wins over the file value.
inline void apply_environment(RunConfig& cfg) { cfg.precision = env_precision_bits(cfg.precision); }

}  // namespace susy8v
