#pragma once

// Check results, run configuration and the per-check execution context.

#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "susy8v/errors.hpp"
#include "susy8v/exactpoly.hpp"
#include "susy8v/numeric.hpp"

namespace susy8v {

using json = nlohmann::ordered_json;

// Pinned tolerances.
namespace tol {
inline constexpr double theta = 1e-12;
inline constexpr double uniformisation = 1e-7;
inline constexpr double tsuchiya = 1e-8;
inline constexpr double lattice = 1e-9;
inline constexpr double gap_ratio = 1e6;
inline constexpr double structural = 1e-6;
inline constexpr double closed_form = 1e-9;
inline constexpr double cross_ratio = 1e-7;
inline constexpr double zero_suppression = 1e6;
inline constexpr double trig = 1e-8;
inline constexpr double u_transform = 1e-7;
inline constexpr double asymptotic = 1e-3;
inline constexpr double eigen = 1e-9;
inline constexpr double bridge = 1e-7;
}  // namespace tol

// Short decimal form for check ids.
inline std::string num_tag(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

enum class Suite { Theta, Polynomials, Tsuchiya, Lattice, Eigenvector, Scalars };

inline const char* suite_name(Suite s) {
  switch (s) {
    case Suite::Theta: return "theta";
    case Suite::Polynomials: return "polynomials";
    case Suite::Tsuchiya: return "tsuchiya";
    case Suite::Lattice: return "lattice";
    case Suite::Eigenvector: return "eigenvector";
    case Suite::Scalars: return "scalars";
  }
  return "?";
}

inline std::optional<Suite> parse_suite(const std::string& s) {
  for (Suite x : {Suite::Theta, Suite::Polynomials, Suite::Tsuchiya, Suite::Lattice, Suite::Eigenvector, Suite::Scalars})
    if (s == suite_name(x)) return x;
  return std::nullopt;
}

struct RunConfig {
  int n_max = 3;
  std::vector<double> p_values{0.1, 0.3};
  std::vector<BigRational> zeta_values{BigRational(1, 3), BigRational(1, 2), BigRational(2)};
  std::vector<BigRational> mu_values{BigRational(0), BigRational(1), BigRational(-1), BigRational(2)};
  std::vector<BigRational> nu_values{BigRational(0), BigRational(1), BigRational(2)};
  std::optional<double> tol_override;
  std::uint64_t seed = 42;
  int precision = 53;
  int jobs = 1;
  std::string suite = "all";
  std::string out;
  std::string format = "json";

  void validate() const {
    if (n_max < 0 || n_max > 4) throw ConfigError("n_max must lie in 0..4");
    if (p_values.empty()) throw ConfigError("p_values must not be empty");
    for (double p : p_values)
      if (!(p > 0.0 && p < 1.0)) throw ConfigError("p_values must lie in (0,1)");
    for (const auto& z : zeta_values)
      if (z == 1 || z == -1) throw ConfigError("zeta_values must avoid +-1");
    if (precision < 53) throw ConfigError("precision must be at least 53 bits");
    if (jobs < 1) throw ConfigError("jobs must be positive");
    if (suite != "all" && !parse_suite(suite)) throw ConfigError("unknown suite '" + suite + "'");
    if (format != "json" && format != "csv" && format != "text") throw ConfigError("format must be json, csv or text");
    if (tol_override && !(*tol_override > 0.0)) throw ConfigError("tol must be positive");
  }
};

struct CheckResult {
  std::string id;
  std::string anchor;  // what the check establishes, or "plumbing"
  std::string suite;
  int criterion = 0;  // acceptance criterion number, 0 when not part of one
  json inputs = json::object();
  bool exact = false;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
  double wall_ms = 0.0;
  std::string message;
};

// Handed to each check: deterministic RNG and tolerance lookup.
class CheckContext {
 public:
  CheckContext(const RunConfig& cfg, const std::string& id) : cfg_(cfg), rng_(seed_for(cfg.seed, id)) {}

  const RunConfig& config() const { return cfg_; }
  std::mt19937_64& rng() { return rng_; }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  Complex complex_point(double re = 1.0, double im = 0.3) { return {uniform(-re, re), uniform(-im, im)}; }
  BigRational small_rational(int num = 9, int den = 7) {
    const long a = std::uniform_int_distribution<long>(-num, num)(rng_);
    const long b = std::uniform_int_distribution<long>(1, den)(rng_);
    BigRational q(a, b);
    q.canonicalize();
    return q;
  }

  double tolerance(double pinned) const { return cfg_.tol_override.value_or(pinned); }

 private:
  static std::uint64_t seed_for(std::uint64_t seed, const std::string& id) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (unsigned char c : id) h = (h ^ c) * 1099511628211ull;
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
    std::uint64_t out[1];
    seq.generate(reinterpret_cast<std::uint32_t*>(out), reinterpret_cast<std::uint32_t*>(out) + 2);
    return out[0];
  }

  const RunConfig& cfg_;
  std::mt19937_64 rng_;
};

// What a check body reports back.
struct Outcome {
  bool exact = false;
  double residual = 0.0;  // for exact checks: 0 on equality, 1 otherwise
  double tol = 0.0;
  json inputs = json::object();
  std::string message;
  // comparison direction: residual < tol, or residual > tol for suppression factors
  bool at_least = false;

  static Outcome equality(bool equal, json inputs = json::object(), std::string msg = {}) {
    return {true, equal ? 0.0 : 1.0, 0.0, std::move(inputs), std::move(msg)};
  }
  static Outcome below(double residual, double tol, json inputs = json::object(), std::string msg = {}) {
    return {false, residual, tol, std::move(inputs), std::move(msg)};
  }
  static Outcome above(double value, double threshold, json inputs = json::object(), std::string msg = {}) {
    Outcome o{false, value, threshold, std::move(inputs), std::move(msg)};
    o.at_least = true;
    return o;
  }
  bool pass() const {
    if (exact) return residual == 0.0;
    if (at_least) return residual > tol;
    return residual < tol;  // NaN fails
  }
};

// Keep the worst value over a loop of comparisons.
struct Worst {
  double value = 0.0;
  void below(double r) { value = std::isnan(r) ? r : (std::isnan(value) ? value : std::max(value, r)); }
};

struct CheckSpec {
  std::string id;
  Suite suite;
  int criterion;
  std::string anchor;
  std::function<Outcome(CheckContext&)> body;
};

inline CheckResult run_check(const CheckSpec& spec, const RunConfig& cfg) {
  CheckResult r;
  r.id = spec.id;
  r.anchor = spec.anchor.empty() ? "plumbing" : spec.anchor;
  r.suite = suite_name(spec.suite);
  r.criterion = spec.criterion;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    CheckContext ctx(cfg, spec.id);
    Outcome o = spec.body(ctx);
    r.exact = o.exact;
    r.residual = o.residual;
    r.tol = o.tol;
    r.inputs = std::move(o.inputs);
    r.message = std::move(o.message);
    r.pass = o.pass();
  } catch (const std::exception& e) {
    r.pass = false;
    r.residual = std::numeric_limits<double>::quiet_NaN();
    r.message = std::string("error: ") + e.what();
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace susy8v
