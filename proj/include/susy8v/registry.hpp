#pragma once

// All checks, and a parallel runner that returns results in id order.

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

#include "susy8v/check.hpp"
#include "susy8v/suites/eigenvector.hpp"
#include "susy8v/suites/lattice.hpp"
#include "susy8v/suites/polynomials.hpp"
#include "susy8v/suites/scalars.hpp"
#include "susy8v/suites/theta.hpp"
#include "susy8v/suites/tsuchiya.hpp"

namespace susy8v {

inline std::vector<CheckSpec> all_checks(const RunConfig& cfg) {
  std::vector<CheckSpec> out;
  for (auto&& part : {suites::theta_checks(cfg), suites::polynomial_checks(cfg), suites::tsuchiya_checks(cfg),
                      suites::lattice_checks(cfg), suites::eigenvector_checks(cfg), suites::scalar_checks(cfg)})
    out.insert(out.end(), part.begin(), part.end());
  return out;
}

inline std::vector<CheckSpec> selected_checks(const RunConfig& cfg) {
  auto all = all_checks(cfg);
  if (cfg.suite == "all") return all;
  const auto s = parse_suite(cfg.suite);
  if (!s) throw ConfigError("unknown suite '" + cfg.suite + "'");
  std::erase_if(all, [&](const CheckSpec& c) { return c.suite != *s; });
  return all;
}

inline std::vector<CheckResult> run_checks(const std::vector<CheckSpec>& specs, const RunConfig& cfg) {
  std::vector<CheckResult> results(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < specs.size();) results[i] = run_check(specs[i], cfg);
  };
  const int jobs = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(specs.size())));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return results;
}

}  // namespace susy8v
