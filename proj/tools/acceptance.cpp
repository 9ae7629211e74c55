// One pass/fail line per acceptance criterion.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <thread>

#include "susy8v/config.hpp"
#include "susy8v/registry.hpp"
#include "susy8v/report.hpp"

using namespace susy8v;

namespace {

constexpr double polynomial_budget_s = 300.0;

const std::map<int, const char*> criterion_names{
    {1, "polynomial identities"},
    {2, "combinatorial evaluations"},
    {3, "elliptic and polynomial determinants agree"},
    {4, "lattice identities"},
    {5, "eigenvalue multiplicity"},
    {6, "structural relations of the eigenvector"},
    {7, "closed form for one pair"},
    {8, "scalar product cross-ratios and trivial zeros"},
    {9, "homogeneous exact values"},
    {10, "trigonometric limits"},
    {11, "U-transform"},
};

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  cfg.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  try {
    apply_environment(cfg);
    cfg.validate();
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  }

  const auto results = run_checks(all_checks(cfg), cfg);

  bool all = true;
  for (const auto& [c, name] : criterion_names) {
    std::size_t total = 0, passed = 0;
    double serial_ms = 0;
    std::string first_fail;
    for (const auto& r : results) {
      if (r.criterion != c) continue;
      ++total;
      serial_ms += r.wall_ms;
      if (r.pass)
        ++passed;
      else if (first_fail.empty())
        first_fail = r.id;
    }
    bool ok = total > 0 && passed == total;
    std::string extra;
    if (c == 1) {
      const double s = serial_ms / 1000.0;
      ok = ok && s < polynomial_budget_s;
      char buf[64];
      std::snprintf(buf, sizeof buf, ", serial time %.1f s (limit %.0f s)", s, polynomial_budget_s);
      extra = buf;
    }
    all = all && ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c << ": " << name << " (" << passed << '/' << total
              << " checks" << extra << ")";
    if (!first_fail.empty()) std::cout << "  first failure: " << first_fail;
    std::cout << '\n';
  }

  std::size_t support = 0, support_pass = 0;
  for (const auto& r : results)
    if (r.criterion == 0) {
      ++support;
      support_pass += r.pass;
    }
  std::cout << "supporting checks: " << support_pass << '/' << support << " pass\n";

  if (argc > 1) {
    std::ofstream out(argv[1]);
    out << report_json(cfg, results, 0.0).dump(2) << '\n';
  }
  return all && support == support_pass ? 0 : 1;
}
