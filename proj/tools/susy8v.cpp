#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"

#include "susy8v/config.hpp"
#include "susy8v/goldens.hpp"
#include "susy8v/registry.hpp"
#include "susy8v/report.hpp"
#include "susy8v/tables.hpp"

using namespace susy8v;

namespace {

constexpr int exit_config = 2;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << text;
}

struct Flags {
  std::string config_path, suite, out, format;
  int n_max = 0, jobs = 0;
  std::uint64_t seed = 0;
  double tol = 0;
  CLI::Option *o_suite = nullptr, *o_n_max = nullptr, *o_seed = nullptr, *o_tol = nullptr, *o_out = nullptr,
              *o_format = nullptr, *o_jobs = nullptr;

  void add_to(CLI::App* app) {
    app->add_option("--config", config_path, "key = value configuration file")->check(CLI::ExistingFile);
    o_n_max = app->add_option("--n-max", n_max, "largest n");
    o_suite = app->add_option("--suite", suite, "theta, polynomials, tsuchiya, lattice, eigenvector, scalars or all");
    o_seed = app->add_option("--seed", seed, "random seed");
    o_tol = app->add_option("--tol", tol, "override every residual tolerance");
    o_out = app->add_option("--out", out, "output file or directory");
    o_format = app->add_option("--format", format, "json, csv or text");
    o_jobs = app->add_option("--jobs", jobs, "worker threads");
  }

  // defaults < config file < SUSY8V_PRECISION < flags
  RunConfig resolve() const {
    RunConfig cfg;
    cfg.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (!config_path.empty()) load_config_file(cfg, config_path);
    apply_environment(cfg);
    if (o_n_max->count()) cfg.n_max = n_max;
    if (o_suite->count()) cfg.suite = suite;
    if (o_seed->count()) cfg.seed = seed;
    if (o_tol->count()) cfg.tol_override = tol;
    if (o_out->count()) cfg.out = out;
    if (o_format->count()) cfg.format = format;
    if (o_jobs->count()) cfg.jobs = jobs;
    cfg.validate();
    return cfg;
  }
};

int run_verify(const RunConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto results = run_checks(selected_checks(cfg), cfg);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  write_output(cfg.out, render_report(cfg, results, ms));
  const Summary s = summarise(results);
  std::cerr << s.passed << '/' << s.total << " checks passed\n";
  for (const auto& r : results)
    if (!r.pass) std::cerr << "FAIL " << r.id << ' ' << r.message << '\n';
  return s.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical and exact verification of the supersymmetric eight-vertex model identities"};
  app.require_subcommand(1);

  Flags vflags, eflags;
  auto* verify = app.add_subcommand("verify", "run the checks and write a report");
  vflags.add_to(verify);

  std::string what;
  auto* emit = app.add_subcommand("emit", "write golden files or tables");
  emit->add_option("what", what, "goldens or tables")->required()->check(CLI::IsMember({"goldens", "tables"}));
  eflags.add_to(emit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_config;
  }

  try {
    if (*verify) return run_verify(vflags.resolve());
    RunConfig cfg = eflags.resolve();
    if (what == "goldens") {
      const std::filesystem::path dir = cfg.out.empty() ? default_golden_dir() : std::filesystem::path(cfg.out);
      write_goldens(dir);
      std::cerr << "wrote " << golden_entries().size() << " files to " << dir.string() << '\n';
      return 0;
    }
    if (!eflags.o_format->count()) cfg.format = "csv";
    write_output(cfg.out, render_tables(build_tables(cfg), cfg.format));
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return exit_config;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
