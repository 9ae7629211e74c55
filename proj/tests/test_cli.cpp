#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sys/wait.h>

#include "susy8v/config.hpp"
#include "susy8v/registry.hpp"
#include "susy8v/report.hpp"
#include "susy8v/tables.hpp"

using namespace susy8v;
namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(SUSY8V_CLI) + " " + args + " > /dev/null 2>&1";
  const int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

fs::path scratch(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / "susy8v_test_cli";
  fs::create_directories(d);
  return d / name;
}

json strip_times(json j) {
  j.erase("wall_ms");
  for (auto& c : j["checks"]) c.erase("wall_ms");
  return j;
}

}  // namespace

TEST(Config, ParsesKeysAndLists) {
  RunConfig cfg;
  load_config_text(cfg, "[run]\nn_max = 2  # small\nseed = 7\np_values = [0.2, 0.4]\nzeta_values = [\"1/3\", 2]\n"
                         "suite = \"lattice\"\nformat = csv\n");
  EXPECT_EQ(cfg.n_max, 2);
  EXPECT_EQ(cfg.seed, 7u);
  EXPECT_EQ(cfg.p_values, (std::vector<double>{0.2, 0.4}));
  ASSERT_EQ(cfg.zeta_values.size(), 2u);
  EXPECT_EQ(cfg.zeta_values[0], BigRational(1, 3));
  EXPECT_EQ(cfg.suite, "lattice");
  EXPECT_EQ(cfg.format, "csv");
  EXPECT_NO_THROW(cfg.validate());
}

TEST(Config, Errors) {
  RunConfig cfg;
  EXPECT_THROW(load_config_text(cfg, "bogus = 1\n"), ConfigError);
  EXPECT_THROW(load_config_text(cfg, "n_max 3\n"), ConfigError);
  EXPECT_THROW(load_config_text(cfg, "n_max = three\n"), ConfigError);
  EXPECT_THROW(load_config_file(cfg, "/nonexistent/cfg.toml"), ConfigError);
  RunConfig bad;
  bad.zeta_values = {BigRational(1)};
  EXPECT_THROW(bad.validate(), ConfigError);
  bad = RunConfig{};
  bad.suite = "nope";
  EXPECT_THROW(bad.validate(), ConfigError);
  EXPECT_THROW(selected_checks(bad), ConfigError);
}

TEST(Config, EnvironmentOverridesFile) {
  RunConfig cfg;
  load_config_text(cfg, "precision = 80\n");
  ::setenv("SUSY8V_PRECISION", "120", 1);
  apply_environment(cfg);
  ::unsetenv("SUSY8V_PRECISION");
  EXPECT_EQ(cfg.precision, 120);
}

TEST(Registry, IdsUniqueAndAnchorsPresent) {
  RunConfig cfg;
  const auto specs = all_checks(cfg);
  std::set<std::string> ids;
  std::set<int> criteria;
  for (const auto& s : specs) {
    EXPECT_TRUE(ids.insert(s.id).second) << s.id;
    criteria.insert(s.criterion);
  }
  for (int c = 1; c <= 11; ++c) EXPECT_TRUE(criteria.count(c)) << "criterion " << c;
}

class SuiteRun : public ::testing::TestWithParam<const char*> {};

TEST_P(SuiteRun, PassesAtSmallSize) {
  RunConfig cfg;
  cfg.n_max = 2;
  cfg.suite = GetParam();
  const auto rs = run_checks(selected_checks(cfg), cfg);
  ASSERT_FALSE(rs.empty());
  for (const auto& r : rs) {
    EXPECT_TRUE(r.pass) << r.id << " residual " << r.residual << " tol " << r.tol << " " << r.message;
    EXPECT_FALSE(r.anchor.empty()) << r.id;
  }
}

INSTANTIATE_TEST_SUITE_P(AllSuites, SuiteRun,
                         ::testing::Values("theta", "polynomials", "tsuchiya", "lattice", "eigenvector", "scalars"));

TEST(Report, SchemaAndDeterminism) {
  RunConfig cfg;
  cfg.n_max = 1;
  cfg.suite = "lattice";
  const auto specs = selected_checks(cfg);
  const json a = report_json(cfg, run_checks(specs, cfg), 1.0);
  cfg.jobs = 3;
  const json b = report_json(cfg, run_checks(specs, cfg), 2.0);
  EXPECT_EQ(a["schema"], 1);
  EXPECT_EQ(a["summary"]["failed"], 0);
  for (const auto& c : a["checks"]) EXPECT_FALSE(c["anchor"].get<std::string>().empty());
  EXPECT_EQ(strip_times(a), strip_times(b));
}

TEST(Report, CsvAndText) {
  CheckResult r;
  r.id = "x.y";
  r.anchor = "a, \"quoted\"";
  r.pass = true;
  const std::string csv = report_csv({r});
  EXPECT_NE(csv.find("\"a, \"\"quoted\"\"\""), std::string::npos);
  EXPECT_NE(report_text({r}).find("x.y"), std::string::npos);
}

TEST(Tables, TrigonometricRowAndAsmSums) {
  RunConfig cfg;
  cfg.n_max = 2;
  const auto rows = build_tables(cfg);
  bool found = false;
  for (const auto& r : rows) {
    if (r.n == 1 && r.quantity == "S" && r.parameter == "m" && r.exact == "1 + m") found = true;
    if (r.quantity != "top_coefficient") EXPECT_EQ(r.residual, 0.0) << r.n << " " << r.quantity << " " << r.parameter;
  }
  EXPECT_TRUE(found);
  for (int size = 1; size <= 3; ++size) {
    double sum = 0, total = -1;
    for (const auto& r : rows) {
      if (r.n != size) continue;
      if (r.quantity == "A(n,k)") sum += r.value;
      if (r.quantity == "A(n)") total = r.value;
    }
    EXPECT_EQ(sum, total) << "size " << size;
  }
  EXPECT_NE(tables_csv(rows).find("1,S,m,\"1 + m\""), std::string::npos);
}

TEST(Cli, ExitCodes) {
  const auto out = scratch("report.json");
  EXPECT_EQ(run("verify --suite lattice --n-max 1 --seed 42 --out " + out.string()), 0);
  std::ifstream in(out);
  const json j = json::parse(in);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(run("verify --suite lattice --n-max 1 --tol 1e-30 --out " + scratch("fail.json").string()), 1);
  EXPECT_EQ(run("verify --suite nope"), 2);
  EXPECT_EQ(run("verify --n-max 9"), 2);
  EXPECT_EQ(run("verify --format xml"), 2);
  const auto cfg = scratch("bad.toml");
  std::ofstream(cfg) << "unknown_key = 1\n";
  EXPECT_EQ(run("verify --config " + cfg.string()), 2);
}

TEST(Cli, EmitGoldensAndTables) {
  const auto dir = scratch("goldens");
  fs::remove_all(dir);
  EXPECT_EQ(run("emit goldens --out " + dir.string()), 0);
  EXPECT_TRUE(fs::exists(dir / "H4.txt"));
  std::ifstream h4(dir / "H4.txt");
  std::string line;
  std::getline(h4, line);
  EXPECT_EQ(line, "3 + z^2");
  const auto csv = scratch("tables.csv");
  EXPECT_EQ(run("emit tables --n-max 1 --out " + csv.string()), 0);
  std::ifstream t(csv);
  std::stringstream ss;
  ss << t.rdbuf();
  EXPECT_NE(ss.str().find("1,S,m,\"1 + m\""), std::string::npos);
}
