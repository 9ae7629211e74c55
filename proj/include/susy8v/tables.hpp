#pragma once

// Tables of exact values with their floating evaluations:
// rows of (n, quantity, parameter, exact, float, residual).

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "susy8v/asm.hpp"
#include "susy8v/eigensolver.hpp"
#include "susy8v/predictions.hpp"
#include "susy8v/report.hpp"
#include "susy8v/scalars.hpp"

namespace susy8v {

struct TableRow {
  int n = 0;
  std::string quantity, parameter, exact;
  double value = 0.0;
  double residual = 0.0;
};

inline std::vector<TableRow> build_tables(const RunConfig& cfg) {
  std::vector<TableRow> rows;
  const RatFunc nu = RatFunc::var("nu");
  for (int n = 0; n <= cfg.n_max; ++n) {
    // trigonometric point
    const ExactPsi t = homogeneous_psi_exact(n, BigRational(0));
    const RatFunc s = refined_asm_polynomial(n);
    const BigRational s1 = S_measure(n, BigRational(1), t.psi);
    rows.push_back({n, "S", "m", s.to_string(), s1.get_d(),
                    std::abs(BigRational(s1 - s.eval_rational({{"m", BigRational(1)}})).get_d())});
    for (int sg : {1, -1}) {
      const RatFunc sb = Sbar_trig_predict(n, sg);
      const BigRational v = Sbar_measure(n, BigRational(1), sg, t.psi);
      rows.push_back({n, sg > 0 ? "Sbar+" : "Sbar-", "nu", sb.substitute("n", nu).to_string(), v.get_d(),
                      std::abs(BigRational(v - sb.eval_rational({{"n", BigRational(1)}})).get_d())});
    }
    // generic anisotropy
    for (const auto& z : cfg.zeta_values) {
      const ExactPsi e = homogeneous_psi_exact(n, z);
      const std::map<std::string, BigRational> pt{{"z", z}};
      auto add = [&](const std::string& q, const BigRational& got, const RatFunc& want) {
        const BigRational w = want.eval_rational(pt);
        rows.push_back({n, q, "z=" + z.get_str(), w.get_str(), w.get_d(), std::abs(BigRational(got - w).get_d())});
      };
      add("norm", norm_measure(e.psi), norm_predict(n));
      add("Sigma", Sigma_measure(e.psi), Sigma_predict(n));
      add("Sigmabar", Sigma_measure(e.psibar), Sigmabar_predict(n));
      add("polarized", e.psi[polarized_down_index(n)], component_predict(n, ComponentPattern::Polarized));
    }
    // top zeta coefficient of the almost polarized component, reported beside the Catalan number
    const MultiPoly ap = component_predict(n, ComponentPattern::AlmostPolarized).as_polynomial();
    const BigRational top = RatFunc(ap.coefficient("z", ap.degree("z"))).eval_rational({});
    const BigInt cat = asm_count(AsmFamily::Catalan, n);
    rows.push_back({n, "top_coefficient", "Catalan=" + cat.get_str(), top.get_str(), top.get_d(),
                    std::abs(BigRational(top - BigRational(cat)).get_d())});
  }
  // refined ASM counts against enumeration
  for (int size = 1; size <= cfg.n_max + 1; ++size) {
    const auto brute = asm_refined_bruteforce(size);
    BigInt total = 0;
    for (int k = 1; k <= size; ++k) {
      const BigInt c = asm_count(AsmFamily::A_refined, size, k);
      total += c;
      rows.push_back({size, "A(n,k)", "k=" + std::to_string(k), c.get_str(), c.get_d(),
                      std::abs(BigInt(c - brute[k - 1]).get_d())});
    }
    const BigInt a = asm_count(AsmFamily::A, size);
    rows.push_back({size, "A(n)", "", a.get_str(), a.get_d(), std::abs(BigInt(a - total).get_d())});
  }
  return rows;
}

inline std::string tables_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "n,quantity,parameter,exact,float,residual\n";
  for (const auto& r : rows)
    os << r.n << ',' << csv_field(r.quantity) << ',' << csv_field(r.parameter) << ",\"" << r.exact << "\","
       << fmt_double(r.value) << ',' << fmt_double(r.residual) << '\n';
  return os.str();
}

inline std::string tables_json(const std::vector<TableRow>& rows) {
  json a = json::array();
  for (const auto& r : rows)
    a.push_back({{"n", r.n}, {"quantity", r.quantity}, {"parameter", r.parameter}, {"exact", r.exact},
                 {"float", r.value}, {"residual", r.residual}});
  return json{{"schema", report_schema}, {"rows", a}}.dump(2) + "\n";
}

inline std::string tables_text(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  for (const auto& r : rows)
    os << r.n << "  " << r.quantity << "  " << r.parameter << "  " << r.exact << "  " << fmt_double(r.value) << "  "
       << fmt_double(r.residual) << '\n';
  return os.str();
}

inline std::string render_tables(const std::vector<TableRow>& rows, const std::string& format) {
  if (format == "json") return tables_json(rows);
  if (format == "text") return tables_text(rows);
  return tables_csv(rows);
}

}  // namespace susy8v
