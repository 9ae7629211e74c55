#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "susy8v/asm.hpp"
#include "susy8v/check.hpp"
#include "susy8v/goldens.hpp"
#include "susy8v/predictions.hpp"
#include "susy8v/rzpoly.hpp"

namespace susy8v::suites {

namespace detail {

// distinct small rationals
inline std::vector<RatFunc> random_rationals(CheckContext& ctx, int count) {
  std::vector<RatFunc> w;
  while (static_cast<int>(w.size()) < count) {
    RatFunc q(ctx.small_rational());
    if (std::find(w.begin(), w.end(), q) == w.end()) w.push_back(q);
  }
  return w;
}

inline std::vector<RatFunc> symbols(const std::string& stem, int count) {
  std::vector<RatFunc> w;
  for (int i = 1; i <= count; ++i) w.push_back(RatFunc::var(stem + std::to_string(i)));
  return w;
}

inline BigRational at_zero(const RatFunc& r) { return r.eval_rational({{"z", BigRational(0)}}); }

}  // namespace detail

inline std::vector<CheckSpec> polynomial_checks(const RunConfig&) {
  using namespace detail;
  using P = HSpecPoint;
  std::vector<CheckSpec> out;

  for (int k = 2; k <= 5; ++k)
    out.push_back({"poly.two_var.k=" + std::to_string(k), Suite::Polynomials, 1,
                   "general and two-variable determinant formulas agree", [k](CheckContext& ctx) {
                     const RatFunc x = RatFunc::var("x"), y = RatFunc::var("y");
                     const RatFunc a(ctx.small_rational()), b(ctx.small_rational());
                     const std::vector<std::pair<RatFunc, RatFunc>> pairs{
                         {RatFunc(), RatFunc()}, {x, y}, {a, b}, {P::J2().value, RatFunc()}, {P::J3().value, P::J4().value},
                         {P::J2().value, P::J3().value}};
                     bool ok = true;
                     for (const auto& [w, v] : pairs) ok = ok && H_poly(k, std::vector<RatFunc>{w, v}) == H_two_var(k, w, v);
                     return Outcome::equality(ok, {{"k", k}, {"argument_pairs", pairs.size()}});
                   }});

  for (int k = 1; k <= 3; ++k) {
    out.push_back({"poly.bilinear_1.k=" + std::to_string(k), Suite::Polynomials, 1, "first bilinear identity",
                   [k](CheckContext& ctx) {
                     const auto s = symbols("t", 4);
                     const auto w = random_rationals(ctx, 2 * k - 1);
                     return Outcome::equality(bilinear_residual_1(k, w, s[0], s[1], s[2], s[3]).is_zero(), {{"k", k}});
                   }});
    out.push_back({"poly.bilinear_2.k=" + std::to_string(k), Suite::Polynomials, 1, "second bilinear identity",
                   [k](CheckContext& ctx) {
                     const auto s = symbols("t", 4);
                     if (k <= 2) {
                       const auto w = random_rationals(ctx, 2 * k);
                       return Outcome::equality(bilinear_residual_2(k, w, s[0], s[1], s[2], s[3]).is_zero(),
                                                {{"k", k}, {"symbolic", 4}});
                     }
                     // four symbolic arguments cost minutes here; two symbols and several rational draws
                     constexpr int draws = 3;
                     bool ok = true;
                     for (int d = 0; d < draws && ok; ++d) {
                       const auto w = random_rationals(ctx, 2 * k + 2);
                       const std::vector<RatFunc> head(w.begin(), w.begin() + 2 * k);
                       ok = bilinear_residual_2(k, head, s[0], s[1], w[2 * k], w[2 * k + 1]).is_zero();
                     }
                     return Outcome::equality(ok, {{"k", k}, {"symbolic", 2}, {"draws", draws}});
                   }});
    out.push_back({"poly.mobius.k=" + std::to_string(k), Suite::Polynomials, 1, "Moebius rescaling of zeta",
                   [k](CheckContext& ctx) {
                     const auto w = k <= 2 ? symbols("w", 2 * k) : random_rationals(ctx, 2 * k);
                     return Outcome::equality(mobius_residual(k, w).is_zero(), {{"k", k}, {"symbolic", k <= 2}});
                   }});
  }

  for (int k = 1; k <= 4; ++k)
    out.push_back({"poly.degree.k=" + std::to_string(k), Suite::Polynomials, 1,
                   "degree and leading coefficient in one argument", [k](CheckContext& ctx) {
                     auto w = random_rationals(ctx, 2 * k - 2);
                     auto args = w;
                     args.push_back(RatFunc::var("w"));
                     args.push_back(RatFunc());
                     const MultiPoly h = H_poly(k, args).as_polynomial();
                     const RatFunc lead(h.coefficient("w", k - 1));
                     const RatFunc want = RatFunc(MultiPoly::parse("-1 + z^2")).pow(k - 1) * H_poly(k - 1, w);
                     return Outcome::equality(h.degree("w") == k - 1 && lead == want, {{"k", k}});
                   }});

  for (int k = 2; k <= 3; ++k)
    out.push_back({"poly.condensation.k=" + std::to_string(k), Suite::Polynomials, 0, "condensation formula",
                   [k](CheckContext& ctx) {
                     const auto w = k == 2 ? symbols("w", 4) : random_rationals(ctx, 6);
                     return Outcome::equality(H_condensed(k, w) == H_poly(k, w), {{"k", k}});
                   }});

  for (int k = 1; k <= 4; ++k)
    out.push_back({"poly.trig_values.k=" + std::to_string(k), Suite::Polynomials, 2,
                   "zeta = 0 values are ASM and plane-partition counts", [k](CheckContext&) {
                     auto Z = [&](int kk, std::vector<P> pts) { return at_zero(H_poly(kk, pts)); };
                     const BigRational av = BigRational(asm_count(AsmFamily::A_V, 2 * k + 1));
                     const BigRational j2 = BigRational(asm_count(AsmFamily::A, 2 * k - 1)) /
                                            BigRational(asm_count(AsmFamily::A_V, 2 * k - 1)) /
                                            BigRational(BigInt(1) << (k - 1));
                     const BigRational n8 = BigRational(asm_count(AsmFamily::N8, 2 * k));
                     json got;
                     bool ok = true;
                     auto cmp = [&](const char* what, const BigRational& a, const BigRational& b) {
                       got[what] = a.get_str();
                       ok = ok && a == b;
                     };
                     cmp("H", Z(k, {}), av);
                     cmp("H(J2)", Z(k, {P::J2()}), j2);
                     cmp("H(J3)", Z(k, {P::J3()}), n8);
                     cmp("H(J4)", Z(k, {P::J4()}), n8);
                     cmp("H_next(J3,J4)", Z(k + 1, {P::J3(), P::J4()}), av);
                     return Outcome::equality(ok, {{"k", k}, {"values", got}});
                   }});

  out.push_back({"poly.asm_bruteforce", Suite::Polynomials, 2, "ASM count by direct enumeration", [](CheckContext&) {
                   bool ok = asm_total_bruteforce(3) == 7;
                   for (int n = 1; n <= 6; ++n) {
                     const auto r = asm_refined_bruteforce(n);
                     for (int k = 1; k <= n; ++k) ok = ok && r[k - 1] == asm_count(AsmFamily::A_refined, n, k);
                     ok = ok && asm_total_bruteforce(n) == asm_count(AsmFamily::A, n);
                   }
                   return Outcome::equality(ok, {{"A(3)", asm_total_bruteforce(3).get_str()}, {"n_max", 6}});
                 }});

  out.push_back({"poly.goldens", Suite::Polynomials, 0, "plumbing", [](CheckContext&) {
                   const auto dir = default_golden_dir();
                   bool ok = true;
                   json bad = json::array();
                   for (const auto& e : golden_entries()) {
                     const RatFunc two = golden_value_two_var(e);
                     bool fine = two == golden_value_general(e);
                     try {
                       fine = fine && read_file(dir / e.file) == golden_text(two);
                     } catch (const Error&) {
                       fine = false;
                     }
                     if (!fine) bad.push_back(e.file);
                     ok = ok && fine;
                   }
                   return Outcome::equality(ok, {{"files", golden_entries().size()}, {"mismatched", bad}});
                 }});

  out.push_back({"poly.predictions_polynomial", Suite::Polynomials, 0, "closed forms are polynomials",
                 [](CheckContext& ctx) {
                   const int nm = ctx.config().n_max;
                   for (int n = 0; n <= nm; ++n) {
                     for (auto pat : {ComponentPattern::Alternating, ComponentPattern::Polarized, ComponentPattern::AlmostPolarized})
                       component_predict(n, pat);
                     S_predict(n);
                     Sbar_predict(n, +1);
                     Sbar_predict(n, -1);
                     norm_predict(n);
                     Sigma_predict(n);
                     Sigmabar_predict(n);
                   }
                   return Outcome::equality(true, {{"n_max", nm}});
                 }});
  return out;
}

}  // namespace susy8v::suites
