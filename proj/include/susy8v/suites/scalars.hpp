#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "susy8v/check.hpp"
#include "susy8v/eigensolver.hpp"
#include "susy8v/predictions.hpp"
#include "susy8v/scalars.hpp"

namespace susy8v::suites {

namespace detail {

inline constexpr double scalar_p = 0.25;

inline std::vector<Complex> random_xs(CheckContext& ctx, int n) {
  std::vector<Complex> xs(n);
  for (auto& z : xs) z = ctx.complex_point();
  return xs;
}

// |<v|psi>| / |v| for the boundary vector of the given kind
inline double overlap(const Theta<Complex>& th, const std::vector<Complex>& xs, Complex lambda, ScalarKind k,
                      const CVec& psi) {
  const CVec v = k == ScalarKind::Z ? xi_vector(th, xs, lambda)
                                    : xibar_vector(th, xs, lambda, k == ScalarKind::ZbarPlus ? 1 : -1);
  return std::abs(pair(v, psi)) / v.norm();
}

inline PsiVector psi0() { return {0, {Complex(0)}, CVec::Ones(2), Normalization::RawUnit, ""}; }

inline PsiVector solve_scalar(const Theta<Complex>& th, const std::vector<Complex>& xs) {
  return xs.empty() ? psi0() : solve_psi(th, scalar_product_args(xs));
}

constexpr ScalarKind all_kinds[] = {ScalarKind::Z, ScalarKind::ZbarPlus, ScalarKind::ZbarMinus};

}  // namespace detail

inline std::vector<CheckSpec> scalar_checks(const RunConfig& cfg) {
  using namespace detail;
  using K = ScalarKind;
  std::vector<CheckSpec> out;

  out.push_back({"scalars.n1_closed_form", Suite::Scalars, 7, "single-pair scalar products in closed form",
                 [](CheckContext& ctx) {
                   Worst w;
                   for (int d = 0; d < 10; ++d) {
                     const double p = ctx.uniform(0.05, 0.4);
                     Theta<Complex> th(ThetaParams::make(p));
                     const Complex x = ctx.complex_point(), lam = ctx.complex_point();
                     const std::vector<Complex> xs{x};
                     const auto a = scalar_product_args(xs);
                     const PsiVector ps{1, a, psi1_explicit(th, a[0], a[1], a[2]), Normalization::RawUnit, ""};
                     for (K k : all_kinds) {
                       const Complex m = scalar_measure(th, xs, lam, k, ps);
                       w.below(rel_diff_scaled(m, Z1_closed(th, x, lam, k)));
                       w.below(rel_diff_scaled(m, scalar_predict(th, xs, lam, k)));
                     }
                   }
                   return Outcome::below(w.value, ctx.tolerance(tol::closed_form), {{"draws", 10}});
                 }});

  out.push_back({"scalars.empty_chain", Suite::Scalars, 0, "scalar products of the one-site chain",
                 [](CheckContext& ctx) {
                   Theta<Complex> th(ThetaParams::make(scalar_p));
                   const Complex lam = ctx.complex_point();
                   Worst w;
                   for (K k : all_kinds)
                     w.below(std::abs(scalar_measure(th, {}, lam, k, psi0()) - scalar_predict(th, {}, lam, k)));
                   return Outcome::below(w.value, ctx.tolerance(tol::closed_form));
                 }});

  for (int n = 1; n <= cfg.n_max; ++n) {
    const std::string tag = ".n=" + std::to_string(n);

    out.push_back({"scalars.cross_ratios" + tag, Suite::Scalars, 8,
                   "scalar products agree with the closed forms up to one constant", [n](CheckContext& ctx) {
                     Theta<Complex> th(ThetaParams::make(scalar_p));
                     Worst w;
                     for (int s = 0; s < 5; ++s) {
                       const auto xs = random_xs(ctx, n);
                       const PsiVector ps = solve_psi(th, scalar_product_args(xs));
                       for (int q = 0; q < 3; ++q) {
                         const Complex l1 = ctx.complex_point(), l2 = ctx.complex_point();
                         const Complex ref = scalar_measure(th, xs, l1, K::Z, ps) / scalar_predict(th, xs, l1, K::Z);
                         for (K k : all_kinds)
                           for (Complex l : {l1, l2})
                             w.below(rel_diff_scaled(scalar_measure(th, xs, l, k, ps) / scalar_predict(th, xs, l, k), ref));
                       }
                     }
                     return Outcome::below(w.value, ctx.tolerance(tol::cross_ratio),
                                           {{"n", n}, {"x_sets", 5}, {"lambda_pairs", 3}});
                   }});

    out.push_back({"scalars.trivial_zeros" + tag, Suite::Scalars, 8, "scalar products vanish at the trivial zeros",
                   [n](CheckContext& ctx) {
                     Theta<Complex> th(ThetaParams::make(scalar_p));
                     BetaPoints<Complex> b(th);
                     const auto xs = random_xs(ctx, n);
                     const Complex lam = ctx.complex_point();
                     const CVec gen = solve_psi(th, scalar_product_args(xs)).state;
                     double worst = std::numeric_limits<double>::max();
                     json factors;
                     auto record = [&](const std::string& what, double g, double z) {
                       const double f = z > 0 ? g / z : std::numeric_limits<double>::max();
                       factors[what] = f;
                       worst = std::min(worst, f);
                     };
                     const std::pair<const char*, Complex> zpts[] = {{"+beta1", b.b1}, {"-beta3", -b.b3}, {"-beta4", -b.b4}};
                     for (const auto& [name, beta] : zpts) {
                       auto x = xs;
                       x[n - 1] = beta;
                       record(std::string("Z ") + name, overlap(th, xs, lam, K::Z, gen),
                              overlap(th, x, lam, K::Z, solve_psi(th, scalar_product_args(x)).state));
                     }
                     {
                       auto x = xs;
                       x[0] = -b.b2;
                       const CVec ps = solve_psi(th, scalar_product_args(x)).state;
                       for (K k : {K::ZbarPlus, K::ZbarMinus})
                         record(std::string(kind_name(k)) + " -beta2", overlap(th, xs, lam, k, gen), overlap(th, x, lam, k, ps));
                     }
                     {
                       // -beta1 is a wheel point: reach it from +eta with the exchange relation
                       const int L = 2 * n + 1, i = n - 1;
                       auto x = xs;
                       x[i] = th.eta;
                       const CVec ps = solve_psi(th, scalar_product_args(x)).state;
                       const CVec v = rcheck_at(th, -2.0 * th.eta, 2 * i + 1, L) * ps / r_weight(th, -2.0 * th.eta);
                       x[i] = -th.eta;
                       for (K k : all_kinds)
                         record(std::string(kind_name(k)) + " -beta1", overlap(th, xs, lam, k, gen), overlap(th, x, lam, k, v));
                     }
                     return Outcome::above(worst, tol::zero_suppression, {{"n", n}, {"suppression", factors}});
                   }});

    out.push_back({"scalars.inversion" + tag, Suite::Scalars, 0, "behaviour under x -> -x", [n](CheckContext& ctx) {
                     Theta<Complex> th(ThetaParams::make(scalar_p));
                     const Complex e = th.eta;
                     const int L = 2 * n + 1;
                     const auto xs = random_xs(ctx, n);
                     const Complex lam = ctx.complex_point();
                     const CVec ps = solve_psi(th, scalar_product_args(xs)).state;
                     Worst w;
                     for (int i = 0; i < n; ++i) {
                       const Complex x = xs[i];
                       const CVec inv = rcheck_at(th, -2.0 * x, 2 * i + 1, L) * ps / r_weight(th, -2.0 * x);
                       auto xm = xs;
                       xm[i] = -x;
                       w.below(rel_diff_scaled(th.T4(2.0 * (e + x)) * pair(xi_vector(th, xm, lam), inv),
                                               th.T4(2.0 * (e - x)) * pair(xi_vector(th, xs, lam), ps)));
                       w.below(rel_diff_scaled(th.T1(2.0 * (e + x)) * pair(xibar_vector(th, xm, lam, 1), inv),
                                               th.T1(2.0 * (e - x)) * pair(xibar_vector(th, xs, lam, 1), ps)));
                     }
                     return Outcome::below(w.value, ctx.tolerance(tol::structural), {{"n", n}});
                   }});
  }

  // reductions of the closed forms and of the measured scalar products
  out.push_back({"scalars.closed_form_reduction", Suite::Scalars, 0, "closed forms reduce when x_1 = x_i + eta",
                 [nm = cfg.n_max](CheckContext& ctx) {
                   Theta<Complex> th(ThetaParams::make(scalar_p));
                   const Complex lam = ctx.complex_point();
                   Worst w;
                   for (int n = 2; n <= nm + 1; ++n) {
                     const auto xs = random_xs(ctx, n);
                     for (int i = 1; i < n; ++i) {
                       auto x = xs;
                       x[0] = x[i] + th.eta;
                       std::vector<Complex> rest;
                       for (int j = 1; j < n; ++j)
                         if (j != i) rest.push_back(x[j]);
                       const Complex prod = reduction_product(th, x, i);
                       const Complex scale = std::abs(Y_predict(th, x, lam, K::ZbarPlus));
                       w.below(rel_diff_scaled(Y_predict(th, x, lam, K::Z), reduction_F(th, x[i], lam) * prod * Y_predict(th, rest, lam, K::Z)));
                       for (K k : {K::ZbarPlus, K::ZbarMinus}) {
                         const Complex a = Y_predict(th, x, lam, k), c = reduction_Fbar(th, x[i], lam) * prod * Y_predict(th, rest, lam, k);
                         // the minus sector vanishes identically once the chain is exhausted
                         w.below(std::abs(a - c) / std::max({std::abs(a), std::abs(c), std::abs(scale)}));
                       }
                     }
                   }
                   return Outcome::below(w.value, ctx.tolerance(tol::tsuchiya), {{"n_max", nm + 1}});
                 }});

  out.push_back({"scalars.closed_form_half_periods", Suite::Scalars, 0, "closed forms at half-period arguments",
                 [nm = cfg.n_max](CheckContext& ctx) {
                   Theta<Complex> th(ThetaParams::make(scalar_p));
                   BetaPoints<Complex> b(th);
                   const Complex e = th.eta, lam = ctx.complex_point();
                   Worst w;
                   for (int n = 2; n <= nm + 1; ++n) {
                     const auto xs = random_xs(ctx, n);
                     auto x = xs;
                     x[0] = b.b2;
                     const std::vector<Complex> rest(x.begin() + 1, x.end());
                     Complex p2(1);
                     for (const auto& q : rest) p2 *= th.t2(q) * th.t2(q);
                     const Complex c = (n % 2 == 1 ? 1.0 : -1.0) * th.t2(e + lam) / th.T4(0.0);
                     w.below(rel_diff_scaled(Y_predict(th, x, lam, K::Z), c * p2 * Y_predict(th, rest, lam, K::Z)));
                     for (int bi = 3; bi <= 4; ++bi) {
                       auto y = xs;
                       y[0] = bi == 3 ? b.b3 : b.b4;
                       const std::vector<Complex> r(y.begin() + 1, y.end());
                       Complex pr(1);
                       for (const auto& q : r) pr *= bi == 3 ? th.t3(q) * th.t3(q) : th.t4(q) * th.t4(q);
                       const Complex cc = -std::pow(th.cp(), -n / 2.0) * th.expi(-2.0 * n * e) * th.t2(e) *
                                          (bi == 3 ? th.t3(0.0) * th.t3(e + lam) : th.t4(0.0) * th.t4(e + lam)) / th.T4(0.0);
                       for (K k : {K::ZbarPlus, K::ZbarMinus}) {
                         // at beta3 the sector label flips
                         const K kr = bi == 3 ? (k == K::ZbarPlus ? K::ZbarMinus : K::ZbarPlus) : k;
                         w.below(rel_diff_scaled(Y_predict(th, y, lam, k), cc * pr * Y_predict(th, r, lam, kr)));
                       }
                     }
                   }
                   return Outcome::below(w.value, ctx.tolerance(tol::tsuchiya), {{"n_max", nm + 1}});
                 }});

  out.push_back({"scalars.measured_reduction", Suite::Scalars, 0,
                 "measured scalar products reduce when x_1 = x_i + eta", [nm = cfg.n_max](CheckContext& ctx) {
                   Theta<Complex> th(ThetaParams::make(scalar_p));
                   const Complex l0 = ctx.complex_point(), l1 = ctx.complex_point();
                   auto X = [&](const std::vector<Complex>& xx, const PsiVector& p, Complex l, K k) {
                     return XY_extract(th, xx, scalar_measure(th, xx, l, k, p), k);
                   };
                   Worst w;
                   for (int n = 2; n <= nm; ++n) {
                     const auto xs = random_xs(ctx, n);
                     for (int i = 1; i < n; ++i) {
                       auto x = xs;
                       x[0] = x[i] + th.eta;
                       const PsiVector ps = solve_psi(th, scalar_product_args(x));
                       std::vector<Complex> rest;
                       for (int j = 1; j < n; ++j)
                         if (j != i) rest.push_back(x[j]);
                       const PsiVector low = solve_scalar(th, rest);
                       const Complex lhs = (X(x, ps, l0, K::Z) / X(x, ps, l1, K::Z)) / (X(rest, low, l0, K::Z) / X(rest, low, l1, K::Z));
                       w.below(rel_diff_scaled(lhs, reduction_F(th, x[i], l0) / reduction_F(th, x[i], l1)));
                       const Complex lb =
                           (X(x, ps, l0, K::ZbarPlus) / X(x, ps, l1, K::Z)) / (X(rest, low, l0, K::ZbarPlus) / X(rest, low, l1, K::Z));
                       w.below(rel_diff_scaled(lb, reduction_Fbar(th, x[i], l0) / reduction_F(th, x[i], l1)));
                     }
                   }
                   return Outcome::below(w.value, ctx.tolerance(tol::cross_ratio), {{"n_max", nm}});
                 }});

  // homogeneous exact suite
  for (int n = 0; n <= cfg.n_max; ++n)
    for (const auto& zeta : cfg.zeta_values) {
      const std::string id = "scalars.homogeneous.n=" + std::to_string(n) + ".zeta=" + zeta.get_str();
      out.push_back({id, Suite::Scalars, 9, "homogeneous components and sum rules in closed form",
                     [n, zeta, mus = cfg.mu_values, nus = cfg.nu_values](CheckContext&) {
                       const ExactPsi e = homogeneous_psi_exact(n, zeta);
                       std::map<std::string, BigRational> pt{{"z", zeta}};
                       json bad = json::array();
                       auto expect = [&](const std::string& what, const BigRational& got, const RatFunc& want) {
                         if (got != want.eval_rational(pt)) bad.push_back(what);
                       };
                       expect("polarized", e.psi[polarized_down_index(n)], component_predict(n, ComponentPattern::Polarized));
                       expect("almost_polarized", e.psi[almost_polarized_index(n)],
                              component_predict(n, ComponentPattern::AlmostPolarized));
                       for (const auto& mu : mus) {
                         pt["m"] = mu;
                         expect("S(" + mu.get_str() + ")", S_measure(n, mu, e.psi), S_predict(n));
                       }
                       for (const auto& nu : nus)
                         for (int sg : {1, -1}) {
                           pt["n"] = nu;
                           expect(std::string("Sbar") + (sg > 0 ? "+" : "-") + "(" + nu.get_str() + ")",
                                  Sbar_measure(n, nu, sg, e.psi), Sbar_predict(n, sg));
                         }
                       expect("Sigma", Sigma_measure(e.psi), Sigma_predict(n));
                       expect("Sigmabar", Sigma_measure(e.psibar), Sigmabar_predict(n));
                       expect("norm", norm_measure(e.psi), norm_predict(n));
                       return Outcome::equality(bad.empty(), {{"n", n}, {"zeta", zeta.get_str()}, {"mismatched", bad}});
                     }});
    }

  // trigonometric point zeta = 0
  out.push_back({"scalars.trig_limit", Suite::Scalars, 10, "trigonometric limit gives refined ASM enumerations",
                 [nm = cfg.n_max](CheckContext&) {
                   json bad = json::array();
                   for (int n = 0; n <= nm; ++n) {
                     const ExactPsi e = homogeneous_psi_exact(n, BigRational(0));
                     const RatFunc refined = refined_asm_polynomial(n);
                     if (S_predict(n).substitute("z", RatFunc()) != refined) bad.push_back("S polynomial n=" + std::to_string(n));
                     for (int mu = -2; mu <= 3; ++mu)
                       if (S_measure(n, BigRational(mu), e.psi) != refined.eval_rational({{"m", BigRational(mu)}}))
                         bad.push_back("S n=" + std::to_string(n) + " mu=" + std::to_string(mu));
                     for (int sg : {1, -1}) {
                       const RatFunc t = Sbar_trig_predict(n, sg);
                       if (Sbar_predict(n, sg).substitute("z", RatFunc()) != t)
                         bad.push_back("Sbar polynomial n=" + std::to_string(n));
                       for (int nu = 0; nu <= 3; ++nu)
                         if (Sbar_measure(n, BigRational(nu), sg, e.psi) != t.eval_rational({{"n", BigRational(nu)}}))
                           bad.push_back("Sbar n=" + std::to_string(n) + " nu=" + std::to_string(nu));
                     }
                   }
                   return Outcome::equality(bad.empty(), {{"n_max", nm}, {"mismatched", bad}});
                 }});

  out.push_back({"scalars.schur_factorisation", Suite::Scalars, 10, "Schur function factorisation into symplectic characters",
                 [](CheckContext& ctx) {
                   Worst w;
                   auto pt = [&](double base_re, double base_im) {
                     return std::polar(std::abs(Complex(base_re, base_im)) + ctx.uniform(0.0, 0.3), ctx.uniform(0.0, 2 * M_PI));
                   };
                   for (int d = 0; d < 3; ++d) {
                     const Complex z = pt(1.2, 0.5);
                     for (int k = 0; k <= 1; ++k) {
                       std::vector<Complex> a, b;
                       for (int i = 0; i < 2 * k; ++i) a.push_back(pt(1.2, 0.5) * (1.0 + 0.4 * i));
                       b = a;
                       b.push_back(pt(1.6, 0.2));
                       w.below(schur_factorisation_residual(k, a, z, false));
                       w.below(schur_factorisation_residual(k, b, z, true));
                     }
                   }
                   return Outcome::below(w.value, ctx.tolerance(tol::trig), {{"k", json::array({0, 1})}});
                 }});

  out.push_back({"scalars.trig_symplectic", Suite::Scalars, 10, "trigonometric polynomial as a symplectic character",
                 [](CheckContext& ctx) {
                   Worst w;
                   for (int k = 1; k <= 4; ++k) {
                     std::vector<Complex> zs;
                     for (int i = 0; i < 2 * k; ++i)
                       zs.push_back(std::polar(1.2 + 0.5 * i + ctx.uniform(0.0, 0.2), ctx.uniform(0.0, 2 * M_PI)));
                     w.below(trig_symplectic_residual(k, zs));
                   }
                   return Outcome::below(w.value, ctx.tolerance(tol::trig), {{"k_max", 4}});
                 }});
  return out;
}

}  // namespace susy8v::suites
