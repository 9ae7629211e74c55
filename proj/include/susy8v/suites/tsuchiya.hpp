#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "susy8v/check.hpp"
#include "susy8v/rzpoly.hpp"
#include "susy8v/tsuchiya.hpp"

namespace susy8v::suites {

namespace detail {

inline Complex strip_point(CheckContext& ctx, const Theta<Complex>& th) {
  return {ctx.uniform(0.0, M_PI), ctx.uniform(-0.2, 0.2) * th.pitau.imag()};
}

inline std::vector<Complex> strip_points(CheckContext& ctx, const Theta<Complex>& th, int count) {
  std::vector<Complex> x;
  for (int i = 0; i < count; ++i) x.push_back(strip_point(ctx, th));
  return x;
}

}  // namespace detail

inline std::vector<CheckSpec> tsuchiya_checks(const RunConfig& cfg) {
  using detail::strip_points;
  std::vector<CheckSpec> out;
  for (double p : cfg.p_values) {
    const std::string tag = ".p=" + num_tag(p);

    out.push_back({"tsuchiya.uniformisation" + tag, Suite::Tsuchiya, 3,
                   "elliptic determinant equals the polynomial under the uniformising map", [p](CheckContext& ctx) {
                     Theta<Complex> th(ThetaParams::make(p));
                     const Complex z = zeta_of_p(th);
                     Worst w;
                     for (int k = 1; k <= 3; ++k)
                       for (int s = 0; s < 20; ++s) {
                         const auto x = strip_points(ctx, th, 2 * k);
                         std::vector<Complex> wx;
                         for (const auto& xi : x) wx.push_back(w_map(th, xi));
                         w.below(rel_diff_scaled(tsuchiya_H(th, k, x), uniformisation_prefactor(th, k, x) * H_numeric(k, wx, z)));
                       }
                     return Outcome::below(w.value, ctx.tolerance(tol::uniformisation),
                                           {{"p", p}, {"k_max", 3}, {"sets", 20}, {"zeta", z.real()}});
                   }});

    out.push_back({"tsuchiya.symmetry" + tag, Suite::Tsuchiya, 3, "symmetry of the elliptic determinant",
                   [p](CheckContext& ctx) {
                     Theta<Complex> th(ThetaParams::make(p));
                     Worst w;
                     for (int k = 2; k <= 3; ++k)
                       for (int s = 0; s < 5; ++s) {
                         auto x = strip_points(ctx, th, 2 * k);
                         const Complex h = tsuchiya_H(th, k, x);
                         std::shuffle(x.begin(), x.end(), ctx.rng());
                         w.below(rel_diff_scaled(h, tsuchiya_H(th, k, x)));
                       }
                     return Outcome::below(w.value, ctx.tolerance(tol::tsuchiya), {{"p", p}, {"k", json::array({2, 3})}});
                   }});

    out.push_back({"tsuchiya.reduction" + tag, Suite::Tsuchiya, 3, "reduction when two arguments differ by eta",
                   [p](CheckContext& ctx) {
                     Theta<Complex> th(ThetaParams::make(p));
                     Worst w;
                     for (int k = 2; k <= 3; ++k) {
                       const auto x0 = strip_points(ctx, th, 2 * k);
                       for (std::size_t i = 1; i < x0.size(); ++i) {
                         auto x = x0;
                         x[0] = x0[i] + th.eta;
                         std::vector<Complex> rest;
                         for (std::size_t j = 1; j < x0.size(); ++j)
                           if (j != i) rest.push_back(x0[j]);
                         w.below(rel_diff_scaled(tsuchiya_H(th, k, x),
                                                 tsuchiya_reduction_factor(th, x, i) * tsuchiya_H(th, k - 1, rest)));
                       }
                     }
                     return Outcome::below(w.value, ctx.tolerance(tol::tsuchiya), {{"p", p}, {"k", json::array({2, 3})}});
                   }});

    out.push_back({"tsuchiya.condensation" + tag, Suite::Tsuchiya, 0, "condensation formula", [p](CheckContext& ctx) {
                     Theta<Complex> th(ThetaParams::make(p));
                     Worst w;
                     for (int k = 2; k <= 3; ++k) {
                       const auto x = strip_points(ctx, th, 2 * k);
                       w.below(rel_diff_scaled(tsuchiya_H(th, k, x), tsuchiya_condensed(th, k, x)));
                     }
                     return Outcome::below(w.value, ctx.tolerance(tol::tsuchiya), {{"p", p}});
                   }});

    out.push_back({"tsuchiya.H4_beta34" + tag, Suite::Tsuchiya, 0, "closed form at the two special half periods",
                   [p](CheckContext& ctx) {
                     Theta<Complex> th(ThetaParams::make(p));
                     BetaPoints<Complex> b(th);
                     Worst w;
                     for (int s = 0; s < 5; ++s) {
                       const auto x = strip_points(ctx, th, 2);
                       w.below(rel_diff_scaled(tsuchiya_H(th, 2, {x[0], x[1], b.b3, b.b4}), tsuchiya_H4_beta34(th, x[0], x[1])));
                     }
                     return Outcome::below(w.value, ctx.tolerance(tol::tsuchiya), {{"p", p}});
                   }});

    out.push_back({"tsuchiya.special_points" + tag, Suite::Tsuchiya, 0,
                   "uniformising map sends half periods to the special arguments", [p](CheckContext& ctx) {
                     Theta<Complex> th(ThetaParams::make(p));
                     BetaPoints<Complex> b(th);
                     const Complex z = zeta_of_p(th), one(1);
                     Worst w;
                     w.below(std::abs(w_map(th, b.b2) - Complex(-0.5)));
                     w.below(rel_diff(w_map(th, b.b3), one / (one + z)));
                     w.below(rel_diff(w_map(th, b.b4), one / (one - z)));
                     return Outcome::below(w.value, ctx.tolerance(tol::tsuchiya), {{"p", p}, {"zeta", z.real()}});
                   }});

    out.push_back({"tsuchiya.quasi_periodicity" + tag, Suite::Tsuchiya, 0, "quasi-periodicity in one argument",
                   [p](CheckContext& ctx) {
                     Theta<Complex> th(ThetaParams::make(p));
                     Worst w;
                     for (int k = 1; k <= 3; ++k) {
                       auto x = strip_points(ctx, th, 2 * k);
                       const Complex h = tsuchiya_H(th, k, x);
                       const Complex f = std::pow(p, -2.0 * (k - 1)) * std::exp(Complex(0, -4.0 * (k - 1)) * x[0]);
                       x[0] += th.pitau;
                       w.below(rel_diff_scaled(tsuchiya_H(th, k, x), f * h));
                     }
                     return Outcome::below(w.value, ctx.tolerance(tol::tsuchiya), {{"p", p}});
                   }});
  }
  return out;
}

}  // namespace susy8v::suites
