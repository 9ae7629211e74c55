#pragma once

#include <vector>

#include "susy8v/check.hpp"
#include "susy8v/theta.hpp"

namespace susy8v::suites {

namespace detail {

// Residuals of the standard quasi-periodicity and product identities at one
// point; templated so the same checks run at double and extended precision.
template <typename C>
double theta_identity_worst(const Theta<C>& th, const C& z) {
  using R = real_t<C>;
  const C two(2), zero(0);
  const C q = C(R(th.p), R(0));
  const C m = -th.expi(C(-2) * z) / q;  // -p^{-1} e^{-2iz}
  double w = 0;
  auto acc = [&](const C& a, const C& b) { w = std::max(w, rel_diff_scaled<C>(a, b)); };
  acc(th.t1(z + th.pi), -th.t1(z));
  acc(th.t2(z + th.pi), -th.t2(z));
  acc(th.t3(z + th.pi), th.t3(z));
  acc(th.t4(z + th.pi), th.t4(z));
  acc(th.t1(z + th.pitau), m * th.t1(z));
  acc(th.t2(z + th.pitau), -m * th.t2(z));
  acc(th.t3(z + th.pitau), -m * th.t3(z));
  acc(th.t4(z + th.pitau), m * th.t4(z));
  // nome doubling
  acc(th.t1(z) * th.t2(zero), two * th.T1(z) * th.T4(z));
  // Jacobi quartic
  const C a = th.t2(zero), b = th.t3(zero), c = th.t4(zero);
  acc(b * b * b * b, a * a * a * a + c * c * c * c);
  // the eta specialisation used for the n = 1 normalisation
  acc(th.t2(th.eta) * th.T4(th.eta), th.t2(zero) * th.T4(zero) / two);
  return w;
}

}  // namespace detail

inline std::vector<CheckSpec> theta_checks(const RunConfig& cfg) {
  std::vector<CheckSpec> out;
  for (double p : cfg.p_values) {
    const std::string tag = "p=" + num_tag(p);
    out.push_back({"theta.identities." + tag, Suite::Theta, 0, "theta quasi-periodicity and product identities",
                   [p](CheckContext& ctx) {
                     Theta<Complex> th(ThetaParams::make(p));
                     Worst w;
                     for (int i = 0; i < 20; ++i) w.below(detail::theta_identity_worst(th, ctx.complex_point(1.5, 0.4)));
                     return Outcome::below(w.value, ctx.tolerance(tol::theta), {{"p", p}, {"points", 20}});
                   }});
    out.push_back({"theta.extended_precision." + tag, Suite::Theta, 0, "theta quasi-periodicity and product identities",
                   [p](CheckContext& ctx) {
                     const int prec = ctx.config().precision;
                     if (prec <= 53) {
                       // agreement of the two evaluators at double precision
                       Theta<Complex> th(ThetaParams::make(p));
                       Theta<ComplexHP> hp(ThetaParams::make(p, {0, 0}, 166));
                       Worst w;
                       for (int i = 0; i < 10; ++i) {
                         const Complex z = ctx.complex_point(1.5, 0.4);
                         const ComplexHP zh(z.real(), z.imag());
                         for (int k = 1; k <= 4; ++k) w.below(rel_diff_scaled<Complex>(th.t(k, z), to_double(hp.t(k, zh))));
                       }
                       return Outcome::below(w.value, ctx.tolerance(tol::theta), {{"p", p}, {"precision", prec}});
                     }
                     Theta<ComplexHP> hp(ThetaParams::make(p, {0, 0}, prec));
                     Worst w;
                     for (int i = 0; i < 10; ++i) {
                       const Complex z = ctx.complex_point(1.5, 0.4);
                       w.below(detail::theta_identity_worst(hp, ComplexHP(z.real(), z.imag())));
                     }
                     return Outcome::below(w.value, ctx.tolerance(1e-40), {{"p", p}, {"precision", prec}});
                   }});
  }
  return out;
}

}  // namespace susy8v::suites
