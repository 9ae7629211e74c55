#pragma once

#include <vector>

#include "susy8v/check.hpp"
#include "susy8v/lattice.hpp"

namespace susy8v::suites {

inline std::vector<CheckSpec> lattice_checks(const RunConfig& cfg) {
  std::vector<CheckSpec> out;
  static constexpr int draws = 10;
  for (double p : cfg.p_values) {
    const std::string tag = ".p=" + num_tag(p);
    auto add = [&](const std::string& name, int criterion, const std::string& anchor,
                   std::function<double(const Theta<Complex>&, CheckContext&)> one_draw) {
      out.push_back({"lattice." + name + tag, Suite::Lattice, criterion, anchor, [p, one_draw](CheckContext& ctx) {
                       Theta<Complex> th(ThetaParams::make(p));
                       Worst w;
                       for (int d = 0; d < draws; ++d) w.below(one_draw(th, ctx));
                       return Outcome::below(w.value, ctx.tolerance(tol::lattice), {{"p", p}, {"draws", draws}});
                     }});
    };

    add("yang_baxter", 4, "Yang-Baxter equation", [](const Theta<Complex>& th, CheckContext& ctx) {
      const Complex u = ctx.complex_point(), v = ctx.complex_point();
      auto R = [&](Complex z, int i, int j) { return embed(CMat(r_matrix(th, z)), {i, j}, 3); };
      return op_residual(R(u - v, 1, 2) * R(u, 1, 3) * R(v, 2, 3), R(v, 2, 3) * R(u, 1, 3) * R(u - v, 1, 2));
    });

    add("braid", 4, "braid form of the Yang-Baxter equation", [](const Theta<Complex>& th, CheckContext& ctx) {
      const Complex u = ctx.complex_point(), v = ctx.complex_point();
      auto Rc = [&](Complex z, int i) { return rcheck_at(th, z, i, 3); };
      return op_residual(Rc(u - v, 1) * Rc(u, 2) * Rc(v, 1), Rc(v, 2) * Rc(u, 1) * Rc(u - v, 2));
    });

    add("boundary_yang_baxter", 4, "boundary Yang-Baxter relation for both boundary vectors",
        [](const Theta<Complex>& th, CheckContext& ctx) {
          const Complex x = ctx.complex_point(), y = ctx.complex_point(), lam = ctx.complex_point();
          double w = 0;
          for (int bar = 0; bar < 2; ++bar) {
            auto ch = [&](Complex z) { return bar ? chibar(th, z, lam) : chi(th, z, lam); };
            const CVec lhs = rcheck_at(th, x - y, 1, 4) * rcheck_at(th, -x - y, 2, 4) * kron(ch(x), ch(y));
            const CVec rhs = rcheck_at(th, x - y, 3, 4) * rcheck_at(th, -x - y, 2, 4) * kron(ch(y), ch(x));
            w = std::max(w, vec_residual(lhs, rhs));
          }
          return w;
        });

    for (int L : {1, 3, 5, 7}) {
      const std::string l = ".L=" + std::to_string(L);
      add("commuting_transfer" + l, 4, "commuting transfer matrices", [L](const Theta<Complex>& th, CheckContext& ctx) {
        std::vector<Complex> in(L);
        for (auto& z : in) z = ctx.complex_point();
        const CMat a = transfer_matrix(th, ctx.complex_point(), in), b = transfer_matrix(th, ctx.complex_point(), in);
        return op_residual(a * b, b * a);
      });
      add("spin_reversal" + l, 4, "transfer matrix commutes with spin reversal",
          [L](const Theta<Complex>& th, CheckContext& ctx) {
            std::vector<Complex> in(L);
            for (auto& z : in) z = ctx.complex_point();
            const CMat t = transfer_matrix(th, ctx.complex_point(), in), f = spin_reversal(L);
            return op_residual(t * f, f * t);
          });
      add("spin_parity" + l, 4, "transfer matrix commutes with spin parity",
          [L](const Theta<Complex>& th, CheckContext& ctx) {
            std::vector<Complex> in(L);
            for (auto& z : in) z = ctx.complex_point();
            const CMat t = transfer_matrix(th, ctx.complex_point(), in), q = spin_parity(L);
            return op_residual(t * q, q * t);
          });
    }

    add("boundary_exchange", 4, "R-matrix maps a boundary vector to its reflection",
        [](const Theta<Complex>& th, CheckContext& ctx) {
          const Complex x = ctx.complex_point(), lam = ctx.complex_point();
          const CVec c = chi(th, x, lam), cb = chibar(th, x, lam);
          const Eigen::Matrix4cd R = rcheck_matrix(th, 2.0 * x);
          const Complex r = r_weight(th, 2.0 * x);
          return std::max(vec_residual(R * c, g_fn(th, x) * r * chi(th, -x, lam)),
                          vec_residual(R * cb, gbar_fn(th, x) * r * chibar(th, -x, lam)));
        });

    add("singlet_matrix_element", 4, "boundary vectors against two singlets",
        [](const Theta<Complex>& th, CheckContext& ctx) {
          const Complex x = ctx.complex_point(), lam = ctx.complex_point();
          const CVec ss = kron(singlet(), singlet());
          const CMat Rm = rcheck_at(th, -2.0 * (x + th.eta), 2, 4);
          const Complex rr = r_weight(th, -2.0 * (x + th.eta));
          const Complex base = th.t2(0.0) * th.t2(0.0) * th.t1(x - lam) * th.t1(x + lam + 2.0 * th.eta) / 2.0;
          const Complex me = pair(kron(chi(th, x + 2.0 * th.eta, lam), chi(th, x, lam)), Rm * ss) / rr;
          const Complex meb = pair(kron(chibar(th, x + 2.0 * th.eta, lam), chibar(th, x, lam)), Rm * ss) / rr;
          return std::max(rel_diff_scaled(me, base * g_fn(th, x)), rel_diff_scaled(meb, base * gbar_fn(th, x)));
        });

    add("weights", 0, "weight constraint and regularity of the R-matrix",
        [](const Theta<Complex>& th, CheckContext& ctx) {
          const Complex u = ctx.complex_point();
          const auto w = vertex_weights(th, u);
          const Complex ab = w.a * w.b;
          const double s = std::abs((w.a * w.a + ab) * (w.b * w.b + ab) - (w.c * w.c + ab) * (w.d * w.d + ab)) /
                           std::max(1.0, std::pow(std::abs(w.a) + std::abs(w.b) + std::abs(w.c) + std::abs(w.d), 4));
          const CMat R0 = r_matrix(th, 0.0);
          const double p0 = op_residual(R0, CMat(permutation4()) * (th.T4(0.0) * th.T1(2.0 * th.eta) * th.T4(2.0 * th.eta)));
          return std::max({s, rel_diff(w.a + w.b, r_weight(th, u)), p0});
        });

    add("boundary_components", 0, "components of the boundary vectors", [](const Theta<Complex>& th, CheckContext& ctx) {
      const Complex x = ctx.complex_point(), lam = ctx.complex_point();
      const CVec c = chi(th, x, lam), cb = chibar(th, x, lam);
      const CVec dm = basis_state({1, 1}) - basis_state({0, 0}), dp = basis_state({1, 1}) + basis_state({0, 0});
      return std::max({rel_diff_scaled(pair(c, sigma('z', 1, 2) * singlet()), th.t2(th.eta + lam) * th.t1(x - th.eta)),
                       rel_diff_scaled(pair(cb, dm), th.t4(th.eta + lam) * th.t3(x - th.eta)),
                       rel_diff_scaled(pair(cb, dp), th.t3(th.eta + lam) * th.t4(x - th.eta)),
                       vec_residual(chi(th, x + th.pi, lam), -c)});
    });
  }
  return out;
}

}  // namespace susy8v::suites
