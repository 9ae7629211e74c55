#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "susy8v/check.hpp"
#include "susy8v/eigensolver.hpp"
#include "susy8v/scalars.hpp"
#include "susy8v/tsuchiya.hpp"

namespace susy8v::suites {

namespace detail {

inline constexpr double eigen_p = 0.25;

inline std::vector<Complex> random_inhoms(CheckContext& ctx, int L) {
  std::vector<Complex> u(L);
  for (auto& z : u) z = ctx.complex_point();
  return u;
}

// Psi scaled so that its Z at lambda0 matches the closed form; stays finite
// as the arguments approach the wheel.
inline CVec z_anchored(const Theta<Complex>& th, const std::vector<Complex>& xs, Complex lambda0) {
  SolveOptions loose;
  loose.gap = 1.0;
  loose.tol_null = 1e-12;
  const PsiVector ps = solve_psi(th, scalar_product_args(xs), loose);
  return scalar_predict(th, xs, lambda0, ScalarKind::Z) / Z_measure(th, xs, lambda0, ps) * ps.state;
}

}  // namespace detail

inline std::vector<CheckSpec> eigenvector_checks(const RunConfig& cfg) {
  using namespace detail;
  std::vector<CheckSpec> out;
  const int n_struct = std::min(cfg.n_max, 2);

  for (int n = 1; n <= cfg.n_max; ++n) {
    const std::string tag = ".n=" + std::to_string(n);
    out.push_back({"eigen.residual" + tag, Suite::Eigenvector, 0, "eigenvector of the transfer matrix",
                   [n](CheckContext& ctx) {
                     Theta<Complex> th(ThetaParams::make(eigen_p));
                     const auto in = random_inhoms(ctx, 2 * n + 1);
                     const PsiVector ps = solve_psi(th, in);
                     Worst w;
                     for (int d = 0; d < 3; ++d) {
                       const Complex u = ctx.complex_point();
                       const CMat T = transfer_matrix(th, u, in);
                       w.below((T * ps.state - theta_eigenvalue(th, u, in) * ps.state).norm() / T.norm());
                     }
                     return Outcome::below(w.value, ctx.tolerance(tol::eigen), {{"n", n}, {"p", eigen_p}});
                   }});

    out.push_back({"eigen.multiplicity" + tag, Suite::Eigenvector, 5, "two-fold eigenvalue in the homogeneous limit",
                   [n](CheckContext& ctx) {
                     Theta<Complex> th(ThetaParams::make(eigen_p));
                     const std::vector<Complex> in(2 * n + 1, Complex(0));
                     double worst = std::numeric_limits<double>::max();
                     json gaps = json::array();
                     for (int d = 0; d < 3; ++d) {
                       const Complex u = ctx.complex_point();
                       CMat M = transfer_matrix(th, u, in);
                       M.diagonal().array() -= theta_eigenvalue(th, u, in);
                       const auto s = singular_values_ascending(M);
                       const double ratio = s(1) > 0 ? s(2) / s(1) : std::numeric_limits<double>::max();
                       gaps.push_back(ratio);
                       worst = std::min(worst, ratio);
                     }
                     return Outcome::above(worst, tol::gap_ratio, {{"n", n}, {"p", eigen_p}, {"gap_ratios", gaps}});
                   }});

    out.push_back({"eigen.xyz_bridge" + tag, Suite::Eigenvector, 0,
                   "homogeneous eigenvector is the XYZ ground state at the matching anisotropy", [n](CheckContext& ctx) {
                     Theta<Complex> th(ThetaParams::make(eigen_p));
                     const double zeta = zeta_of_p(th).real();
                     const PsiVector ps = solve_psi(th, std::vector<Complex>(2 * n + 1, Complex(0)));
                     return Outcome::below(check_collinear(ps.state, xyz_kernel(n, zeta)).residual, ctx.tolerance(tol::bridge),
                                           {{"n", n}, {"zeta", zeta}});
                   }});
  }

  out.push_back({"eigen.n1_explicit", Suite::Eigenvector, 7, "three-site eigenvector in closed form",
                 [](CheckContext& ctx) {
                   Theta<Complex> th(ThetaParams::make(eigen_p));
                   Worst w;
                   for (int d = 0; d < 10; ++d) {
                     const auto in = random_inhoms(ctx, 3);
                     w.below(check_collinear(solve_psi(th, in).state, psi1_explicit(th, in[0], in[1], in[2])).residual);
                   }
                   return Outcome::below(w.value, ctx.tolerance(tol::closed_form), {{"draws", 10}});
                 }});

  // structural relations, n <= 2
  auto structural = [&](const std::string& name, const std::string& anchor,
                        std::function<double(const Theta<Complex>&, int, const std::vector<Complex>&, const PsiVector&)> f) {
    out.push_back({"structural." + name, Suite::Eigenvector, 6, anchor, [n_struct, f](CheckContext& ctx) {
                     Theta<Complex> th(ThetaParams::make(eigen_p));
                     Worst w;
                     for (int n = 1; n <= n_struct; ++n) {
                       const auto u = random_inhoms(ctx, 2 * n + 1);
                       w.below(f(th, n, u, solve_psi(th, u)));
                     }
                     return Outcome::below(w.value, ctx.tolerance(tol::structural), {{"n_max", n_struct}});
                   }});
  };

  structural("exchange", "exchange relation", [](const Theta<Complex>& th, int n, const auto& u, const PsiVector& ps) {
    const int L = 2 * n + 1;
    double w = 0;
    for (int i = 1; i < L; ++i) {
      auto v = u;
      std::swap(v[i - 1], v[i]);
      const CVec lhs = rcheck_at(th, u[i] - u[i - 1], i, L) * ps.state;
      w = std::max(w, check_collinear(lhs, solve_psi(th, v).state).residual);
    }
    return w;
  });

  structural("spin_flip", "half-period shift flips one spin",
             [](const Theta<Complex>& th, int n, const auto& u, const PsiVector& ps) {
               const int L = 2 * n + 1;
               double w = 0;
               for (int i = 1; i <= L; ++i) {
                 auto v = u;
                 v[i - 1] += th.pitau;
                 w = std::max(w, check_collinear(CVec(sigma('x', i, L) * ps.state), solve_psi(th, v).state).residual);
               }
               return w;
             });

  structural("sign_string", "real period shift acts by a sign string",
             [](const Theta<Complex>& th, int n, const auto& u, const PsiVector& ps) {
               const int L = 2 * n + 1;
               double w = 0;
               for (int i = 1; i <= L; ++i) {
                 auto v = u;
                 v[i - 1] += th.pi;
                 w = std::max(w, check_collinear(sigma_z_string(ps.state, L, i), solve_psi(th, v).state).residual);
               }
               return w;
             });

  structural("double_period", "invariance under a full quasi-period",
             [](const Theta<Complex>& th, int n, const auto& u, const PsiVector& ps) {
               const int L = 2 * n + 1;
               double w = 0;
               for (int i = 1; i <= L; ++i) {
                 auto v = u;
                 v[i - 1] += 2.0 * th.pitau;
                 w = std::max(w, check_collinear(ps.state, solve_psi(th, v).state).residual);
               }
               return w;
             });

  structural("reduction", "reduction to a singlet times a shorter chain",
             [](const Theta<Complex>& th, int n, const auto& u, const PsiVector&) {
               const int L = 2 * n + 1;
               double w = 0;
               for (int i = 1; i < L; ++i) {
                 auto v = u;
                 v[i] = v[i - 1] + 2.0 * th.eta;
                 std::vector<Complex> rest;
                 for (int j = 0; j < L; ++j)
                   if (j != i - 1 && j != i) rest.push_back(v[j]);
                 const CVec low = n == 1 ? CVec(CVec::Ones(2)) : solve_psi(th, rest).state;
                 w = std::max(w, check_collinear(solve_psi(th, v).state, CVec(phi_embed(i, L - 2) * low)).residual);
               }
               return w;
             });

  out.push_back({"structural.wheel", Suite::Eigenvector, 6, "eigenvector vanishes on the wheel",
                 [n_struct](CheckContext& ctx) {
                   Theta<Complex> th(ThetaParams::make(eigen_p));
                   const Complex e = th.eta;
                   constexpr double eps = 1e-8;
                   Worst w;
                   json slopes = json::array();
                   // closed form at (u, u + 2 eta, u + 4 eta + eps)
                   const Complex u = ctx.complex_point();
                   const CVec gen = psi1_explicit(th, u, ctx.complex_point(), ctx.complex_point());
                   const double r1 = psi1_explicit(th, u, u + 2.0 * e, u + 4.0 * e + eps).norm() / gen.norm();
                   w.below(r1);
                   slopes.push_back(r1 / eps);
                   // scalar-product arguments approaching x_1 = -eta
                   for (int n = 1; n <= n_struct; ++n) {
                     std::vector<Complex> xs(n);
                     for (auto& z : xs) z = ctx.complex_point();
                     const Complex l0 = ctx.complex_point(), l1 = ctx.complex_point();
                     const double g = z_anchored(th, xs, l0).norm();
                     auto x = xs;
                     x[0] = -e + eps;
                     const CVec v = z_anchored(th, x, l0);
                     const double r = v.norm() / g;
                     w.below(r);
                     w.below(std::abs(pair(xi_vector(th, x, l1), v)) / g);
                     w.below(std::abs(pair(xibar_vector(th, x, l1, 1), v)) / g);
                     slopes.push_back(r / eps);
                   }
                   return Outcome::below(w.value, ctx.tolerance(tol::structural),
                                         {{"eps", eps}, {"n_max", n_struct}, {"norm_over_eps", slopes}});
                 }});

  // U-transform between zeta and (zeta + 3)/(zeta - 1)
  const int n_u = std::min(cfg.n_max, 2);
  out.push_back({"u_transform.intertwiner", Suite::Eigenvector, 0, "spin-chain Hamiltonians intertwined by U",
                 [n_u](CheckContext& ctx) {
                   Worst w;
                   const double z = 0.5, zp = (z + 3) / (z - 1);
                   for (int n = 0; n <= n_u; ++n) {
                     const int L = 2 * n + 1;
                     const CMat U = u_transform(L);
                     w.below(op_residual(xyz_hamiltonian(zp, L) * U, (z - 1) / 2 * U * xyz_hamiltonian(z, L)));
                   }
                   return Outcome::below(w.value, ctx.tolerance(tol::u_transform), {{"zeta", z}, {"n_max", n_u}});
                 }});

  auto u_pair = [](int n) {
    const BigRational z(1, 2), zp = (z + 3) / (z - 1);
    const double zd = z.get_d();
    const int k = n / 2;
    const double e = n % 2 == 0 ? k * (2 * k + 1) : (k + 1) * (2 * k + 1);
    const double B = std::pow(2.0, -0.5) * std::pow((zd - 1) / 2, e);
    return std::make_tuple(homogeneous_psi(n, z), homogeneous_psi(n, zp), B);
  };

  out.push_back({"u_transform.eigenvector", Suite::Eigenvector, 11, "U maps the eigenvector to its Moebius image",
                 [n_u, u_pair](CheckContext& ctx) {
                   Worst w;
                   for (int n = 0; n <= n_u; ++n) {
                     const auto [a, b, B] = u_pair(n);
                     const CVec lhs = u_transform(2 * n + 1) * a.psi.state;
                     const CVec rhs = B * (b.psi.state + (n % 2 == 1 ? 1.0 : -1.0) * b.psibar.state);
                     w.below(vec_residual(lhs, rhs));
                   }
                   return Outcome::below(w.value, ctx.tolerance(tol::u_transform), {{"zeta", "1/2"}, {"n_max", n_u}});
                 }});

  out.push_back({"u_transform.normalisation", Suite::Eigenvector, 11, "square of the U-transform constant",
                 [n_u, u_pair](CheckContext& ctx) {
                   Worst w;
                   for (int n = 0; n <= n_u; ++n) {
                     const auto [a, b, B] = u_pair(n);
                     const double n1 = norm_measure(to_std(a.psi.state)).real(), n2 = norm_measure(to_std(b.psi.state)).real();
                     w.below(std::abs(B * B - n1 / (2 * n2)) / (B * B));
                   }
                   return Outcome::below(w.value, ctx.tolerance(tol::u_transform), {{"zeta", "1/2"}, {"n_max", n_u}});
                 }});

  out.push_back({"u_transform.component_sum", Suite::Eigenvector, 0, "component sum from the transformed vector",
                 [n_u](CheckContext& ctx) {
                   Worst w;
                   for (int n = 0; n <= n_u; ++n) {
                     const auto a = homogeneous_psi(n, BigRational(1, 2));
                     const Complex up = (u_transform(2 * n + 1) * a.psi.state)(0) * std::pow(2.0, n + 0.5);
                     w.below(rel_diff(up, Sigma_measure(to_std(a.psi.state))));
                   }
                   return Outcome::below(w.value, ctx.tolerance(tol::u_transform), {{"n_max", n_u}});
                 }});

  out.push_back({"u_transform.large_zeta", Suite::Eigenvector, 11, "large anisotropy limit is the polarized pair",
                 [n_u](CheckContext& ctx) {
                   Worst w;
                   const BigRational big(1000000);
                   for (int n = 0; n <= n_u; ++n) {
                     const int L = 2 * n + 1;
                     const auto c = homogeneous_psi(n, big);
                     const CVec t = c.psi.state * std::pow(1e6, -n * (n + 1) / 2.0);
                     CVec want = CVec::Zero(std::size_t(1) << L);
                     want((std::size_t(1) << L) - 1) = 1.0;
                     want(0) += n % 2 ? -1.0 : 1.0;
                     w.below((t - want).cwiseAbs().maxCoeff());
                   }
                   return Outcome::below(w.value, ctx.tolerance(tol::asymptotic), {{"zeta", 1e6}, {"n_max", n_u}});
                 }});
  return out;
}

}  // namespace susy8v::suites
