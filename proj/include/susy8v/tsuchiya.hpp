#pragma once

// Elliptic Tsuchiya determinant, the uniformising map w(x) and zeta(p).

#include <algorithm>
#include <numeric>
#include <vector>

#include "susy8v/errors.hpp"
#include "susy8v/numeric.hpp"
#include "susy8v/theta.hpp"

namespace susy8v {

template <typename C>
struct BetaPoints {
  C b1, b2, b3, b4;
  explicit BetaPoints(const Theta<C>& th) {
    const C half_pi = th.pi / C(2), half_pitau = th.pitau / C(2);
    b1 = th.eta;
    b2 = th.eta + half_pi;
    b3 = th.eta + half_pi + half_pitau;
    b4 = th.eta + half_pitau;
  }
};

// hh(x,y) = th1(x-y+eta) th1(x-y-eta) th1(x+y+eta) th1(x+y-eta)
template <typename C>
C hh(const Theta<C>& th, const C& x, const C& y) {
  const C& e = th.eta;
  return th.t1(x - y + e) * th.t1(x - y - e) * th.t1(x + y + e) * th.t1(x + y - e);
}

// prod_{i<j} th1(x_j - x_i) th1(x_j + x_i)
template <typename C>
C theta_vandermonde(const Theta<C>& th, const std::vector<C>& x) {
  C d(1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) d *= th.t1(x[j] - x[i]) * th.t1(x[j] + x[i]);
  return d;
}

inline double& tsuchiya_conditioning_threshold() {
  static double t = 1e-10;
  return t;
}

namespace detail {

template <typename C>
double min_pair_factor(const Theta<C>& th, const std::vector<C>& x) {
  double m = 1e300;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      m = std::min(m, magnitude(C(th.t1(x[j] - x[i]) * th.t1(x[j] + x[i]))));
  return m;
}

// det(prod_{l != j} hh(a_i, b_l)) / (D(a) D(b)); no division by hh.
template <typename C>
C tsuchiya_split(const Theta<C>& th, const std::vector<C>& a, const std::vector<C>& b) {
  const std::size_t k = a.size();
  CMatrix<C> h(k, std::vector<C>(k)), m(k, std::vector<C>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l) h[i][l] = hh(th, a[i], b[l]);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      C prod(1);
      for (std::size_t l = 0; l < k; ++l)
        if (l != j) prod *= h[i][l];
      m[i][j] = prod;
    }
  return det_lu(m) / (theta_vandermonde(th, a) * theta_vandermonde(th, b));
}

}  // namespace detail

// H_{2k}(x_1..x_{2k}). When a half is badly conditioned the arguments are
// regrouped (the function is symmetric); if no grouping works a
// ConditioningError is raised.
template <typename C>
C tsuchiya_H(const Theta<C>& th, int k, const std::vector<C>& x) {
  if (k == 0) return C(1);
  if (x.size() != static_cast<std::size_t>(2 * k)) throw DomainError("tsuchiya_H: need 2k arguments");
  const double thr = tsuchiya_conditioning_threshold();
  std::vector<C> a(x.begin(), x.begin() + k), b(x.begin() + k, x.end());
  if (std::min(detail::min_pair_factor(th, a), detail::min_pair_factor(th, b)) >= thr)
    return detail::tsuchiya_split(th, a, b);
  // choose the split with the best-conditioned Vandermonde factors
  std::vector<int> sel(2 * k, 0);
  std::fill(sel.begin() + k, sel.end(), 1);
  double best = -1.0;
  std::vector<C> ba, bb;
  do {
    std::vector<C> ta, tb;
    for (int i = 0; i < 2 * k; ++i) (sel[i] == 0 ? ta : tb).push_back(x[i]);
    double c = std::min(detail::min_pair_factor(th, ta), detail::min_pair_factor(th, tb));
    if (c > best) {
      best = c;
      ba = ta;
      bb = tb;
    }
  } while (std::next_permutation(sel.begin(), sel.end()));
  if (best < thr) throw ConditioningError("tsuchiya_H: coincident arguments cannot be separated by regrouping");
  return detail::tsuchiya_split(th, ba, bb);
}

// Condensed form with H_4 entries; k >= 2.
template <typename C>
C tsuchiya_condensed(const Theta<C>& th, int k, const std::vector<C>& x) {
  if (k < 2 || x.size() != static_cast<std::size_t>(2 * k)) throw DomainError("tsuchiya_condensed: need 2k arguments, k >= 2");
  C pref(1);
  for (int i = 0; i < k - 1; ++i)
    for (int j = 0; j < k - 1; ++j) pref *= hh(th, x[i], x[j + k]);
  std::vector<C> a(x.begin(), x.begin() + (k - 1)), b(x.begin() + k, x.begin() + (2 * k - 1));
  CMatrix<C> m(k - 1, std::vector<C>(k - 1));
  for (int i = 0; i < k - 1; ++i)
    for (int j = 0; j < k - 1; ++j)
      m[i][j] = tsuchiya_H(th, 2, {x[i], x[k - 1], x[j + k], x[2 * k - 1]}) / hh(th, x[i], x[j + k]);
  return pref * det_lu(m) / (theta_vandermonde(th, a) * theta_vandermonde(th, b));
}

// Closed form of H_4(x, y, beta3, beta4).
template <typename C>
C tsuchiya_H4_beta34(const Theta<C>& th, const C& x, const C& y) {
  const C& e = th.eta;
  C pref = -th.expi(C(2) * e) / th.cp() * th.t2(e) / th.t2(C(0));
  return pref * (th.t3(x + e) * th.t3(x - e) * th.t4(y) * th.t4(y) + th.t4(x + e) * th.t4(x - e) * th.t3(y) * th.t3(y));
}

// Product in the reduction relation at x_1 = x_i + eta (i >= 1, 0-based).
template <typename C>
C tsuchiya_reduction_factor(const Theta<C>& th, const std::vector<C>& x, std::size_t i) {
  C prod(1);
  for (std::size_t j = 1; j < x.size(); ++j)
    if (j != i) prod *= th.t1(x[i] - x[j] - th.eta) * th.t1(x[i] + x[j] - th.eta);
  return prod;
}

// w(x) = th4(eta,p^2)/th4(0,p^2) * th1(x)^2 / (th1(x-eta) th1(x+eta))
template <typename C>
C w_map(const Theta<C>& th, const C& x) {
  C den = th.t1(x - th.eta) * th.t1(x + th.eta);
  if (magnitude(den) < 1e-14) throw PoleError("w_map: argument at a pole");
  return th.T4(th.eta) / th.T4(C(0)) * th.t1(x) * th.t1(x) / den;
}

// zeta = (th1(eta,p^2)/th4(eta,p^2))^2
template <typename C>
C zeta_of_p(const Theta<C>& th) {
  C r = th.T1(th.eta) / th.T4(th.eta);
  return r * r;
}

// Prefactor f(x) of the uniformisation H_{2k}(x) = f(x) H_{2k}(w(x)).
template <typename C>
C uniformisation_prefactor(const Theta<C>& th, int k, const std::vector<C>& x) {
  const C& e = th.eta;
  C t1e = th.t1(e);
  C base = th.T4(e) / (t1e * t1e * th.T4(C(0)));
  C f(1);
  for (int i = 0; i < k * (k - 1); ++i) f *= base;
  for (const auto& xi : x) {
    C v = th.t1(xi + e) * th.t1(xi - e);
    for (int i = 0; i < k - 1; ++i) f *= v;
  }
  return f;
}

}  // namespace susy8v
