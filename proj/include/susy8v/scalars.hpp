#pragma once

// Scalar products of the distinguished eigenvector with the boundary vectors,
// their determinant predictions, homogeneous sum rules and trigonometric
// limits (Schur functions and symplectic characters).

#include <map>
#include <string>
#include <vector>

#include "susy8v/eigensolver.hpp"
#include "susy8v/errors.hpp"
#include "susy8v/lattice.hpp"
#include "susy8v/predictions.hpp"
#include "susy8v/theta.hpp"
#include "susy8v/tsuchiya.hpp"

namespace susy8v {

// ---------------------------------------------------------------------------
// Inhomogeneous scalar products

// (x_1, -x_1, ..., x_n, -x_n, 0)
inline std::vector<Complex> scalar_product_args(const std::vector<Complex>& xs) {
  std::vector<Complex> u;
  for (const auto& x : xs) {
    u.push_back(x);
    u.push_back(-x);
  }
  u.push_back(Complex(0));
  return u;
}

inline void check_scalar_args(const std::vector<Complex>& xs, const PsiVector& psi) {
  const auto want = scalar_product_args(xs);
  if (psi.args.size() != want.size()) throw DomainError("scalar product: argument count mismatch");
  for (std::size_t i = 0; i < want.size(); ++i)
    if (std::abs(psi.args[i] - want[i]) > 1e-12) throw DomainError("scalar product: argument pattern mismatch");
}

inline Complex Z_measure(const Theta<Complex>& th, const std::vector<Complex>& xs, Complex lambda, const PsiVector& psi) {
  check_scalar_args(xs, psi);
  return pair(xi_vector(th, xs, lambda), psi.state);
}

inline Complex Zbar_measure(const Theta<Complex>& th, const std::vector<Complex>& xs, Complex lambda, int sign,
                            const PsiVector& psi) {
  check_scalar_args(xs, psi);
  return pair(xibar_vector(th, xs, lambda, sign), psi.state);
}

enum class ScalarKind { Z, ZbarPlus, ZbarMinus };

inline const char* kind_name(ScalarKind k) {
  switch (k) {
    case ScalarKind::Z: return "Z";
    case ScalarKind::ZbarPlus: return "Zbar_plus";
    case ScalarKind::ZbarMinus: return "Zbar_minus";
  }
  return "?";
}

inline Complex scalar_measure(const Theta<Complex>& th, const std::vector<Complex>& xs, Complex lambda, ScalarKind kind,
                              const PsiVector& psi) {
  switch (kind) {
    case ScalarKind::Z: return Z_measure(th, xs, lambda, psi);
    case ScalarKind::ZbarPlus: return Zbar_measure(th, xs, lambda, +1, psi);
    case ScalarKind::ZbarMinus: return Zbar_measure(th, xs, lambda, -1, psi);
  }
  return {};
}

// Theta prefactor relating Z to X (resp. Zbar to Xbar).
inline Complex scalar_prefactor(const Theta<Complex>& th, const std::vector<Complex>& xs, ScalarKind kind) {
  const Complex e = th.eta;
  Complex f(1);
  for (const auto& x : xs) {
    if (kind == ScalarKind::Z)
      f *= th.T4(2.0 * (e + x)) * th.t1(e + x) * th.t1(e - x);
    else
      f *= th.T1(2.0 * (e + x));
  }
  return f;
}

inline Complex XY_extract(const Theta<Complex>& th, const std::vector<Complex>& xs, Complex value, ScalarKind kind) {
  const Complex f = scalar_prefactor(th, xs, kind);
  if (std::abs(f) < 1e-300) throw PoleError("XY_extract: prefactor vanishes at these arguments");
  return value / f;
}

namespace detail {

inline std::vector<Complex> cat(std::vector<Complex> a, std::initializer_list<Complex> tail) {
  a.insert(a.end(), tail.begin(), tail.end());
  return a;
}

inline Complex HH(const Theta<Complex>& th, const std::vector<Complex>& x) {
  return tsuchiya_H(th, static_cast<int>(x.size() / 2), x);
}

}  // namespace detail

struct GammaDelta {
  Complex gamma, delta;
};

// gamma_n^{+-}, delta_n^{+-}
inline GammaDelta gamma_delta(const Theta<Complex>& th, int n, Complex lambda, int sign) {
  const Complex e = th.eta, el = e + lambda, zero(0);
  const Complex t2 = th.t2(zero), t3 = th.t3(zero), t4 = th.t4(zero), T40 = th.T4(zero);
  Complex g0, d0;
  if (sign > 0) {
    const Complex a = t3 * th.t4(el) / (t2 * th.t1(el)), b = t4 * th.t3(el) / (t2 * th.t1(el));
    g0 = 2.0 * a * a;
    d0 = -2.0 * b * b;
  } else {
    g0 = -2.0 * t3 * t4 * th.t3(el) * th.t4(el) / (t2 * t2 * th.t1(el) * th.t1(el));
    d0 = -g0;
  }
  const Complex step = th.cp() * th.expi(-2.0 * e) / (T40 * T40);
  const int k = n / 2;
  Complex g = g0, d = d0;
  if (n % 2 == 1) {
    const Complex base = -th.cp() * th.expi(-2.0 * e) / (T40 * th.t2(e));
    g = base * t4 / th.t4(el) * g0;
    d = base * th.t4(el) / t4 * d0;
  }
  const Complex s = std::pow(step, k);
  return {s * g, s * d};
}

// Y_n, Ybar_n^{+-} from elliptic Tsuchiya determinants.
inline Complex Y_predict(const Theta<Complex>& th, const std::vector<Complex>& xs, Complex lambda, ScalarKind kind) {
  using detail::cat;
  using detail::HH;
  const int n = static_cast<int>(xs.size());
  const int k = n / 2;
  const BetaPoints<Complex> b(th);
  const Complex e = th.eta, el = e + lambda, zero(0), T40 = th.T4(zero);
  if (kind == ScalarKind::Z) {
    const Complex sgn = k % 2 == 0 ? 1.0 : -1.0;
    if (n % 2 == 0) return sgn * std::pow(T40, -2 * k) * HH(th, xs) * HH(th, cat(xs, {b.b2, el}));
    return sgn * th.t2(el) * std::pow(T40, -(2 * k + 1)) * HH(th, cat(xs, {b.b2})) * HH(th, cat(xs, {el}));
  }
  const GammaDelta gd = gamma_delta(th, n, lambda, kind == ScalarKind::ZbarPlus ? +1 : -1);
  if (n % 2 == 0)
    return gd.gamma * HH(th, cat(xs, {zero, b.b4})) * HH(th, cat(xs, {el, b.b3})) +
           gd.delta * HH(th, cat(xs, {zero, b.b3})) * HH(th, cat(xs, {el, b.b4}));
  return gd.gamma * HH(th, cat(xs, {zero})) * HH(th, cat(xs, {el, b.b3, b.b4})) +
         gd.delta * HH(th, cat(xs, {el})) * HH(th, cat(xs, {zero, b.b3, b.b4}));
}

inline Complex scalar_predict(const Theta<Complex>& th, const std::vector<Complex>& xs, Complex lambda, ScalarKind kind) {
  return scalar_prefactor(th, xs, kind) * Y_predict(th, xs, lambda, kind);
}

// Closed forms at n = 1 with the absolute normalisation of psi1_explicit.
inline Complex Z1_closed(const Theta<Complex>& th, Complex x, Complex lambda, ScalarKind kind) {
  const Complex e = th.eta, zero(0);
  const Complex rho = 2.0 / (th.t2(zero) * th.T4(zero));
  switch (kind) {
    case ScalarKind::Z:
      return 0.5 * rho * th.t2(zero) * th.t2(e + lambda) * th.T4(2.0 * (e + x)) * th.t1(e - x) * th.t1(e + x);
    case ScalarKind::ZbarPlus:
      return rho * th.t4(zero) * th.t4(e + lambda) * th.T1(2.0 * (e + x)) * th.t3(e + x) * th.t3(e - x);
    case ScalarKind::ZbarMinus:
      return rho * th.t3(zero) * th.t3(e + lambda) * th.T1(2.0 * (e + x)) * th.t4(e + x) * th.t4(e - x);
  }
  return {};
}

// Reduction functions F and Fbar.
inline Complex reduction_F(const Theta<Complex>& th, Complex x, Complex lambda) {
  const Complex e = th.eta, T40 = th.T4(Complex(0));
  return th.t2(x) * th.t2(x + e) * th.t1(x + lambda) * th.t1(x - lambda + e) / (T40 * T40);
}

inline Complex reduction_Fbar(const Theta<Complex>& th, Complex x, Complex lambda) {
  const Complex e = th.eta, T40 = th.T4(Complex(0));
  const Complex s = th.t1(x - e);
  return th.t3(x) * th.t3(x + e) * th.t4(x) * th.t4(x + e) * s * s * th.t1(x + lambda) * th.t1(x - lambda + e) /
         (T40 * T40);
}

// prod_{j != i} th1(x_i - x_j - eta)^2 th1(x_i + x_j - eta)^2 over the tail x_2..x_n (0-based i >= 1).
inline Complex reduction_product(const Theta<Complex>& th, const std::vector<Complex>& xs, std::size_t i) {
  const Complex f = tsuchiya_reduction_factor(th, xs, i);
  return f * f;
}

// mu and nu as functions of lambda.
inline Complex mu_of_lambda(const Theta<Complex>& th, Complex lambda) {
  const Complex e = th.eta;
  return th.T4(lambda) * th.T1(lambda - e) / (th.T1(lambda) * th.T4(lambda - e));
}

inline Complex nu_of_lambda(const Theta<Complex>& th, Complex lambda) {
  const Complex e = th.eta;
  return th.T4(lambda - e) * th.T4(lambda) / (th.T1(lambda - e) * th.T1(lambda));
}

// ---------------------------------------------------------------------------
// Homogeneous sum rules, generic over the component field.

template <typename T>
T S_measure(int n, const T& mu, const std::vector<T>& psi) {
  const int L = 2 * n + 1;
  T sum(0);
  for (std::size_t s = 0; s < psi.size(); ++s) {
    if (spin_at(s, L, L) != 0) continue;
    T w(1);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const int a = spin_at(s, 2 * i + 1, L), b = spin_at(s, 2 * i + 2, L);
      if (a == 0 && b == 1) continue;
      if (a == 1 && b == 0)
        w *= mu;
      else
        ok = false;
    }
    if (ok) sum += w * psi[s];
  }
  return sum;
}

template <typename T>
T Sbar_measure(int n, const T& nu, int sign, const std::vector<T>& psi) {
  const int L = 2 * n + 1;
  T sum(0);
  for (std::size_t s = 0; s < psi.size(); ++s) {
    T w = spin_at(s, L, L) == 0 ? T(1) : T(sign);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const int a = spin_at(s, 2 * i + 1, L), b = spin_at(s, 2 * i + 2, L);
      if (a != b)
        ok = false;
      else if (a == 1)
        w *= nu;
    }
    if (ok) sum += w * psi[s];
  }
  return sum;
}

template <typename T>
T Sigma_measure(const std::vector<T>& psi) {
  T sum(0);
  for (const auto& c : psi) sum += c;
  return sum;
}

template <typename T>
T norm_measure(const std::vector<T>& psi) {
  T sum(0);
  for (const auto& c : psi) sum += c * c;
  return sum;
}

inline std::vector<Complex> to_std(const CVec& v) { return std::vector<Complex>(v.data(), v.data() + v.size()); }

// ---------------------------------------------------------------------------
// Schur functions and symplectic characters

using Partition = std::vector<int>;

// Y_k = (floor((k-i)/2))_{i=1..k}
inline Partition double_staircase(int k) {
  Partition p;
  for (int i = 1; i <= k; ++i) p.push_back((k - i) / 2);
  return p;
}

inline void check_partition(const Partition& lam) {
  for (std::size_t i = 0; i < lam.size(); ++i)
    if (lam[i] < 0 || (i > 0 && lam[i] > lam[i - 1])) throw DomainError("partition must be weakly decreasing and non-negative");
}

// Complete homogeneous symmetric polynomials h_0..h_m.
inline std::vector<Complex> complete_homogeneous(const std::vector<Complex>& zs, int m) {
  std::vector<Complex> h(m + 1, Complex(0));
  h[0] = 1;
  for (const auto& z : zs)
    for (int d = 1; d <= m; ++d) h[d] += z * h[d - 1];
  return h;
}

// Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}); valid at repeated arguments.
inline Complex schur(const Partition& lam, const std::vector<Complex>& zs) {
  check_partition(lam);
  if (lam.size() > zs.size()) {
    for (std::size_t i = zs.size(); i < lam.size(); ++i)
      if (lam[i] != 0) return Complex(0);
  }
  const int k = static_cast<int>(lam.size());
  if (k == 0) return Complex(1);
  const int top = lam[0] + k;
  const auto h = complete_homogeneous(zs, top);
  CMatrix<Complex> M(k, std::vector<Complex>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const int d = lam[i] - i + j;
      M[i][j] = d < 0 ? Complex(0) : h[d];
    }
  return det_lu(M);
}

// Bialternant form; the arguments and their inverses must be distinct.
inline Complex symplectic_char(Partition lam, const std::vector<Complex>& zs) {
  check_partition(lam);
  const std::size_t k = zs.size();
  if (lam.size() > k) throw DomainError("symplectic_char: partition longer than argument list");
  lam.resize(k, 0);
  CMatrix<Complex> num(k, std::vector<Complex>(k)), den(k, std::vector<Complex>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const int e1 = lam[j] + static_cast<int>(k - j), e0 = static_cast<int>(k - j);
      num[i][j] = std::pow(zs[i], e1) - std::pow(zs[i], -e1);
      den[i][j] = std::pow(zs[i], e0) - std::pow(zs[i], -e0);
    }
  // the denominator vanishes iff z_i = z_j^{+-1} or z_i = +-1
  for (std::size_t i = 0; i < k; ++i) {
    const double ri = std::max(1.0, std::abs(zs[i]));
    if (std::abs(zs[i] - 1.0 / zs[i]) < 1e-8 * ri) throw ConditioningError("symplectic_char: argument at +-1");
    for (std::size_t j = i + 1; j < k; ++j) {
      const double r = ri * std::max(1.0, std::abs(zs[j]));
      if (std::abs(zs[i] - zs[j]) * std::abs(1.0 - zs[i] * zs[j]) < 1e-8 * r)
        throw ConditioningError("symplectic_char: coincident arguments");
    }
  }
  const Complex d = det_lu(den);
  return det_lu(num) / d;
}

inline Complex wbar(Complex z) { return (z - 1.0) * (z - 1.0) / (1.0 + z + z * z); }

// Relative residual of the first (odd = false) or second Schur factorisation.
inline double schur_factorisation_residual(int k, const std::vector<Complex>& zi, Complex z, bool second) {
  const Complex omega = std::polar(1.0, M_PI / 3.0);
  const std::size_t m = second ? 2 * k + 1 : 2 * k;
  if (zi.size() != m) throw DomainError("schur_factorisation_residual: wrong argument count");
  std::vector<Complex> args(zi);
  for (const auto& x : zi) args.push_back(1.0 / x);
  args.push_back(z);
  args.push_back(1.0);
  Complex pref = std::pow(z, k);
  for (const auto& x : zi) pref *= 1.0 + x + 1.0 / x;
  Complex lhs, rhs;
  auto with = [&](std::initializer_list<Complex> tail) {
    std::vector<Complex> v(zi);
    v.insert(v.end(), tail.begin(), tail.end());
    return v;
  };
  if (!second) {
    lhs = schur(double_staircase(4 * k + 2), args);
    rhs = pref * symplectic_char(double_staircase(2 * k + 2), with({z, omega})) * symplectic_char(double_staircase(2 * k), zi);
  } else {
    lhs = schur(double_staircase(4 * k + 4), args);
    rhs = pref * (1.0 + z) * symplectic_char(double_staircase(2 * k + 2), with({z})) *
          symplectic_char(double_staircase(2 * k + 2), with({omega}));
  }
  return std::abs(lhs - rhs) / std::max(std::abs(lhs), std::abs(rhs));
}

// H_{2k}(wbar(z_i)) at zeta = 0 against the symplectic character.
inline double trig_symplectic_residual(int k, const std::vector<Complex>& zs) {
  if (zs.size() != static_cast<std::size_t>(2 * k)) throw DomainError("trig_symplectic_residual: need 2k arguments");
  std::vector<Complex> w;
  for (const auto& z : zs) w.push_back(wbar(z));
  const Complex lhs = H_numeric<Complex>(k, w, Complex(0));
  Complex rhs = std::pow(3.0, k * (k - 1)) * symplectic_char(double_staircase(2 * k), zs);
  for (const auto& z : zs) rhs *= std::pow(1.0 + z + 1.0 / z, 1 - k);
  return std::abs(lhs - rhs) / std::max(std::abs(lhs), std::abs(rhs));
}

}  // namespace susy8v
