#pragma once

// Spin-space operators of the eight-vertex model on V^L, V = C^2.
// Basis: up = 0, down = 1; site 1 is the most significant bit of the index.

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "susy8v/errors.hpp"
#include "susy8v/numeric.hpp"
#include "susy8v/theta.hpp"

namespace susy8v {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

inline int& lattice_max_sites() {
  static int l = 9;
  return l;
}

inline void check_sites(int L) {
  if (L < 1 || L > lattice_max_sites()) throw CapacityError("lattice: site count out of range");
}

// bit of site i (1-based) in configuration index s
inline int spin_at(std::size_t s, int i, int L) { return static_cast<int>((s >> (L - i)) & 1u); }

struct Weights {
  Complex a, b, c, d;
};

inline Weights vertex_weights(const Theta<Complex>& th, Complex u) {
  const Complex e2 = 2.0 * th.eta;
  const Complex t4e = th.T4(e2), t1e = th.T1(e2);
  const Complex t1u2 = th.T1(u + e2), t4u2 = th.T4(u + e2), t1u = th.T1(u), t4u = th.T4(u);
  return {t4e * t1u2 * t4u, t4e * t4u2 * t1u, t1e * t4u2 * t4u, t1e * t1u2 * t1u};
}

// r(u) = a(u) + b(u) in product form
inline Complex r_weight(const Theta<Complex>& th, Complex u) {
  return th.T4(Complex(0)) * th.T1(u + th.eta) * th.T4(u + th.eta);
}

inline Eigen::Matrix4cd r_matrix(const Theta<Complex>& th, Complex u) {
  const Weights w = vertex_weights(th, u);
  Eigen::Matrix4cd R = Eigen::Matrix4cd::Zero();
  R(0, 0) = R(3, 3) = w.a;
  R(1, 1) = R(2, 2) = w.b;
  R(1, 2) = R(2, 1) = w.c;
  R(0, 3) = R(3, 0) = w.d;
  return R;
}

inline Eigen::Matrix4cd permutation4() {
  Eigen::Matrix4cd P = Eigen::Matrix4cd::Zero();
  P(0, 0) = P(3, 3) = 1.0;
  P(1, 2) = P(2, 1) = 1.0;
  return P;
}

inline Eigen::Matrix4cd rcheck_matrix(const Theta<Complex>& th, Complex u) { return permutation4() * r_matrix(th, u); }

// Embedding of an operator on sites i_1 < ... < i_M (1-based) into End V^L.
inline CMat embed(const CMat& A, const std::vector<int>& sites, int L) {
  const int M = static_cast<int>(sites.size());
  if (A.rows() != (1 << M) || A.cols() != (1 << M)) throw DomainError("embed: operator size mismatch");
  for (int k = 0; k < M; ++k) {
    if (sites[k] < 1 || sites[k] > L || (k > 0 && sites[k] <= sites[k - 1]))
      throw DomainError("embed: site indices must be increasing and within 1..L");
  }
  const std::size_t dim = std::size_t(1) << L;
  std::size_t mask = 0;
  for (int s : sites) mask |= std::size_t(1) << (L - s);
  auto local = [&](std::size_t s) {
    std::size_t idx = 0;
    for (int s_i : sites) idx = (idx << 1) | ((s >> (L - s_i)) & 1u);
    return idx;
  };
  auto place = [&](std::size_t base, std::size_t idx) {
    std::size_t s = base;
    for (int k = M - 1; k >= 0; --k, idx >>= 1)
      if (idx & 1u) s |= std::size_t(1) << (L - sites[k]);
    return s;
  };
  CMat out = CMat::Zero(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const std::size_t base = col & ~mask;
    const std::size_t lc = local(col);
    for (std::size_t lr = 0; lr < (std::size_t(1) << M); ++lr) {
      const Complex v = A(lr, lc);
      if (v != Complex(0)) out(place(base, lr), col) = v;
    }
  }
  return out;
}

inline CMat pauli(char kappa) {
  CMat s(2, 2);
  const Complex I(0, 1);
  switch (kappa) {
    case 'x': s << 0, 1, 1, 0; break;
    case 'y': s << 0, -I, I, 0; break;
    case 'z': s << 1, 0, 0, -1; break;
    default: throw DomainError("pauli: kappa must be x, y or z");
  }
  return s;
}

inline CMat sigma(char kappa, int i, int L) { return embed(pauli(kappa), {i}, L); }

// F = prod sigma^x (spin reversal)
inline CMat spin_reversal(int L) {
  const std::size_t dim = std::size_t(1) << L;
  CMat F = CMat::Zero(dim, dim);
  for (std::size_t s = 0; s < dim; ++s) F(dim - 1 - s, s) = 1.0;
  return F;
}

// P = (-1)^L prod sigma^z (spin parity)
inline CMat spin_parity(int L) {
  const std::size_t dim = std::size_t(1) << L;
  CMat P = CMat::Zero(dim, dim);
  for (std::size_t s = 0; s < dim; ++s) P(s, s) = ((__builtin_popcountll(s) + L) % 2 == 0) ? 1.0 : -1.0;
  return P;
}

// prod_{j != i} sigma_j^z as a diagonal sign, i 1-based (i = 0 keeps all sites)
inline CVec sigma_z_string(const CVec& v, int L, int skip = 0) {
  CVec out = v;
  for (Eigen::Index s = 0; s < v.size(); ++s) {
    int down = 0;
    for (int j = 1; j <= L; ++j)
      if (j != skip) down += spin_at(static_cast<std::size_t>(s), j, L);
    if (down % 2) out(s) = -out(s);
  }
  return out;
}

inline CVec basis_state(const std::vector<int>& spins) {
  const int L = static_cast<int>(spins.size());
  CVec v = CVec::Zero(Eigen::Index(1) << L);
  std::size_t idx = 0;
  for (int s : spins) idx = (idx << 1) | static_cast<std::size_t>(s);
  v(idx) = 1.0;
  return v;
}

inline CVec kron(const CVec& a, const CVec& b) {
  CVec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

// |s> = |ud> - |du>
inline CVec singlet() {
  CVec s = CVec::Zero(4);
  s(1) = 1.0;
  s(2) = -1.0;
  return s;
}

// phi_i : V^L -> V^{L+2}, inserting |s> before site i (1 <= i <= L+1)
inline CMat phi_embed(int i, int L) {
  if (i < 1 || i > L + 1) throw DomainError("phi_embed: index out of range");
  const std::size_t din = std::size_t(1) << L, dout = std::size_t(1) << (L + 2);
  CMat out = CMat::Zero(dout, din);
  const int tail = L - (i - 1);
  for (std::size_t s = 0; s < din; ++s) {
    const std::size_t head = s >> tail, rest = s & ((std::size_t(1) << tail) - 1);
    // |ud> = 01, |du> = 10
    out(((head << 2 | 1u) << tail) | rest, s) += 1.0;
    out(((head << 2 | 2u) << tail) | rest, s) -= 1.0;
  }
  return out;
}

// T(u|u_1..u_L) = tr_0 R_{0,L}(u_L-u) ... R_{0,1}(u_1-u). Each matrix element is
// the trace of a product of 2x2 auxiliary-space matrices.
inline CMat transfer_matrix(const Theta<Complex>& th, Complex u, const std::vector<Complex>& inhoms) {
  const int L = static_cast<int>(inhoms.size());
  check_sites(L);
  std::vector<Eigen::Matrix4cd> R(L);
  for (int i = 0; i < L; ++i) R[i] = r_matrix(th, inhoms[i] - u);
  const std::size_t dim = std::size_t(1) << L;
  CMat T(dim, dim);
  for (std::size_t row = 0; row < dim; ++row)
    for (std::size_t col = 0; col < dim; ++col) {
      Eigen::Matrix2cd M = Eigen::Matrix2cd::Identity();
      for (int i = 1; i <= L; ++i) {
        const int ar = spin_at(row, i, L), ac = spin_at(col, i, L);
        Eigen::Matrix2cd Mi;
        // <a' alpha'| R |a alpha>, auxiliary space first
        for (int a2 = 0; a2 < 2; ++a2)
          for (int a1 = 0; a1 < 2; ++a1) Mi(a2, a1) = R[i - 1](2 * a2 + ar, 2 * a1 + ac);
        M = Mi * M;
      }
      T(row, col) = M.trace();
    }
  return T;
}

// Ř_{i,i+1}(u) on V^L
inline CMat rcheck_at(const Theta<Complex>& th, Complex u, int i, int L) {
  return embed(CMat(rcheck_matrix(th, u)), {i, i + 1}, L);
}

// Max-entry residual normalised by the larger max entry of the two sides.
inline double op_residual(const CMat& A, const CMat& B) {
  const double scale = std::max(A.cwiseAbs().maxCoeff(), B.cwiseAbs().maxCoeff());
  if (scale == 0.0) return 0.0;
  return (A - B).cwiseAbs().maxCoeff() / scale;
}

inline double vec_residual(const CVec& a, const CVec& b) {
  const double scale = std::max(a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff());
  if (scale == 0.0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff() / scale;
}

// Boundary vectors and scalar functions.

inline CVec chi(const Theta<Complex>& th, Complex x, Complex lambda) {
  const Complex m = x - lambda - 2.0 * th.eta, pl = x + lambda;
  CVec v = CVec::Zero(4);
  v(1) = th.T1(pl) * th.T4(m);
  v(2) = th.T1(m) * th.T4(pl);
  return v;
}

inline CVec chibar(const Theta<Complex>& th, Complex x, Complex lambda) {
  const Complex m = x - lambda - 2.0 * th.eta, pl = x + lambda;
  CVec v = CVec::Zero(4);
  v(0) = th.T1(pl) * th.T1(m);
  v(3) = th.T4(m) * th.T4(pl);
  return v;
}

inline Complex g_fn(const Theta<Complex>& th, Complex x) {
  return th.T4(2.0 * (th.eta + x)) / th.T4(2.0 * (th.eta - x));
}

inline Complex gbar_fn(const Theta<Complex>& th, Complex x) {
  return th.T1(2.0 * (th.eta + x)) / th.T1(2.0 * (th.eta - x));
}

// xi_n = chi(x_1) ... chi(x_n) |up>
inline CVec xi_vector(const Theta<Complex>& th, const std::vector<Complex>& xs, Complex lambda) {
  CVec v = basis_state({0});
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) v = kron(chi(th, *it, lambda), v);
  return v;
}

// xibar^{+-}_n = chibar(x_1) ... chibar(x_n) (|up> +- |down>)
inline CVec xibar_vector(const Theta<Complex>& th, const std::vector<Complex>& xs, Complex lambda, int sign) {
  CVec v(2);
  v << 1.0, Complex(sign >= 0 ? 1.0 : -1.0);
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) v = kron(chibar(th, *it, lambda), v);
  return v;
}

// Transposition pairing <a|b> (no conjugation).
inline Complex pair(const CVec& a, const CVec& b) { return (a.transpose() * b)(0, 0); }

}  // namespace susy8v
