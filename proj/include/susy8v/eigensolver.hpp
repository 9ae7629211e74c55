#pragma once

// The distinguished transfer-matrix eigenvector Psi_n (floating, inhomogeneous)
// and the homogeneous vectors psi_n, psibar_n, phi_n (exact, via the XYZ chain).

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "susy8v/errors.hpp"
#include "susy8v/exactpoly.hpp"
#include "susy8v/lattice.hpp"
#include "susy8v/predictions.hpp"
#include "susy8v/theta.hpp"

namespace susy8v {

enum class Normalization { RawUnit, Anchored };

struct PsiVector {
  int n = 0;
  std::vector<Complex> args;
  CVec state;
  Normalization normalization = Normalization::RawUnit;
  std::string anchor_ref;  // empty for RawUnit
};

inline Complex theta_eigenvalue(const Theta<Complex>& th, Complex u, const std::vector<Complex>& inhoms) {
  Complex t(1);
  for (const auto& ui : inhoms) t *= r_weight(th, ui - u);
  return t;
}

struct SolveOptions {
  Complex ustar1{0.4137, 0.1271};
  Complex ustar2{-0.2913, 0.0837};
  double tol_null = 1e-8;
  double gap = 1e3;
};

// Singular values of a matrix, ascending.
inline Eigen::VectorXd singular_values_ascending(const CMat& A) {
  Eigen::BDCSVD<CMat> svd(A);
  Eigen::VectorXd s = svd.singularValues();
  std::sort(s.data(), s.data() + s.size());
  return s;
}

// Basis of the F = sign sector: columns (|s> + sign |F s>)/sqrt2, s with site 1 up.
inline CMat f_sector_basis(int L, int sign) {
  const std::size_t dim = std::size_t(1) << L, half = dim / 2;
  CMat B = CMat::Zero(dim, half);
  const double c = 1.0 / std::sqrt(2.0);
  for (std::size_t s = 0; s < half; ++s) {
    B(s, s) = c;
    B(dim - 1 - s, s) = sign * c;
  }
  return B;
}

inline void fix_phase(CVec& v) {
  Eigen::Index imax = 0;
  v.cwiseAbs().maxCoeff(&imax);
  v *= std::abs(v(imax)) / v(imax);
  v.normalize();
}

// Joint kernel of T(u*) - Theta at two spectral parameters, inside the
// F = (-1)^n sector.
inline PsiVector solve_psi(const Theta<Complex>& th, const std::vector<Complex>& inhoms, const SolveOptions& opt = {}) {
  const int L = static_cast<int>(inhoms.size());
  if (L % 2 == 0) throw DomainError("solve_psi: need an odd number of inhomogeneities");
  check_sites(L);
  const int n = (L - 1) / 2;
  const int sign = n % 2 == 0 ? 1 : -1;
  const CMat B = f_sector_basis(L, sign);
  const std::size_t dim = std::size_t(1) << L;
  CMat A(2 * dim, B.cols());
  int blk = 0;
  for (Complex us : {opt.ustar1, opt.ustar2}) {
    CMat M = transfer_matrix(th, us, inhoms);
    M.diagonal().array() -= theta_eigenvalue(th, us, inhoms);
    const double scale = std::max(M.cwiseAbs().maxCoeff(), 1e-300);
    A.middleRows(blk * dim, dim) = (M / scale) * B;
    ++blk;
  }
  Eigen::BDCSVD<CMat> svd(A, Eigen::ComputeThinV);
  const Eigen::VectorXd s = svd.singularValues();  // descending
  const Eigen::Index m = s.size();
  const double smin = s(m - 1), s2 = m > 1 ? s(m - 2) : 1.0;
  if (s2 < opt.tol_null) throw NullDimError("solve_psi: solution space has dimension > 1");
  if (smin >= opt.tol_null) throw NullDimError("solve_psi: no solution within tolerance");
  if (s2 < opt.gap * opt.tol_null) throw ConvergenceError("solve_psi: singular-value gap too small");
  CVec v = B * svd.matrixV().col(m - 1);
  fix_phase(v);
  return {n, inhoms, v, Normalization::RawUnit, ""};
}

// Closed-form n = 1 vector with its absolute normalisation.
inline CVec psi1_explicit(const Theta<Complex>& th, Complex u1, Complex u2, Complex u3) {
  const Complex e = th.eta;
  const Complex rho = 2.0 / (th.t2(Complex(0)) * th.T4(Complex(0)));
  const Complex a1 = u2 - u1 + e, a2 = u3 - u2 + e, a3 = u1 - u3 + e;
  CVec v(8);
  // index = 4 s1 + 2 s2 + s3 with up = 0
  const Complex uuu = rho * th.T1(a1) * th.T1(a2) * th.T1(a3);
  const Complex udd = rho * th.T4(a1) * th.T1(a2) * th.T4(a3);
  const Complex dud = rho * th.T4(a1) * th.T4(a2) * th.T1(a3);
  const Complex ddu = rho * th.T1(a1) * th.T4(a2) * th.T4(a3);
  v(0) = uuu;
  v(7) = -uuu;
  v(3) = udd;
  v(4) = -udd;
  v(5) = dud;
  v(2) = -dud;
  v(6) = ddu;
  v(1) = -ddu;
  return v;
}

struct Collinearity {
  bool pass = false;
  Complex ratio{0, 0};
  double residual = 0.0;
};

// v1 ~ ratio * v2 with the least-squares ratio.
inline Collinearity check_collinear(const CVec& v1, const CVec& v2, double tol = 1e-6) {
  const double n1 = v1.norm(), n2 = v2.norm();
  if (n1 == 0.0 || n2 == 0.0) throw DomainError("check_collinear: zero vector");
  const Complex ratio = v2.dot(v1) / (n2 * n2);
  const double res = (v1 - ratio * v2).norm() / n1;
  return {res < tol, ratio, res};
}

// ---------------------------------------------------------------------------
// XYZ chain

inline Matrix<BigRational> xyz_hamiltonian_exact(const BigRational& zeta, int L) {
  check_sites(L);
  if (zeta == 1 || zeta == -1) throw PoleError("xyz: zeta = +-1");
  const BigRational J2(-1, 2), J3 = 1 / (1 + zeta), J4 = 1 / (1 - zeta);
  const std::size_t dim = std::size_t(1) << L;
  Matrix<BigRational> H(dim, std::vector<BigRational>(dim, BigRational(0)));
  for (std::size_t s = 0; s < dim; ++s)
    for (int i = 1; i <= L; ++i) {
      const int j = i % L + 1;
      if (i == j) {  // single site: each term is the identity
        H[s][s] += BigRational(-1, 2) * (J2 + J3 + J4);
        continue;
      }
      const bool same = spin_at(s, i, L) == spin_at(s, j, L);
      const std::size_t t = s ^ (std::size_t(1) << (L - i)) ^ (std::size_t(1) << (L - j));
      // sigma^x sigma^x: +1; sigma^y sigma^y: -1 on equal spins, +1 otherwise
      H[t][s] += BigRational(-1, 2) * (J4 + (same ? -J3 : J3));
      H[s][s] += BigRational(-1, 2) * (same ? J2 : -J2);
    }
  return H;
}

inline CMat xyz_hamiltonian(double zeta, int L) {
  check_sites(L);
  const double J2 = -0.5, J3 = 1.0 / (1.0 + zeta), J4 = 1.0 / (1.0 - zeta);
  const std::size_t dim = std::size_t(1) << L;
  CMat H = CMat::Zero(dim, dim);
  for (std::size_t s = 0; s < dim; ++s)
    for (int i = 1; i <= L; ++i) {
      const int j = i % L + 1;
      if (i == j) {
        H(s, s) += -0.5 * (J2 + J3 + J4);
        continue;
      }
      const bool same = spin_at(s, i, L) == spin_at(s, j, L);
      const std::size_t t = s ^ (std::size_t(1) << (L - i)) ^ (std::size_t(1) << (L - j));
      H(t, s) += -0.5 * (J4 + (same ? -J3 : J3));
      H(s, s) += -0.5 * (same ? J2 : -J2);
    }
  return H;
}

inline BigRational xyz_E0(int n, const BigRational& zeta) {
  return -BigRational(2 * n + 1) * (3 + zeta * zeta) / (4 * (1 - zeta * zeta));
}

// U = 2^{-L/2} prod (1 + i sigma^y); real orthogonal.
inline CMat u_transform(int L) {
  check_sites(L);
  Eigen::MatrixXd one(2, 2);
  one << 1, 1, -1, 1;
  Eigen::MatrixXd U = Eigen::MatrixXd::Ones(1, 1);
  for (int i = 0; i < L; ++i) {
    Eigen::MatrixXd K(U.rows() * 2, U.cols() * 2);
    for (int a = 0; a < U.rows(); ++a)
      for (int b = 0; b < U.cols(); ++b) K.block(2 * a, 2 * b, 2, 2) = U(a, b) * one;
    U = K;
  }
  return (U * std::pow(2.0, -0.5 * L)).cast<Complex>();
}

// One-dimensional kernel of an exact square matrix; throws otherwise.
inline std::vector<BigRational> exact_kernel(Matrix<BigRational> M) {
  const std::size_t rows = M.size(), cols = rows ? M[0].size() : 0;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && M[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(M[p], M[r]);
    const BigRational inv = 1 / M[r][c];
    for (std::size_t j = c; j < cols; ++j) M[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][c] == 0) continue;
      const BigRational f = M[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (M[r][j] != 0) M[i][j] -= f * M[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  if (cols - r != 1) throw NullDimError("exact_kernel: kernel dimension " + std::to_string(cols - r));
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::size_t free_c = 0;
  while (is_pivot[free_c]) ++free_c;
  std::vector<BigRational> v(cols, BigRational(0));
  v[free_c] = 1;
  for (std::size_t i = 0; i < r; ++i) v[pivot_col[i]] = -M[i][free_c];
  return v;
}

// Spin configuration index helpers for the homogeneous patterns.
inline std::size_t alternating_index(int n) {
  std::size_t s = 0;
  for (int i = 0; i < 2 * n + 1; ++i) s = (s << 1) | static_cast<std::size_t>(i % 2);
  return s;
}
inline std::size_t polarized_down_index(int n) { return (std::size_t(1) << (2 * n + 1)) - 1; }
inline std::size_t almost_polarized_index(int n) { return 1; }

struct ExactPsi {
  int n = 0;
  BigRational zeta;
  std::vector<BigRational> psi;     // F = (-1)^n
  std::vector<BigRational> psibar;  // P psi
  std::string anchor_ref;
};

// psi_n at rational zeta from H - E0 on the F = (-1)^n sector, scaled so that
// the alternating component equals its closed form.
inline ExactPsi homogeneous_psi_exact(int n, const BigRational& zeta) {
  const int L = 2 * n + 1;
  check_sites(L);
  const int sign = n % 2 == 0 ? 1 : -1;
  const auto H = xyz_hamiltonian_exact(zeta, L);
  const BigRational E0 = xyz_E0(n, zeta);
  const std::size_t dim = std::size_t(1) << L, half = dim / 2;
  Matrix<BigRational> M(half, std::vector<BigRational>(half));
  for (std::size_t t = 0; t < half; ++t)
    for (std::size_t s = 0; s < half; ++s) M[t][s] = H[t][s] + sign * H[t][dim - 1 - s] - (t == s ? E0 : BigRational(0));
  const auto ker = exact_kernel(std::move(M));
  std::vector<BigRational> psi(dim);
  for (std::size_t s = 0; s < half; ++s) {
    psi[s] = ker[s];
    psi[dim - 1 - s] = sign * ker[s];
  }
  const BigRational target = component_predict(n, ComponentPattern::Alternating).eval_rational({{"z", zeta}});
  const std::size_t ia = alternating_index(n);
  if (target == 0) throw AnchorZeroError("homogeneous_psi_exact: anchor prediction vanishes");
  if (psi[ia] == 0) throw AnchorZeroError("homogeneous_psi_exact: anchor component of the kernel vanishes");
  const BigRational f = target / psi[ia];
  for (auto& x : psi) x *= f;
  std::vector<BigRational> bar(dim);
  for (std::size_t s = 0; s < dim; ++s) {
    const bool odd = (__builtin_popcountll(s) + L) % 2 == 1;
    bar[s] = odd ? -psi[s] : psi[s];
  }
  return {n, zeta, psi, bar, "alternating component"};
}

inline CVec to_cvec(const std::vector<BigRational>& v) {
  CVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out(i) = v[i].get_d();
  return out;
}

struct HomogeneousPsi {
  PsiVector psi, psibar, phi;
};

inline HomogeneousPsi homogeneous_psi(int n, const BigRational& zeta) {
  const ExactPsi e = homogeneous_psi_exact(n, zeta);
  const CVec p = to_cvec(e.psi), pb = to_cvec(e.psibar);
  const std::vector<Complex> zeros(2 * n + 1, Complex(0));
  return {{n, zeros, p, Normalization::Anchored, e.anchor_ref},
          {n, zeros, pb, Normalization::Anchored, e.anchor_ref},
          {n, zeros, (p + pb) / 2.0, Normalization::Anchored, e.anchor_ref}};
}

// Floating kernel of H(zeta) - E0 in the F = (-1)^n sector (for real zeta).
inline CVec xyz_kernel(int n, double zeta) {
  const int L = 2 * n + 1;
  const int sign = n % 2 == 0 ? 1 : -1;
  CMat H = xyz_hamiltonian(zeta, L);
  H.diagonal().array() -= -(2.0 * n + 1) * (3 + zeta * zeta) / (4 * (1 - zeta * zeta));
  const CMat B = f_sector_basis(L, sign);
  Eigen::BDCSVD<CMat> svd(H * B, Eigen::ComputeThinV);
  CVec v = B * svd.matrixV().col(B.cols() - 1);
  fix_phase(v);
  return v;
}

}  // namespace susy8v
