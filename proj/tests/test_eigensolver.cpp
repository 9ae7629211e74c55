#include <gtest/gtest.h>

#include <random>

#include "susy8v/eigensolver.hpp"

using namespace susy8v;

namespace {

struct Fixture {
  Theta<Complex> th{ThetaParams::make(0.25)};
  std::mt19937_64 rng{5};
  std::uniform_real_distribution<double> u{-1.0, 1.0};
  Complex point() { return {u(rng), 0.3 * u(rng)}; }
  std::vector<Complex> points(int L) {
    std::vector<Complex> v(L);
    for (auto& z : v) z = point();
    return v;
  }
};

// Dense exact product M v.
std::vector<BigRational> apply(const Matrix<BigRational>& M, const std::vector<BigRational>& v) {
  std::vector<BigRational> out(M.size(), BigRational(0));
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (M[i][j] != 0) out[i] += M[i][j] * v[j];
  return out;
}

}  // namespace

TEST(Eigensolver, ExplicitThreeSiteVectorIsEigenvector) {
  Fixture f;
  const auto in = f.points(3);
  const CVec v = psi1_explicit(f.th, in[0], in[1], in[2]);
  for (int d = 0; d < 3; ++d) {
    const Complex u = f.point();
    EXPECT_LT(vec_residual(transfer_matrix(f.th, u, in) * v, theta_eigenvalue(f.th, u, in) * v), 1e-12);
  }
}

TEST(Eigensolver, SolverMatchesExplicitVector) {
  Fixture f;
  const auto in = f.points(3);
  const PsiVector ps = solve_psi(f.th, in);
  EXPECT_EQ(ps.n, 1);
  EXPECT_NEAR(ps.state.norm(), 1.0, 1e-14);
  EXPECT_TRUE(check_collinear(ps.state, psi1_explicit(f.th, in[0], in[1], in[2]), 1e-10).pass);
}

TEST(Eigensolver, FiveSiteSolutionIsJointEigenvector) {
  // n = 2 lies in the F = +1 sector
  Fixture f;
  const auto in = f.points(5);
  const PsiVector ps = solve_psi(f.th, in);
  const CMat F = spin_reversal(5);
  EXPECT_LT(vec_residual(F * ps.state, ps.state), 1e-10);
  const Complex u = f.point();
  EXPECT_LT(vec_residual(transfer_matrix(f.th, u, in) * ps.state, theta_eigenvalue(f.th, u, in) * ps.state), 1e-9);
}

TEST(Eigensolver, RejectsEvenLength) {
  Fixture f;
  EXPECT_THROW(solve_psi(f.th, f.points(2)), DomainError);
}

TEST(Eigensolver, UTransformIsOrthogonal) {
  for (int L : {1, 3}) {
    const CMat U = u_transform(L);
    EXPECT_LT(op_residual(U * U.adjoint(), CMat::Identity(U.rows(), U.cols())), 1e-14);
    EXPECT_LT(U.imag().cwiseAbs().maxCoeff(), 1e-300);
  }
}

TEST(Eigensolver, ExactKernel) {
  auto row = [](long a, long b, long c) { return std::vector<BigRational>{BigRational(a), BigRational(b), BigRational(c)}; };
  const Matrix<BigRational> M{row(1, 2, 3), row(2, 4, 6), row(1, 1, 1)};
  const auto k = exact_kernel(M);
  for (const auto& r : apply(M, k)) EXPECT_EQ(r, 0);
  const Matrix<BigRational> I{row(1, 0, 0), row(0, 1, 0), row(0, 0, 1)};
  EXPECT_THROW(exact_kernel(I), NullDimError);
}

TEST(Eigensolver, HomogeneousGroundStateExact) {
  for (int n = 0; n <= 2; ++n)
    for (const BigRational z : {BigRational(1, 3), BigRational(2)}) {
      const ExactPsi e = homogeneous_psi_exact(n, z);
      const auto H = xyz_hamiltonian_exact(z, 2 * n + 1);
      const auto Hv = apply(H, e.psi);
      const BigRational E0 = xyz_E0(n, z);
      for (std::size_t i = 0; i < Hv.size(); ++i) ASSERT_EQ(Hv[i], E0 * e.psi[i]) << "n=" << n << " i=" << i;
    }
}

TEST(Eigensolver, FloatingKernelMatchesExact) {
  const ExactPsi e = homogeneous_psi_exact(2, BigRational(1, 2));
  EXPECT_TRUE(check_collinear(xyz_kernel(2, 0.5), to_cvec(e.psi), 1e-10).pass);
}

TEST(Eigensolver, XyzHamiltonianIsSymmetric) {
  const CMat H = xyz_hamiltonian(0.3, 3);
  EXPECT_LT(op_residual(H, H.transpose()), 1e-15);
}
