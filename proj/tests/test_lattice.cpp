#include <gtest/gtest.h>

#include <random>

#include "susy8v/lattice.hpp"

using namespace susy8v;

namespace {

// Monodromy built in the (L+1)-site space, auxiliary site first, then traced.
CMat transfer_by_embedding(const Theta<Complex>& th, Complex u, const std::vector<Complex>& in) {
  const int L = static_cast<int>(in.size());
  const std::size_t dim = std::size_t(1) << L;
  CMat M = CMat::Identity(2 * dim, 2 * dim);
  for (int i = 1; i <= L; ++i) M = embed(CMat(r_matrix(th, in[i - 1] - u)), {1, i + 1}, L + 1) * M;
  return M.topLeftCorner(dim, dim) + M.bottomRightCorner(dim, dim);
}

struct Fixture {
  Theta<Complex> th{ThetaParams::make(0.25)};
  std::mt19937_64 rng{2};
  std::uniform_real_distribution<double> u{-1.0, 1.0};
  Complex point() { return {u(rng), 0.3 * u(rng)}; }
};

}  // namespace

TEST(Lattice, TransferMatrixMatchesEmbedding) {
  Fixture f;
  for (int L : {1, 2, 3, 4}) {
    std::vector<Complex> in(L);
    for (auto& z : in) z = f.point();
    const Complex u = f.point();
    EXPECT_LT(op_residual(transfer_matrix(f.th, u, in), transfer_by_embedding(f.th, u, in)), 1e-14) << "L=" << L;
  }
}

TEST(Lattice, OneSiteTransferIsScalar) {
  Fixture f;
  const Complex u = f.point(), v = f.point();
  EXPECT_LT(op_residual(transfer_matrix(f.th, v, {u}), CMat::Identity(2, 2) * r_weight(f.th, u - v)), 1e-14);
}

TEST(Lattice, Unitarity) {
  Fixture f;
  const Complex u = f.point();
  const Eigen::Matrix4cd prod = rcheck_matrix(f.th, u) * rcheck_matrix(f.th, -u);
  EXPECT_LT(op_residual(CMat(prod), CMat(Eigen::Matrix4cd::Identity() * prod(0, 0))), 1e-13);
}

TEST(Lattice, YangBaxter) {
  Fixture f;
  const Complex u = f.point(), v = f.point();
  auto R = [&](Complex z, int i, int j) { return embed(CMat(r_matrix(f.th, z)), {i, j}, 3); };
  EXPECT_LT(op_residual(R(u - v, 1, 2) * R(u, 1, 3) * R(v, 2, 3), R(v, 2, 3) * R(u, 1, 3) * R(u - v, 1, 2)), 1e-13);
}

TEST(Lattice, SingletEigenvector) {
  Fixture f;
  const Complex m2e = -2.0 * f.th.eta;
  EXPECT_LT(vec_residual(rcheck_matrix(f.th, m2e) * singlet(), -2.0 * r_weight(f.th, m2e) * singlet()), 1e-14);
}

TEST(Lattice, EmbedAndOperators) {
  // sigma^x on site 1 of 2 flips the most significant bit
  const CMat sx = sigma('x', 1, 2);
  EXPECT_EQ(sx(2, 0), Complex(1));
  EXPECT_EQ(sx(0, 2), Complex(1));
  EXPECT_THROW(embed(pauli('x'), {3}, 2), DomainError);
  // F and P anticommute on an odd number of sites
  for (int L : {1, 3}) EXPECT_LT(op_residual(spin_reversal(L) * spin_parity(L), -spin_parity(L) * spin_reversal(L)), 1e-15);
  // phi_1 inserts the singlet at the front
  const CVec s = phi_embed(1, 1) * basis_state({0});
  EXPECT_EQ(s(2), Complex(1));
  EXPECT_EQ(s(4), Complex(-1));
}

TEST(Lattice, BoundaryVectorExchange) {
  Fixture f;
  const Complex x = f.point(), lam = f.point();
  const Complex r = r_weight(f.th, 2.0 * x);
  EXPECT_LT(vec_residual(rcheck_matrix(f.th, 2.0 * x) * chi(f.th, x, lam), g_fn(f.th, x) * r * chi(f.th, -x, lam)), 1e-13);
  EXPECT_LT(vec_residual(rcheck_matrix(f.th, 2.0 * x) * chibar(f.th, x, lam), gbar_fn(f.th, x) * r * chibar(f.th, -x, lam)),
            1e-13);
}

TEST(Lattice, SiteLimit) { EXPECT_THROW(check_sites(lattice_max_sites() + 1), CapacityError); }
