#include <gtest/gtest.h>

#include <random>

#include "susy8v/eigensolver.hpp"
#include "susy8v/predictions.hpp"
#include "susy8v/scalars.hpp"

using namespace susy8v;

namespace {

// Bialternant Schur function at distinct arguments.
Complex schur_bialternant(Partition lam, const std::vector<Complex>& zs) {
  const std::size_t k = zs.size();
  lam.resize(k, 0);
  CMatrix<Complex> num(k, std::vector<Complex>(k)), den(k, std::vector<Complex>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      num[i][j] = std::pow(zs[i], lam[j] + static_cast<int>(k - 1 - j));
      den[i][j] = std::pow(zs[i], static_cast<int>(k - 1 - j));
    }
  return det_lu(num) / det_lu(den);
}

}  // namespace

TEST(Scalars, SinglePairClosedForm) {
  Theta<Complex> th(ThetaParams::make(0.2));
  const Complex x(0.31, 0.05), lam(-0.2, 0.11);
  const std::vector<Complex> xs{x};
  const auto a = scalar_product_args(xs);
  const PsiVector ps{1, a, psi1_explicit(th, a[0], a[1], a[2]), Normalization::RawUnit, ""};
  for (ScalarKind k : {ScalarKind::Z, ScalarKind::ZbarPlus, ScalarKind::ZbarMinus}) {
    const Complex m = scalar_measure(th, xs, lam, k, ps);
    EXPECT_LT(rel_diff_scaled(m, Z1_closed(th, x, lam, k)), 1e-12) << kind_name(k);
    EXPECT_LT(rel_diff_scaled(m, scalar_predict(th, xs, lam, k)), 1e-12) << kind_name(k);
  }
}

TEST(Scalars, ArgumentPatternEnforced) {
  Theta<Complex> th(ThetaParams::make(0.2));
  const PsiVector ps{1, {0.1, 0.2, 0.0}, CVec::Zero(8), Normalization::RawUnit, ""};
  EXPECT_THROW(Z_measure(th, {Complex(0.1)}, Complex(0.3), ps), DomainError);
}

TEST(Scalars, HomogeneousSumRules) {
  for (int n = 0; n <= 2; ++n)
    for (const BigRational z : {BigRational(1, 3), BigRational(3)}) {
      const ExactPsi e = homogeneous_psi_exact(n, z);
      for (int mu : {0, 1, 2})
        EXPECT_EQ(S_measure(n, BigRational(mu), e.psi), eval_at(S_predict(n), {{"z", z}, {"m", BigRational(mu)}}));
      for (int sg : {1, -1})
        for (int nu : {0, 2})
          EXPECT_EQ(Sbar_measure(n, BigRational(nu), sg, e.psi), eval_at(Sbar_predict(n, sg), {{"z", z}, {"n", BigRational(nu)}}));
      EXPECT_EQ(Sigma_measure(e.psi), eval_at(Sigma_predict(n), {{"z", z}}));
      EXPECT_EQ(norm_measure(e.psi), eval_at(norm_predict(n), {{"z", z}}));
    }
}

TEST(Scalars, TrigonometricPointCountsAsms) {
  // at zeta = 0 the sum with mu = 1 over the refined enumeration is the ASM count
  const long A[] = {1, 2, 7, 42};
  for (int n = 0; n <= 3; ++n) {
    const BigRational s = refined_asm_polynomial(n).eval_rational({{"m", BigRational(1)}});
    EXPECT_EQ(s, BigRational(A[n]));
  }
  EXPECT_EQ(refined_asm_polynomial(1).to_string(), "1 + m");
}

TEST(Scalars, SchurAgreesWithBialternant) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.5, 1.5);
  std::vector<Complex> zs;
  for (int i = 0; i < 5; ++i) zs.push_back({u(rng), u(rng) - 1.0});
  for (const Partition& lam : {Partition{}, Partition{1}, Partition{2, 1}, Partition{3, 3, 1}, double_staircase(6)})
    EXPECT_LT(rel_diff_scaled(schur(lam, zs), schur_bialternant(lam, zs)), 1e-11);
}

TEST(Scalars, SymplecticSmallCases) {
  const Complex z(1.3, 0.4), w(0.7, -0.9);
  EXPECT_LT(std::abs(symplectic_char({}, {z, w}) - 1.0), 1e-13);
  EXPECT_LT(std::abs(symplectic_char({1}, {z, w}) - (z + 1.0 / z + w + 1.0 / w)), 1e-13);
  EXPECT_LT(std::abs(symplectic_char({2}, {z}) - (z * z + 1.0 + 1.0 / (z * z))), 1e-13);
  EXPECT_THROW(symplectic_char({1}, {Complex(1)}), ConditioningError);
  EXPECT_THROW(schur({1, 2}, {z}), DomainError);
}

TEST(Scalars, SchurFactorisation) {
  const Complex z = std::polar(1.3, 0.7);
  const std::vector<Complex> a{std::polar(1.4, 0.2), std::polar(1.9, 2.1)};
  auto b = a;
  b.push_back(std::polar(1.7, -1.1));
  EXPECT_LT(schur_factorisation_residual(1, a, z, false), 1e-10);
  EXPECT_LT(schur_factorisation_residual(1, b, z, true), 1e-10);
}

TEST(Scalars, TrigSymplectic) {
  std::vector<Complex> zs;
  for (int i = 0; i < 6; ++i) zs.push_back(std::polar(1.2 + 0.5 * i, 0.3 + 0.9 * i));
  EXPECT_LT(trig_symplectic_residual(3, zs), 1e-10);
}
