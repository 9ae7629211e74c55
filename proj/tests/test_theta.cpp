#include <gtest/gtest.h>

#include <random>

#include "susy8v/theta.hpp"

using namespace susy8v;

namespace {

// Triple-product forms, independent of the series in the library.
Complex product_theta(int kind, Complex z, double q) {
  Complex prod = 1.0;
  for (int n = 1; n < 200; ++n) {
    const double q2n = std::pow(q, 2 * n);
    const Complex c = std::cos(2.0 * z);
    switch (kind) {
      case 1: prod *= (1 - q2n) * (1.0 - 2.0 * q2n * c + q2n * q2n); break;
      case 2: prod *= (1 - q2n) * (1.0 + 2.0 * q2n * c + q2n * q2n); break;
      case 3: prod *= (1 - q2n) * (1.0 + 2.0 * std::pow(q, 2 * n - 1) * c + std::pow(q, 4 * n - 2)); break;
      case 4: prod *= (1 - q2n) * (1.0 - 2.0 * std::pow(q, 2 * n - 1) * c + std::pow(q, 4 * n - 2)); break;
    }
  }
  if (kind == 1) return 2.0 * std::pow(q, 0.25) * std::sin(z) * prod;
  if (kind == 2) return 2.0 * std::pow(q, 0.25) * std::cos(z) * prod;
  return prod;
}

}  // namespace

TEST(Theta, MatchesTripleProduct) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (double p : {0.05, 0.25, 0.6}) {
    Theta<Complex> th(ThetaParams::make(p));
    for (int i = 0; i < 10; ++i) {
      const Complex z(u(rng), 0.3 * u(rng));
      for (int k = 1; k <= 4; ++k) {
        EXPECT_LT(rel_diff_scaled(th.t(k, z), product_theta(k, z, p)), 1e-13) << "kind " << k << " p " << p;
        EXPECT_LT(rel_diff_scaled(th.T(k, z), product_theta(k, z, p * p)), 1e-13) << "kind " << k << " p^2";
      }
    }
  }
}

TEST(Theta, OddAndEven) {
  Theta<Complex> th(ThetaParams::make(0.3));
  const Complex z(0.37, -0.11);
  EXPECT_LT(std::abs(th.t1(-z) + th.t1(z)), 1e-15);
  EXPECT_LT(std::abs(th.t2(-z) - th.t2(z)), 1e-15);
  EXPECT_LT(std::abs(th.t1(Complex(0))), 1e-300);
  EXPECT_LT(std::abs(th.t2(th.pi / 2.0)), 1e-15);
}

TEST(Theta, ExtendedPrecisionAgreesWithDouble) {
  Theta<Complex> d(ThetaParams::make(0.2));
  Theta<ComplexHP> h(ThetaParams::make(0.2, {0, 0}, 166));
  const Complex z(0.41, 0.07);
  for (int k = 1; k <= 4; ++k) EXPECT_LT(rel_diff_scaled(d.t(k, z), to_double(h.t(k, ComplexHP(z.real(), z.imag())))), 1e-14);
}

TEST(Theta, RejectsBadNome) {
  EXPECT_THROW(ThetaParams::make(0.0), DomainError);
  EXPECT_THROW(ThetaParams::make(1.0), DomainError);
}

TEST(Theta, EnvironmentPrecision) {
  ::setenv("SUSY8V_PRECISION", "extended", 1);
  EXPECT_EQ(env_precision_bits(), 166);
  ::setenv("SUSY8V_PRECISION", "80", 1);
  EXPECT_EQ(env_precision_bits(), 80);
  ::setenv("SUSY8V_PRECISION", "junk", 1);
  EXPECT_THROW(env_precision_bits(), ConfigError);
  ::unsetenv("SUSY8V_PRECISION");
  EXPECT_EQ(env_precision_bits(53), 53);
}
