#include <gtest/gtest.h>

#include <random>

#include "susy8v/rzpoly.hpp"
#include "susy8v/tsuchiya.hpp"

using namespace susy8v;

namespace {

struct Fixture {
  Theta<Complex> th{ThetaParams::make(0.2)};
  std::mt19937_64 rng{9};
  std::uniform_real_distribution<double> u{0.0, 1.0};
  Complex point() { return {u(rng) * M_PI, (u(rng) - 0.5) * 0.4 * th.pitau.imag()}; }
  std::vector<Complex> points(int n) {
    std::vector<Complex> x;
    for (int i = 0; i < n; ++i) x.push_back(point());
    return x;
  }
};

}  // namespace

TEST(Tsuchiya, TrivialSizes) {
  Fixture f;
  EXPECT_EQ(tsuchiya_H(f.th, 0, {}), Complex(1));
  EXPECT_LT(std::abs(tsuchiya_H(f.th, 1, f.points(2)) - 1.0), 1e-15);
  EXPECT_THROW(tsuchiya_H(f.th, 2, f.points(3)), DomainError);
}

TEST(Tsuchiya, Uniformisation) {
  Fixture f;
  const Complex z = zeta_of_p(f.th);
  for (int k = 1; k <= 3; ++k) {
    const auto x = f.points(2 * k);
    std::vector<Complex> w;
    for (const auto& xi : x) w.push_back(w_map(f.th, xi));
    EXPECT_LT(rel_diff_scaled(tsuchiya_H(f.th, k, x), uniformisation_prefactor(f.th, k, x) * H_numeric(k, w, z)), 1e-10);
  }
}

TEST(Tsuchiya, ZetaIsRealAndInUnitInterval) {
  for (double p : {0.05, 0.25, 0.5}) {
    Theta<Complex> th(ThetaParams::make(p));
    const Complex z = zeta_of_p(th);
    EXPECT_LT(std::abs(z.imag()), 1e-15);
    EXPECT_GT(z.real(), 0.0);
    EXPECT_LT(z.real(), 1.0);
  }
}

TEST(Tsuchiya, RegroupsNearCoincidentArguments) {
  Fixture f;
  auto x = f.points(4);
  x[1] = x[0] + Complex(1e-12, 0);  // same half, resolved by regrouping
  const Complex h = tsuchiya_H(f.th, 2, x);
  std::swap(x[1], x[2]);
  EXPECT_LT(rel_diff_scaled(h, tsuchiya_H(f.th, 2, x)), 1e-6);
}

TEST(Tsuchiya, Condensed) {
  Fixture f;
  const auto x = f.points(6);
  EXPECT_LT(rel_diff_scaled(tsuchiya_H(f.th, 3, x), tsuchiya_condensed(f.th, 3, x)), 1e-12);
}

TEST(Tsuchiya, WMapPole) {
  Fixture f;
  EXPECT_THROW(w_map(f.th, f.th.eta), PoleError);
}
