#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "susy8v/asm.hpp"
#include "susy8v/goldens.hpp"
#include "susy8v/rzpoly.hpp"

using namespace susy8v;

namespace {

RatFunc Q(long a, long b = 1) { return RatFunc(BigRational(a, b)); }
RatFunc V(const char* s) { return RatFunc::var(s); }

}  // namespace

TEST(AsmCounts, KnownSequences) {
  const long A[] = {1, 2, 7, 42, 429, 7436};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(asm_count(AsmFamily::A, n), A[n - 1]);
  const long AV[] = {1, 1, 3, 26, 646};  // vertically symmetric, sizes 1, 3, 5, 7, 9
  for (int k = 0; k < 5; ++k) EXPECT_EQ(asm_count(AsmFamily::A_V, 2 * k + 1), AV[k]);
  const long N8[] = {1, 1, 2, 11, 170};  // sizes 0, 2, 4, 6, 8
  for (int k = 0; k < 5; ++k) EXPECT_EQ(asm_count(AsmFamily::N8, 2 * k), N8[k]);
  const long A4[] = {7, 14, 14, 7};
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(asm_count(AsmFamily::A_refined, 4, k), A4[k - 1]);
}

TEST(AsmCounts, BruteForceEnumeration) {
  EXPECT_EQ(asm_total_bruteforce(3), 7);
  for (int n = 1; n <= 6; ++n) {
    const auto r = asm_refined_bruteforce(n);
    for (int k = 1; k <= n; ++k) EXPECT_EQ(r[k - 1], asm_count(AsmFamily::A_refined, n, k)) << n << "," << k;
  }
  EXPECT_THROW(asm_refined_bruteforce(0), CapacityError);
}

TEST(HPoly, SmallCases) {
  EXPECT_EQ(H_poly(0, std::vector<RatFunc>{}), Q(1));
  EXPECT_EQ(H_poly(1, std::vector<RatFunc>{V("a"), V("b")}), Q(1));
  EXPECT_EQ(H_poly(2, std::vector<RatFunc>{}).to_string(), "3 + z^2");
  EXPECT_EQ(H_poly(2, {HSpecPoint::J2()}).to_string(), "7/2 + 1/2*z^2");
}

TEST(HPoly, Symmetric) {
  std::vector<RatFunc> w{V("a"), V("b"), V("c"), V("d")};
  const RatFunc h = H_poly(2, w);
  std::sort(w.begin(), w.end(), [](const RatFunc& x, const RatFunc& y) { return x.to_string() > y.to_string(); });
  EXPECT_EQ(H_poly(2, w), h);
  std::vector<RatFunc> r{Q(1, 2), Q(-3), Q(2, 7), Q(5, 3), Q(-1, 4), Q(4)};
  const RatFunc h3 = H_poly(3, r);
  std::mt19937 g(3);
  std::shuffle(r.begin(), r.end(), g);
  EXPECT_EQ(H_poly(3, r), h3);
}

TEST(HPoly, ConfluentLimitMatchesNearbyPoints) {
  // repeated arguments go through the confluent path; compare with the
  // polynomial evaluated after substitution
  const RatFunc h = H_poly(3, std::vector<RatFunc>{V("a"), V("b"), V("c"), V("d")});
  const RatFunc rep = H_poly(3, std::vector<RatFunc>{Q(2), Q(2), Q(1, 3), Q(1, 3)});
  const RatFunc sub = h.substitute("a", Q(2)).substitute("b", Q(2)).substitute("c", Q(1, 3)).substitute("d", Q(1, 3));
  EXPECT_EQ(rep, sub);
}

TEST(HPoly, TwoVariableFormula) {
  for (int k = 2; k <= 4; ++k) EXPECT_EQ(H_poly(k, std::vector<RatFunc>{V("x"), V("y")}), H_two_var(k, V("x"), V("y")));
}

TEST(HPoly, Bilinear) {
  const RatFunc x = V("x"), y = V("y"), u = V("u"), v = V("v");
  EXPECT_TRUE(bilinear_residual_1(2, {Q(1, 2), Q(-2), Q(3)}, x, y, u, v).is_zero());
  EXPECT_TRUE(bilinear_residual_2(2, {Q(1, 2), Q(-2), Q(3), Q(2, 5)}, x, y, u, v).is_zero());
  // a perturbed right side is caught
  EXPECT_FALSE((bilinear_residual_1(2, {Q(1, 2), Q(-2), Q(3)}, x, y, u, v) + x).is_zero());
}

TEST(HPoly, Mobius) {
  EXPECT_TRUE(mobius_residual(2, {V("a"), V("b"), V("c"), V("d")}).is_zero());
  EXPECT_TRUE(mobius_residual(3, {Q(1), Q(-2), Q(1, 3), Q(4), Q(5, 2), Q(-1, 7)}).is_zero());
}

TEST(HPoly, Condensation) {
  EXPECT_EQ(H_condensed(2, {V("a"), V("b"), V("c"), V("d")}), H_poly(2, std::vector<RatFunc>{V("a"), V("b"), V("c"), V("d")}));
}

TEST(HPoly, NumericMatchesExact) {
  const std::vector<RatFunc> w{Q(1, 2), Q(-2), Q(3, 5), Q(7, 3)};
  const BigRational z(1, 3);
  const BigRational exact = H_poly(2, w).eval_rational({{"z", z}});
  const std::vector<Complex> wc{0.5, -2.0, 0.6, 7.0 / 3.0};
  EXPECT_LT(rel_diff(H_numeric<Complex>(2, wc, Complex(1.0 / 3.0)), Complex(exact.get_d())), 1e-13);
}

TEST(HPoly, Errors) {
  EXPECT_THROW(H_poly(-1, std::vector<RatFunc>{}), DomainError);
  EXPECT_THROW(H_poly(1, std::vector<RatFunc>{Q(1), Q(2), Q(3)}), DomainError);
  EXPECT_THROW(H_two_var(1, Q(0), Q(0)), DomainError);
}

TEST(Goldens, FilesMatchBothFormulas) {
  const auto dir = default_golden_dir();
  for (const auto& e : golden_entries()) {
    const RatFunc two = golden_value_two_var(e);
    EXPECT_EQ(two, golden_value_general(e)) << e.file;
    EXPECT_EQ(read_file(dir / e.file), golden_text(two)) << e.file;
  }
}
