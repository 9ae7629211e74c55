#include <gtest/gtest.h>

#include <random>

#include "susy8v/exactpoly.hpp"

using namespace susy8v;

namespace {

MultiPoly P(const std::string& s) { return MultiPoly::parse(s); }
RatFunc R(const std::string& s) { return RatFunc::parse(s); }

// Laplace expansion along the first row; independent of the Bareiss code path.
RatFunc cofactor_det(const Matrix<RatFunc>& m) {
  const std::size_t n = m.size();
  if (n == 0) return RatFunc(1);
  if (n == 1) return m[0][0];
  RatFunc sum;
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<RatFunc> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<RatFunc> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(row);
    }
    RatFunc t = m[0][j] * cofactor_det(minor);
    sum = (j % 2 == 0) ? sum + t : sum - t;
  }
  return sum;
}

BigRational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  BigRational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace

TEST(MultiPoly, ProductOfLinearFactors) {
  EXPECT_EQ((P("z + 1") * P("z - 1")).to_string(), "-1 + z^2");
}

TEST(MultiPoly, CanonicalTextRoundTrip) {
  for (const char* s : {"7/2 + 1/2*z^2", "-1 + z^2", "3 - 2*w1 + z*m^2*w3", "0", "-z"}) {
    EXPECT_EQ(P(s).to_string(), s);
  }
}

TEST(MultiPoly, SymbolOrder) {
  EXPECT_TRUE(symbol_less("z", "m"));
  EXPECT_TRUE(symbol_less("n", "w1"));
  EXPECT_TRUE(symbol_less("w2", "w10"));
  EXPECT_TRUE(symbol_less("w10", "x"));
  MultiPoly p = P("x + w2 + n + z");
  EXPECT_EQ(p.vars(), (std::vector<std::string>{"z", "n", "w2", "x"}));
}

TEST(MultiPoly, EvalExact) {
  RatFunc f = RatFunc(P("7 + z^2")) / RatFunc(2);
  EXPECT_EQ(f.eval_rational({{"z", 0}}), BigRational(7, 2));
}

TEST(MultiPoly, EvalComplex) {
  MultiPoly p = P("1 + 2*z*m - m^3");
  auto v = p.eval_complex<std::complex<double>>({{"z", {0.5, 1.0}}, {"m", {-1.0, 0.25}}});
  std::complex<double> z(0.5, 1.0), m(-1.0, 0.25);
  EXPECT_NEAR(std::abs(v - (1.0 + 2.0 * z * m - m * m * m)), 0.0, 1e-14);
}

TEST(MultiPoly, ExactDivision) {
  MultiPoly a = P("z + m - 3*w1"), b = P("z^2 - m*w1 + 1");
  EXPECT_EQ(divexact(a * b, b), a);
  EXPECT_THROW(divexact(a * b + P("1"), b), InternalConsistencyError);
  EXPECT_THROW(divexact(a, MultiPoly()), DomainError);
}

TEST(MultiPoly, Gcd) {
  MultiPoly g = P("z*m + 1"), a = P("z - w1^2"), b = P("m^2 + z + 2");
  EXPECT_EQ(gcd(g * a, g * b), g.monic());
  EXPECT_EQ(gcd(a, b), MultiPoly(1));
  EXPECT_EQ(gcd(P("z^2 - 1"), P("z^3 - z^2")), P("z - 1"));
}

TEST(RatFunc, SubstituteIntoLinear) {
  RatFunc w = RatFunc(1) / R("1 - z");
  RatFunc r = RatFunc(P("1 - w")).substitute("w", w);
  EXPECT_EQ(r, RatFunc(P("-z")) / RatFunc(P("1 - z")));
}

TEST(RatFunc, CancelsCommonFactor) {
  RatFunc r(P("z^2 - 1"), P("2*z + 2"));
  EXPECT_EQ(r.to_string(), "-1/2 + 1/2*z");
  RatFunc s(P("1"), P("-2 - 2*z"));
  EXPECT_EQ(s.den(), P("1 + z"));
  EXPECT_EQ(s.num(), P("-1/2"));
}

TEST(RatFunc, ParseRoundTrip) {
  RatFunc r(P("1 + m^2"), P("z - m"));
  EXPECT_EQ(RatFunc::parse(r.to_string()), r);
}

TEST(Det, Trivial) {
  EXPECT_EQ(det_fraction_free({{R("x")}}), R("x"));
  Matrix<RatFunc> id(3, std::vector<RatFunc>(3));
  for (int i = 0; i < 3; ++i) id[i][i] = RatFunc(1);
  EXPECT_EQ(det_fraction_free(id), RatFunc(1));
}

TEST(Det, VandermondeMatchesProduct) {
  Matrix<RatFunc> v;
  for (const char* w : {"w1", "w2", "w3"}) {
    RatFunc x = RatFunc::var(w);
    v.push_back({RatFunc(1), x, x * x});
  }
  RatFunc expect = RatFunc(P("w2 - w1") * P("w3 - w1") * P("w3 - w2"));
  EXPECT_EQ(det_fraction_free(v), expect);
  EXPECT_EQ(cofactor_det(v), expect);
}

TEST(Det, BareissMatchesCofactorOnRandomRationalFunctions) {
  std::mt19937_64 rng(7);
  const std::vector<std::string> syms = {"z", "w1", "w2"};
  for (int n = 1; n <= 4; ++n) {
    Matrix<RatFunc> m(n, std::vector<RatFunc>(n));
    for (auto& row : m)
      for (auto& x : row) {
        MultiPoly num(random_rational(rng));
        num += MultiPoly::var(syms[rng() % 3]).scaled(random_rational(rng));
        MultiPoly den(1);
        if (rng() % 3 == 0) den = MultiPoly::var(syms[rng() % 3]) + MultiPoly(1 + rng() % 4);
        x = RatFunc(num, den);
      }
    EXPECT_EQ(det_fraction_free(m), cofactor_det(m)) << "size " << n;
  }
}

TEST(Det, AlternatingUnderRowSwap) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    Matrix<RatFunc> m(4, std::vector<RatFunc>(4));
    for (auto& row : m)
      for (auto& x : row) x = RatFunc(random_rational(rng));
    Matrix<RatFunc> s = m;
    std::swap(s[0], s[2]);
    EXPECT_EQ(det_fraction_free(s), -det_fraction_free(m));
    EXPECT_EQ(det_fraction_free(m), cofactor_det(m));
  }
}

TEST(Det, SingularPivotHandled) {
  Matrix<RatFunc> m = {{RatFunc(0), RatFunc(1)}, {RatFunc(1), RatFunc(0)}};
  EXPECT_EQ(det_fraction_free(m), RatFunc(-1));
}
