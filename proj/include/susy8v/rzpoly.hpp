#pragma once

// The polynomials H_{2k}(w_1, ..., w_{2k}) in the symbol z (the anisotropy
// zeta), their special arguments, identities, and the alternating sign
// matrix counts that appear as their trigonometric values.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "susy8v/errors.hpp"
#include "susy8v/exactpoly.hpp"
#include "susy8v/numeric.hpp"

namespace susy8v {

// ---------------------------------------------------------------------------
// special arguments

inline RatFunc zeta_sym() { return RatFunc::var("z"); }

enum class HTag { J2, J3, J4, MuBar, NuBar, Zero, Free };

struct HSpecPoint {
  HTag tag = HTag::Zero;
  RatFunc value;

  static HSpecPoint J2() { return {HTag::J2, RatFunc(BigRational(-1, 2))}; }
  static HSpecPoint J3() { return {HTag::J3, RatFunc(1) / (RatFunc(1) + zeta_sym())}; }
  static HSpecPoint J4() { return {HTag::J4, RatFunc(1) / (RatFunc(1) - zeta_sym())}; }
  static HSpecPoint Zero() { return {HTag::Zero, RatFunc()}; }
  // (m-1)^2 / ((z^2-1) m), with m the free symbol mu unless overridden.
  static HSpecPoint MuBar(const RatFunc& mu = RatFunc::var("m")) {
    RatFunc z = zeta_sym();
    return {HTag::MuBar, (mu - RatFunc(1)).pow(2) / ((z * z - RatFunc(1)) * mu)};
  }
  // (n-z)(n z-1) / ((z^2-1) n), with n the free symbol nu unless overridden.
  static HSpecPoint NuBar(const RatFunc& nu = RatFunc::var("n")) {
    RatFunc z = zeta_sym();
    return {HTag::NuBar, (nu - z) * (nu * z - RatFunc(1)) / ((z * z - RatFunc(1)) * nu)};
  }
  static HSpecPoint Free(const RatFunc& v) { return {HTag::Free, v}; }
};

inline const char* tag_name(HTag t) {
  switch (t) {
    case HTag::J2: return "J2";
    case HTag::J3: return "J3";
    case HTag::J4: return "J4";
    case HTag::MuBar: return "MuBar";
    case HTag::NuBar: return "NuBar";
    case HTag::Zero: return "Zero";
    case HTag::Free: return "Free";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// h and H4

namespace detail {
inline MultiPoly coef_a() { return MultiPoly::parse("3 + z^2"); }
inline MultiPoly coef_b() { return MultiPoly::parse("1 - z^2"); }
}  // namespace detail

// h(w,w') = 1 - (3+z^2) w w' + (1-z^2) w w' (w+w')
inline RatFunc h_pair(const RatFunc& w, const RatFunc& v) {
  RatFunc a(detail::coef_a()), b(detail::coef_b());
  RatFunc wv = w * v;
  return RatFunc(1) - a * wv + b * wv * (w + v);
}

inline MultiPoly h_pair(const MultiPoly& w, const MultiPoly& v) {
  MultiPoly wv = w * v;
  return MultiPoly(1) - detail::coef_a() * wv + detail::coef_b() * wv * (w + v);
}

// Closed form of H_4.
inline RatFunc H4(const RatFunc& w1, const RatFunc& w2, const RatFunc& w3, const RatFunc& w4) {
  RatFunc zm = RatFunc(MultiPoly::parse("-1 + z^2"));
  return RatFunc(MultiPoly::parse("3 + z^2")) + zm * (w1 + w2 + w3 + w4 + zm * w1 * w2 * w3 * w4);
}

inline std::size_t& h_poly_bound() {
  static std::size_t bound = 6;
  return bound;
}

// ---------------------------------------------------------------------------
// H_{2k} from the Vandermonde-divided determinant

namespace detail {

// Places the arguments into the two halves so that equal values are split
// as evenly as possible (H is symmetric in all arguments).
inline void split_halves(const std::vector<RatFunc>& args, std::vector<RatFunc>& a, std::vector<RatFunc>& b) {
  std::vector<std::vector<RatFunc>> classes;
  for (const auto& x : args) {
    auto it = std::find_if(classes.begin(), classes.end(), [&](const auto& c) { return c.front() == x; });
    if (it == classes.end())
      classes.push_back({x});
    else
      it->push_back(x);
  }
  std::stable_sort(classes.begin(), classes.end(), [](const auto& l, const auto& r) { return l.size() > r.size(); });
  const std::size_t k = args.size() / 2;
  std::size_t idx = 0;
  for (const auto& c : classes)
    for (const auto& x : c) {
      bool to_a = (idx++ % 2 == 0);
      if (to_a && a.size() == k) to_a = false;
      if (!to_a && b.size() == k) to_a = true;
      (to_a ? a : b).push_back(x);
    }
}

inline bool has_repeats(const std::vector<RatFunc>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] == v[j]) return true;
  return false;
}

// Distinct arguments in each half: homogenise w = p/q and stay polynomial.
inline RatFunc H_distinct(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b) {
  const std::size_t k = a.size();
  const MultiPoly A = coef_a(), B = coef_b();
  auto hhat = [&](const RatFunc& x, const RatFunc& y) {
    const MultiPoly &p = x.num(), &q = x.den(), &r = y.num(), &s = y.den();
    MultiPoly pr = p * r, qs = q * s;
    return qs * qs - A * pr * qs + B * pr * (p * s + r * q);
  };
  Matrix<MultiPoly> hh(k, std::vector<MultiPoly>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l) hh[i][l] = hhat(a[i], b[l]);
  Matrix<MultiPoly> m(k, std::vector<MultiPoly>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      MultiPoly prod(1);
      for (std::size_t l = 0; l < k; ++l)
        if (l != j) prod *= hh[i][l];
      m[i][j] = std::move(prod);
    }
  MultiPoly num = det_bareiss(std::move(m));
  auto vdm = [](const std::vector<RatFunc>& v) {
    MultiPoly d(1);
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j) d *= v[j].num() * v[i].den() - v[i].num() * v[j].den();
    return d;
  };
  num = divexact(num, vdm(a) * vdm(b));
  MultiPoly den(1);
  for (const auto& x : a) den *= x.den().pow(static_cast<unsigned>(k - 1));
  for (const auto& x : b) den *= x.den().pow(static_cast<unsigned>(k - 1));
  return RatFunc(num, den);
}

struct Cluster {
  RatFunc value;
  int mult;
};

inline std::vector<Cluster> clusters(const std::vector<RatFunc>& v) {
  std::vector<Cluster> out;
  for (const auto& x : v) {
    auto it = std::find_if(out.begin(), out.end(), [&](const Cluster& c) { return c.value == x; });
    if (it == out.end())
      out.push_back({x, 1});
    else
      ++it->mult;
  }
  return out;
}

// Taylor coefficients [e^r d^s] 1/h(al+e, be+d) for r < mr, s < ms.
inline Matrix<RatFunc> inverse_h_taylor(const RatFunc& al, const RatFunc& be, int mr, int ms) {
  RatFunc A(coef_a()), B(coef_b());
  // h(al+e, be+d) = sum_{i,j} hc[i][j] e^i d^j
  RatFunc hc[3][3];
  hc[0][0] = h_pair(al, be);
  hc[1][0] = -A * be + B * (RatFunc(2) * al * be + be * be);
  hc[0][1] = -A * al + B * (al * al + RatFunc(2) * al * be);
  hc[1][1] = -A + RatFunc(2) * B * (al + be);
  hc[2][0] = B * be;
  hc[0][2] = B * al;
  hc[2][1] = B;
  hc[1][2] = B;
  if (hc[0][0].is_zero()) throw PoleError("h vanishes at a pair of H arguments");
  RatFunc inv0 = RatFunc(1) / hc[0][0];
  Matrix<RatFunc> c(mr, std::vector<RatFunc>(ms));
  for (int r = 0; r < mr; ++r)
    for (int s = 0; s < ms; ++s) {
      if (r == 0 && s == 0) {
        c[0][0] = inv0;
        continue;
      }
      RatFunc acc;
      for (int i = 0; i <= std::min(r, 2); ++i)
        for (int j = 0; j <= std::min(s, 2); ++j) {
          if ((i == 0 && j == 0) || hc[i][j].is_zero()) continue;
          acc += hc[i][j] * c[r - i][s - j];
        }
      c[r][s] = -inv0 * acc;
    }
  return c;
}

// Coincident arguments: confluent limit of the same determinant.
inline RatFunc H_confluent(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b) {
  const std::size_t k = a.size();
  auto ca = clusters(a), cb = clusters(b);
  Matrix<RatFunc> m(k, std::vector<RatFunc>(k));
  RatFunc pref(1);
  std::size_t row = 0;
  for (const auto& I : ca) {
    std::size_t col = 0;
    for (const auto& J : cb) {
      auto t = inverse_h_taylor(I.value, J.value, I.mult, J.mult);
      for (int r = 0; r < I.mult; ++r)
        for (int s = 0; s < J.mult; ++s) m[row + r][col + s] = t[r][s];
      RatFunc hv = h_pair(I.value, J.value);
      if (!(hv == RatFunc(1))) pref *= hv.pow(I.mult * J.mult);
      col += J.mult;
    }
    row += I.mult;
  }
  auto between = [](const std::vector<Cluster>& cs) {
    RatFunc d(1);
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t j = i + 1; j < cs.size(); ++j) d *= (cs[j].value - cs[i].value).pow(cs[i].mult * cs[j].mult);
    return d;
  };
  return pref * det_fraction_free(m) / (between(ca) * between(cb));
}

}  // namespace detail

// H_{2k}(args); missing trailing arguments are zero.
inline RatFunc H_poly(int k, std::vector<RatFunc> args) {
  if (k < 0) throw DomainError("H_poly: negative k");
  if (static_cast<std::size_t>(k) > h_poly_bound()) throw CapacityError("H_poly: k over bound");
  if (args.size() > static_cast<std::size_t>(2 * k)) throw DomainError("H_poly: more than 2k arguments");
  if (k == 0) return RatFunc(1);
  args.resize(2 * k, RatFunc());
  std::vector<RatFunc> a, b;
  detail::split_halves(args, a, b);
  if (!detail::has_repeats(a) && !detail::has_repeats(b)) return detail::H_distinct(a, b);
  return detail::H_confluent(a, b);
}

inline RatFunc H_poly(int k, const std::vector<HSpecPoint>& pts) {
  std::vector<RatFunc> args;
  for (const auto& p : pts) args.push_back(p.value);
  return H_poly(k, std::move(args));
}

// ---------------------------------------------------------------------------
// two-argument determinant formula

// eta_{i,j}: integer polynomial in z; zero for negative indices.
inline MultiPoly eta_coeff(int i, int j) {
  if (i < 0 || j < 0) return MultiPoly();
  const MultiPoly A = detail::coef_a(), Bm = MultiPoly::parse("-1 + z^2");
  MultiPoly sum;
  const int lo = (i + j + 2) / 3, hi = std::min(i, j);
  for (int n = lo; n <= hi; ++n) {
    BigInt num, d1, d2, d3;
    mpz_fac_ui(num.get_mpz_t(), n);
    mpz_fac_ui(d1.get_mpz_t(), i - n);
    mpz_fac_ui(d2.get_mpz_t(), j - n);
    mpz_fac_ui(d3.get_mpz_t(), 3 * n - (i + j));
    BigRational c(num, d1 * d2 * d3);
    c.canonicalize();
    sum += (A.pow(3 * n - (i + j)) * Bm.pow(i + j - 2 * n)).scaled(c);
  }
  return sum;
}

// H_{2k}(w, w') as a (k-1)x(k-1) determinant with polynomial entries.
inline RatFunc H_two_var(int k, const RatFunc& w, const RatFunc& v) {
  if (k < 2) throw DomainError("H_two_var: k must be at least 2");
  const RatFunc zm(MultiPoly::parse("-1 + z^2"));
  const RatFunc h4 = H4(w, v, RatFunc(), RatFunc());
  const int n = k - 1;
  std::vector<std::vector<RatFunc>> eta(n + 1, std::vector<RatFunc>(n + 1));
  auto E = [&](int i, int j) { return RatFunc(eta_coeff(i, j)); };
  Matrix<RatFunc> m(n, std::vector<RatFunc>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m[i][j] = h4 * E(i, j) + zm * (E(i - 1, j) + E(i, j - 1) + zm * w * v * E(i - 1, j - 1));
  return det_fraction_free(m);
}

// ---------------------------------------------------------------------------
// condensed determinant in terms of H_4

inline RatFunc H_condensed(int k, const std::vector<RatFunc>& w) {
  if (k < 2 || w.size() != static_cast<std::size_t>(2 * k)) throw DomainError("H_condensed: need 2k arguments, k >= 2");
  RatFunc pref(1), d1(1), d2(1);
  for (int i = 0; i < k - 1; ++i)
    for (int j = 0; j < k - 1; ++j) pref *= h_pair(w[i], w[j + k]);
  for (int i = 0; i < k - 1; ++i)
    for (int j = i + 1; j < k - 1; ++j) {
      d1 *= w[j] - w[i];
      d2 *= w[j + k] - w[i + k];
    }
  Matrix<RatFunc> m(k - 1, std::vector<RatFunc>(k - 1));
  for (int i = 0; i < k - 1; ++i)
    for (int j = 0; j < k - 1; ++j)
      m[i][j] = H4(w[i], w[k - 1], w[j + k], w[2 * k - 1]) / h_pair(w[i], w[j + k]);
  return pref * det_fraction_free(m) / (d1 * d2);
}

// ---------------------------------------------------------------------------
// z -> (z+3)/(z-1)

inline RatFunc zeta_mobius(const RatFunc& p) {
  RatFunc z = zeta_sym();
  return p.substitute("z", (z + RatFunc(3)) / (z - RatFunc(1)));
}

// H(w)|_{z->z'} - (2/(z-1))^{k(k-1)} H(2w/(z-1)); zero when the rescaling holds.
inline RatFunc mobius_residual(int k, const std::vector<RatFunc>& w) {
  RatFunc z = zeta_sym();
  RatFunc s = RatFunc(2) / (z - RatFunc(1));
  std::vector<RatFunc> ws;
  for (const auto& x : w) ws.push_back(s * x);
  return zeta_mobius(H_poly(k, w)) - s.pow(k * (k - 1)) * H_poly(k, ws);
}

// ---------------------------------------------------------------------------
// bilinear identities; each returns the left side minus the right side

inline std::vector<RatFunc> with_tail(std::vector<RatFunc> w, std::initializer_list<RatFunc> tail) {
  w.insert(w.end(), tail.begin(), tail.end());
  return w;
}

// w holds 2k-1 values.
inline RatFunc bilinear_residual_1(int k, const std::vector<RatFunc>& w, const RatFunc& x, const RatFunc& y,
                                   const RatFunc& u, const RatFunc& v) {
  auto big = [&](const RatFunc& a, const RatFunc& b) { return H_poly(k + 1, with_tail(w, {a, b, v})); };
  auto small = [&](const RatFunc& a) { return H_poly(k, with_tail(w, {a})); };
  return (x - y) * h_pair(u, v) * big(x, y) * small(u) + (y - u) * h_pair(x, v) * big(y, u) * small(x) +
         (u - x) * h_pair(y, v) * big(u, x) * small(y);
}

// w holds 2k values.
inline RatFunc bilinear_residual_2(int k, const std::vector<RatFunc>& w, const RatFunc& x, const RatFunc& y,
                                   const RatFunc& u, const RatFunc& v) {
  RatFunc lhs = (x - u) * (y - v) * H_poly(k + 2, with_tail(w, {x, y, u, v})) * H_poly(k, w);
  RatFunc rhs = h_pair(x, v) * h_pair(y, u) * H_poly(k + 1, with_tail(w, {u, v})) * H_poly(k + 1, with_tail(w, {x, y})) -
                h_pair(x, y) * h_pair(u, v) * H_poly(k + 1, with_tail(w, {y, u})) * H_poly(k + 1, with_tail(w, {x, v}));
  return lhs - rhs;
}

// ---------------------------------------------------------------------------
// floating evaluation at distinct arguments in each half

template <typename C>
C H_numeric(int k, const std::vector<C>& w, const C& zeta) {
  if (k == 0) return C(1);
  if (w.size() != static_cast<std::size_t>(2 * k)) throw DomainError("H_numeric: need 2k arguments");
  const C A = C(3) + zeta * zeta, B = C(1) - zeta * zeta;
  auto h = [&](const C& x, const C& y) { return C(1) - A * x * y + B * x * y * (x + y); };
  C pref(1), vdm(1);
  CMatrix<C> m(k, std::vector<C>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      C hv = h(w[i], w[j + k]);
      pref *= hv;
      m[i][j] = C(1) / hv;
    }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) vdm *= (w[j] - w[i]) * (w[j + k] - w[i + k]);
  return pref * det_lu(m) / vdm;
}

// ---------------------------------------------------------------------------
// alternating sign matrix counts

enum class AsmFamily { A, A_refined, A_V, N8, A_DAD, A_UU2, Catalan };

namespace detail {
inline BigRational fact(long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return BigRational(f);
}
inline BigRational binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return BigRational(b);
}
inline BigInt to_integer(const BigRational& q) {
  if (q.get_den() != 1) throw InternalConsistencyError("count formula gave a non-integer");
  return q.get_num();
}
}  // namespace detail

// n is the matrix size (A, A_refined, A_V, A_DAD), the plane-partition size
// (N8, even), the U-turn size (A_UU2, multiple of 4), or the Catalan index.
inline BigInt asm_count(AsmFamily family, long n, long k = 0) {
  using detail::fact;
  BigRational r(1);
  switch (family) {
    case AsmFamily::A:
      if (n < 0) throw DomainError("A(n): n must be non-negative");
      for (long i = 0; i < n; ++i) r *= fact(3 * i + 1) / fact(n + i);
      break;
    case AsmFamily::A_refined:
      if (n < 1 || k < 1 || k > n) throw DomainError("A(n,k): need 1 <= k <= n");
      r = detail::binom(n + k - 2, n - 1) * detail::binom(2 * n - 1 - k, n - 1) / detail::binom(3 * n - 2, n - 1) *
          BigRational(asm_count(AsmFamily::A, n));
      break;
    case AsmFamily::A_V: {
      if (n < 1 || n % 2 == 0) throw DomainError("A_V(n): n must be odd");
      long m = (n - 1) / 2;
      for (long i = 1; i <= m; ++i) r *= fact(6 * i - 2) * fact(2 * i - 1) / (fact(4 * i - 1) * fact(4 * i - 2));
      r /= BigRational(BigInt(1) << static_cast<unsigned>(m));
      break;
    }
    case AsmFamily::N8: {
      if (n < 0 || n % 2 != 0) throw DomainError("N8(n): n must be even");
      long m = n / 2;
      for (long i = 0; i < m; ++i) r *= BigRational(3 * i + 1) * fact(6 * i) * fact(2 * i) / (fact(4 * i) * fact(4 * i + 1));
      break;
    }
    case AsmFamily::A_DAD: {
      if (n < 1 || n % 2 == 0) throw DomainError("A_DAD(n): n must be odd");
      long m = (n - 1) / 2;
      for (long i = 0; i <= m; ++i) r *= fact(3 * i) / fact(m + i);
      break;
    }
    case AsmFamily::A_UU2: {
      if (n < 0 || n % 4 != 0) throw DomainError("A_UU2(n): n must be a multiple of 4");
      long m = n / 4;
      r = BigRational(BigInt(1) << static_cast<unsigned>(2 * m));
      for (long i = 1; i <= m; ++i) r *= BigRational(6 * i - 1) * fact(6 * i - 3) / fact(2 * (m + i));
      break;
    }
    case AsmFamily::Catalan:
      if (n < 0) throw DomainError("Catalan(n): n must be non-negative");
      r = detail::binom(2 * n, n) / BigRational(n + 1);
      break;
  }
  return detail::to_integer(r);
}

}  // namespace susy8v
