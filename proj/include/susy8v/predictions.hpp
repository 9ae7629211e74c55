#pragma once

// Closed-form homogeneous predictions as exact rational functions of
// z (zeta), m (mu) and n (nu), built from the H_{2k} polynomials.

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "susy8v/errors.hpp"
#include "susy8v/exactpoly.hpp"
#include "susy8v/rzpoly.hpp"

namespace susy8v {

enum class ComponentPattern { Alternating, Polarized, AlmostPolarized };

inline const char* pattern_name(ComponentPattern p) {
  switch (p) {
    case ComponentPattern::Alternating: return "alternating";
    case ComponentPattern::Polarized: return "polarized";
    case ComponentPattern::AlmostPolarized: return "almost_polarized";
  }
  return "?";
}

namespace detail {

// H_{2k} at a tagged argument list, memoised by tag names.
inline RatFunc H_tagged(int k, const std::vector<HSpecPoint>& pts) {
  if (k == 0) return RatFunc(1);  // H_0 = 1 whatever the arguments
  static std::mutex mu;
  static std::map<std::string, RatFunc> cache;
  std::string key = std::to_string(k);
  for (const auto& p : pts) key += std::string(",") + tag_name(p.tag) + (p.tag == HTag::Free ? p.value.to_string() : "");
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  RatFunc v = H_poly(k, pts);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, v);
  return v;
}

inline RatFunc H(int k) { return H_tagged(k, {}); }
inline RatFunc H(int k, HSpecPoint a) { return H_tagged(k, {a}); }
inline RatFunc H(int k, HSpecPoint a, HSpecPoint b) { return H_tagged(k, {a, b}); }
inline RatFunc H(int k, HSpecPoint a, HSpecPoint b, HSpecPoint c) { return H_tagged(k, {a, b, c}); }

inline RatFunc pow2(int e) { return RatFunc(BigRational(BigInt(1) << e)); }
inline RatFunc zr() { return zeta_sym(); }
inline RatFunc mr() { return RatFunc::var("m"); }
inline RatFunc nr() { return RatFunc::var("n"); }

inline RatFunc require_polynomial(const RatFunc& r, const char* what) {
  if (!r.is_polynomial()) throw InternalConsistencyError(std::string(what) + ": result is not a polynomial");
  return r;
}

}  // namespace detail

// Components of psi_n labelled by the alternating, polarized (all down) and
// almost-polarized (up...up down) configurations.
inline RatFunc component_predict(int n, ComponentPattern pat) {
  using namespace detail;
  using P = HSpecPoint;
  if (n < 0) throw DomainError("component_predict: n must be non-negative");
  const int k = n / 2;
  const bool even = n % 2 == 0;
  const RatFunc z = zr(), one(1), half(BigRational(1, 2));
  RatFunc r;
  switch (pat) {
    case ComponentPattern::Alternating:
      r = even ? pow2(k) * H(k) * H(k, P::J2()) : pow2(k) * H(k) * H(k + 1, P::J2());
      break;
    case ComponentPattern::Polarized:
      r = even ? z.pow(k) * H(k) * H(k + 1, P::J3(), P::J4()) : z.pow(k + 1) * H(k + 1, P::J3()) * H(k + 1, P::J4());
      break;
    case ComponentPattern::AlmostPolarized:
      if (even)
        r = half * z.pow(k) * ((one + z) * H(k, P::J3()) * H(k + 1, P::J4()) + (one - z) * H(k, P::J4()) * H(k + 1, P::J3()));
      else
        r = half * z.pow(k) * ((one - z * z) * H(k + 1) * H(k + 1, P::J3(), P::J4()) + H(k) * H(k + 2, P::J3(), P::J4()));
      break;
  }
  return require_polynomial(r, "component_predict");
}

// S_n(mu) as a polynomial in z and m.
inline RatFunc S_predict(int n) {
  using namespace detail;
  using P = HSpecPoint;
  const int k = n / 2;
  const RatFunc two_mu_k = (RatFunc(2) * mr()).pow(k);
  RatFunc r = n % 2 == 0 ? two_mu_k * H(k) * H(k + 1, P::J2(), P::MuBar())
                         : two_mu_k * (mr() + RatFunc(1)) * H(k + 1, P::J2()) * H(k + 1, P::MuBar());
  return require_polynomial(r, "S_predict");
}

// Sbar_n^{+-}(nu) as a polynomial in z and n. Even sizes use the determinant
// combination over 2(nu-z)(nu z-1); odd sizes the simplified two-term forms.
inline RatFunc Sbar_predict(int n, int sign) {
  using namespace detail;
  using P = HSpecPoint;
  const int k = n / 2;
  const RatFunc z = zr(), v = nr(), one(1), two(2);
  RatFunc r;
  if (n % 2 == 0) {
    const RatFunc cpm = (z + one) * (v - one), cmp = (z - one) * (v + one);
    const RatFunc den = two * (v - z) * (v * z - one);
    const RatFunc h4 = H(k + 1, P::J4()), h3 = H(k + 1, P::J3());
    const RatFunc h3n = H(k + 1, P::J3(), P::NuBar()), h4n = H(k + 1, P::J4(), P::NuBar());
    if (sign > 0)
      r = v.pow(k) * (cpm * cpm * h4 * h3n - cmp * cmp * h3 * h4n) / den;
    else
      r = cpm * cmp * v.pow(k) * (h4 * h3n - h3 * h4n) / den;
  } else {
    const RatFunc h4 = H(k + 1, P::J4()), h3 = H(k + 1, P::J3());
    const RatFunc h3n = H(k + 2, P::J3(), P::NuBar()), h4n = H(k + 2, P::J4(), P::NuBar());
    const RatFunc vk1 = k >= 1 ? v.pow(k - 1) : one / v;
    if (sign > 0)
      r = vk1 * (v - one) / two * ((one + v * v) * h4 * h3n - (one + v).pow(2) * h3 * h4n);
    else
      r = vk1 * (v + one) / two * ((one - v).pow(2) * h4 * h3n - (one + v * v) * h3 * h4n);
  }
  return require_polynomial(r, "Sbar_predict");
}

// Sums of components of psi_n and psibar_n.
inline RatFunc Sigma_predict(int n) {
  using namespace detail;
  using P = HSpecPoint;
  if (n % 2 == 1) return RatFunc();
  const int k = n / 2;
  return require_polynomial(pow2(k + 1) * (zr() + RatFunc(3)).pow(k) * H(k) * H(k + 1, P::J2(), P::J3()), "Sigma_predict");
}

inline RatFunc Sigmabar_predict(int n) {
  using namespace detail;
  using P = HSpecPoint;
  if (n % 2 == 0) return RatFunc();
  const int k = n / 2;
  return require_polynomial(pow2(k + 1) * (zr() + RatFunc(3)).pow(k + 1) * H(k + 1, P::J2()) * H(k + 1, P::J3()),
                            "Sigmabar_predict");
}

// ||psi_n||^2 under the transposition pairing.
inline RatFunc norm_predict(int n) {
  using namespace detail;
  using P = HSpecPoint;
  const int k = n / 2;
  RatFunc r = n % 2 == 0 ? pow2(2 * k + 1) * H(k) * H(k + 1, P::J2(), P::J3()) * H(k + 1, P::J3(), P::J4()) *
                               H(k + 1, P::J2(), P::J4())
                         : pow2(2 * (k + 1)) * H(k + 1, P::J2()) * H(k + 1, P::J3()) * H(k + 1, P::J4()) *
                               H(k + 2, P::J2(), P::J3(), P::J4());
  return require_polynomial(r, "norm_predict");
}

// Refined ASM generating polynomial sum_k A(n+1,k+1) m^k.
inline RatFunc refined_asm_polynomial(int n) {
  RatFunc r;
  for (int k = 0; k <= n; ++k)
    r += RatFunc(BigRational(asm_count(AsmFamily::A_refined, n + 1, k + 1))) * detail::mr().pow(k);
  return r;
}

// Trigonometric values of Sbar at z = 0.
inline RatFunc Sbar_trig_predict(int n, int sign) {
  const int k = n / 2;
  const RatFunc v = detail::nr();
  if (n % 2 == 0) {
    if (sign < 0) return RatFunc();
    return RatFunc(BigRational(2 * asm_count(AsmFamily::A_V, 2 * k + 1) * asm_count(AsmFamily::N8, 2 * (k + 1)))) *
           v.pow(k);
  }
  const BigInt c = asm_count(AsmFamily::A_V, 2 * k + 3) * asm_count(AsmFamily::N8, 2 * (k + 1));
  return RatFunc(BigRational(-c)) * (v - RatFunc(sign > 0 ? 1 : -1)) * v.pow(k);
}

inline BigRational eval_at(const RatFunc& r, std::map<std::string, BigRational> point) {
  return r.eval_rational(point);
}

}  // namespace susy8v
