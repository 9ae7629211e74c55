#pragma once

// Exact arithmetic: sparse multivariate polynomials over the rationals,
// rational functions, and fraction-free determinants.
//
// Polynomials keep their own sorted symbol list. Symbols are ordered
// z, m, n, w1, w2, ..., then any other name alphabetically. Terms are kept
// in graded lexicographic order, leading term first.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace susy8v {

using BigInt = mpz_class;
using BigRational = mpq_class;

template <typename T>
using Matrix = std::vector<std::vector<T>>;

constexpr int kMaxVars = 16;
constexpr int kMaxExponent = 255;

// ---------------------------------------------------------------------------
// symbols

namespace detail {

inline std::tuple<int, long, std::string> symbol_key(const std::string& s) {
  if (s == "z") return {0, 0, ""};
  if (s == "m") return {1, 0, ""};
  if (s == "n") return {2, 0, ""};
  if (s.size() > 1 && s[0] == 'w' &&
      std::all_of(s.begin() + 1, s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return {3, std::stol(s.substr(1)), ""};
  }
  return {4, 0, s};
}

}  // namespace detail

inline bool symbol_less(const std::string& a, const std::string& b) {
  return detail::symbol_key(a) < detail::symbol_key(b);
}

// ---------------------------------------------------------------------------
// monomials

// Exponent of variable i lives in byte (7 - i % 8) of word i / 8, so comparing
// the two words as unsigned integers is lexicographic order on exponents.
struct Monomial {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;
  std::uint16_t deg = 0;

  int get(int i) const {
    const std::uint64_t w = i < 8 ? hi : lo;
    return static_cast<int>((w >> (8 * (7 - i % 8))) & 0xffu);
  }

  void set(int i, int e) {
    if (e < 0 || e > kMaxExponent) throw CapacityError("exponent out of range");
    std::uint64_t& w = i < 8 ? hi : lo;
    const int shift = 8 * (7 - i % 8);
    const int old = static_cast<int>((w >> shift) & 0xffu);
    w = (w & ~(std::uint64_t{0xff} << shift)) | (std::uint64_t(e) << shift);
    deg = static_cast<std::uint16_t>(deg - old + e);
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.hi == b.hi && a.lo == b.lo;
  }

  // caller guarantees no byte overflows
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return Monomial{a.hi + b.hi, a.lo + b.lo, static_cast<std::uint16_t>(a.deg + b.deg)};
  }

  // caller guarantees divisibility
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    return Monomial{a.hi - b.hi, a.lo - b.lo, static_cast<std::uint16_t>(a.deg - b.deg)};
  }

  bool divisible_by(const Monomial& b, int nvars) const {
    for (int i = 0; i < nvars; ++i)
      if (get(i) < b.get(i)) return false;
    return true;
  }
};

// graded lexicographic: true if a comes before b (a is larger)
inline bool grlex_greater(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg > b.deg;
  if (a.hi != b.hi) return a.hi > b.hi;
  return a.lo > b.lo;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t h = m.hi * 0x9E3779B97F4A7C15ull;
    h ^= m.lo + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

struct Term {
  Monomial mono;
  BigRational coef;
};

class RatFunc;

// ---------------------------------------------------------------------------
// MultiPoly

class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(long c) : MultiPoly(BigRational(c)) {}
  MultiPoly(const BigRational& c) {
    if (c != 0) terms_.push_back({Monomial{}, c});
  }

  static MultiPoly var(const std::string& name, int exponent = 1) {
    MultiPoly p;
    p.vars_ = {name};
    Monomial m;
    m.set(0, exponent);
    p.terms_.push_back({m, BigRational(1)});
    return p;
  }

  // terms in any order, duplicates summed
  static MultiPoly from_terms(std::vector<std::string> vars, std::vector<Term> terms) {
    check_vars(vars);
    MultiPoly p;
    p.vars_ = std::move(vars);
    std::unordered_map<Monomial, BigRational, MonomialHash> acc;
    for (auto& t : terms) acc[t.mono] += t.coef;
    p.collect(acc);
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.deg == 0); }

  BigRational constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw DomainError("polynomial is not constant");
    return terms_[0].coef;
  }

  const BigRational& leading_coef() const {
    if (terms_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return terms_[0].coef;
  }

  int var_index(const std::string& v) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == v) return static_cast<int>(i);
    return -1;
  }

  int degree(const std::string& v) const {
    const int i = var_index(v);
    if (i < 0) return terms_.empty() ? -1 : 0;
    int d = terms_.empty() ? -1 : 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.get(i));
    return d;
  }

  int total_degree() const { return terms_.empty() ? -1 : terms_[0].mono.deg; }

  // ---- arithmetic

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return add(a, b, false); }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return add(a, b, true); }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
  }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return MultiPoly();
    if (a.is_constant()) return b.scaled(a.terms_[0].coef);
    if (b.is_constant()) return a.scaled(b.terms_[0].coef);
    auto [vars, ra, rb] = align(a, b);
    const int nv = static_cast<int>(vars.size());
    for (int i = 0; i < nv; ++i)
      if (max_exponent(ra, i) + max_exponent(rb, i) > kMaxExponent)
        throw CapacityError("exponent overflow in product");
    std::unordered_map<Monomial, BigRational, MonomialHash> acc;
    acc.reserve(ra.terms_.size() * rb.terms_.size());
    BigRational tmp;
    for (const auto& s : ra.terms_) {
      for (const auto& t : rb.terms_) {
        tmp = s.coef * t.coef;
        acc[s.mono * t.mono] += tmp;
      }
    }
    MultiPoly r;
    r.vars_ = std::move(vars);
    r.collect(acc);
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

  MultiPoly scaled(const BigRational& c) const {
    if (c == 0) return MultiPoly();
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coef *= c;
    return r;
  }

  MultiPoly pow(unsigned e) const {
    MultiPoly result(1), base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (a.vars_ == b.vars_) {
      for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef)
          return false;
      return true;
    }
    return (a - b).is_zero();
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  // Exact quotient a / b. A nonzero remainder is an internal-consistency error.
  friend MultiPoly divexact(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    if (a.is_zero()) return MultiPoly();
    if (b.is_constant()) return a.scaled(1 / b.terms_[0].coef);
    auto [vars, ra, rb] = align(a, b);
    const int nv = static_cast<int>(vars.size());
    std::map<Monomial, BigRational, GrlexGreater> rem;
    for (auto& t : ra.terms_) rem.emplace(t.mono, t.coef);
    const Term& lt = rb.terms_[0];
    std::vector<Term> q;
    BigRational tmp;
    while (!rem.empty()) {
      auto it = rem.begin();
      if (!it->first.divisible_by(lt.mono, nv))
        throw InternalConsistencyError("polynomial division is not exact");
      const Monomial qm = it->first / lt.mono;
      const BigRational qc = it->second / lt.coef;
      for (const auto& t : rb.terms_) {
        const Monomial m = qm * t.mono;
        tmp = qc * t.coef;
        auto jt = rem.find(m);
        if (jt == rem.end()) {
          rem.emplace(m, -tmp);
        } else {
          jt->second -= tmp;
          if (jt->second == 0) rem.erase(jt);
        }
      }
      q.push_back({qm, qc});
    }
    MultiPoly r;
    r.vars_ = std::move(vars);
    r.terms_ = std::move(q);
    r.trim_vars();
    return r;
  }

  // ---- structure

  // coefficients of powers of v; entry e holds the coefficient of v^e
  std::vector<MultiPoly> coefficients(const std::string& v) const {
    const int idx = var_index(v);
    if (idx < 0) return {*this};
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (static_cast<int>(i) != idx) rest.push_back(vars_[i]);
    std::vector<std::vector<Term>> buckets(degree(v) + 1);
    for (const auto& t : terms_) {
      Monomial m;
      int j = 0;
      for (int i = 0; i < static_cast<int>(vars_.size()); ++i) {
        if (i == idx) continue;
        m.set(j++, t.mono.get(i));
      }
      buckets[t.mono.get(idx)].push_back({m, t.coef});
    }
    std::vector<MultiPoly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) {
      MultiPoly c;
      c.vars_ = rest;
      c.terms_ = std::move(b);  // order preserved under variable removal
      c.trim_vars();
      out.push_back(std::move(c));
    }
    return out;
  }

  static MultiPoly from_coefficients(const std::vector<MultiPoly>& cs, const std::string& v) {
    MultiPoly r, x = var(v), xp(1);
    for (std::size_t e = 0; e < cs.size(); ++e) {
      if (!cs[e].is_zero()) r += cs[e] * xp;
      if (e + 1 < cs.size()) xp *= x;
    }
    return r;
  }

  MultiPoly coefficient(const std::string& v, int e) const {
    auto cs = coefficients(v);
    return e < static_cast<int>(cs.size()) ? cs[e] : MultiPoly();
  }

  // ---- evaluation and substitution

  MultiPoly substitute(const std::string& v, const MultiPoly& value) const {
    auto cs = coefficients(v);
    MultiPoly r;
    for (std::size_t e = cs.size(); e-- > 0;) r = r * value + cs[e];
    return r;
  }

  RatFunc substitute(const std::string& v, const RatFunc& value) const;

  // partial evaluation at exact points
  MultiPoly eval(const std::map<std::string, BigRational>& point) const {
    MultiPoly r = *this;
    for (const auto& [v, x] : point)
      if (r.var_index(v) >= 0) r = r.substitute(v, MultiPoly(x));
    return r;
  }

  BigRational eval_rational(const std::map<std::string, BigRational>& point) const {
    return eval(point).constant_value();
  }

  template <typename C>
  C eval_complex(const std::map<std::string, C>& point) const {
    std::vector<std::vector<C>> powers(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = point.find(vars_[i]);
      if (it == point.end()) throw DomainError("no value for symbol " + vars_[i]);
      powers[i].push_back(C(1));
    }
    C sum(0);
    for (const auto& t : terms_) {
      C term(t.coef.get_d());
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        const int e = t.mono.get(static_cast<int>(i));
        auto& pw = powers[i];
        while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * point.at(vars_[i]));
        term *= pw[e];
      }
      sum += term;
    }
    return sum;
  }

  // scaled to integer coefficients with gcd 1 and positive leading coefficient
  MultiPoly integer_primitive() const {
    if (terms_.empty()) return *this;
    BigInt l = 1, g = 0;
    for (const auto& t : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
    for (const auto& t : terms_) {
      BigInt v = t.coef.get_num() * (l / t.coef.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    BigRational c(l, g);
    c.canonicalize();
    if (terms_[0].coef < 0) c = -c;
    return scaled(c);
  }

  MultiPoly monic() const {
    if (terms_.empty()) return *this;
    return scaled(1 / terms_[0].coef);
  }

  // ---- text

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      BigRational c = it->coef;
      const bool neg = c < 0;
      if (neg) c = -c;
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        const int e = it->mono.get(static_cast<int>(i));
        if (e == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[i];
        if (e > 1) mono += "^" + std::to_string(e);
      }
      if (mono.empty()) {
        os << c.get_str();
      } else if (c == 1) {
        os << mono;
      } else {
        os << c.get_str() << "*" << mono;
      }
    }
    return os.str();
  }

  static MultiPoly parse(const std::string& text);

 private:
  std::vector<std::string> vars_;
  std::vector<Term> terms_;

  static void check_vars(const std::vector<std::string>& vars) {
    if (static_cast<int>(vars.size()) > kMaxVars) throw CapacityError("too many symbols in one polynomial");
    for (std::size_t i = 1; i < vars.size(); ++i)
      if (!symbol_less(vars[i - 1], vars[i])) throw DomainError("symbols not in canonical order");
  }

  static int max_exponent(const MultiPoly& p, int i) {
    int d = 0;
    for (const auto& t : p.terms_) d = std::max(d, t.mono.get(i));
    return d;
  }

  void collect(std::unordered_map<Monomial, BigRational, MonomialHash>& acc) {
    terms_.clear();
    terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c != 0) terms_.push_back({m, std::move(c)});
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return grlex_greater(a.mono, b.mono); });
    trim_vars();
  }

  MultiPoly with_vars(const std::vector<std::string>& target) const {
    if (target == vars_) return *this;
    std::vector<int> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = std::find(target.begin(), target.end(), vars_[i]);
      pos[i] = static_cast<int>(it - target.begin());
    }
    MultiPoly r;
    r.vars_ = target;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m;
      for (std::size_t i = 0; i < vars_.size(); ++i) m.set(pos[i], t.mono.get(static_cast<int>(i)));
      r.terms_.push_back({m, t.coef});
    }
    return r;
  }

  static std::tuple<std::vector<std::string>, MultiPoly, MultiPoly> align(const MultiPoly& a,
                                                                          const MultiPoly& b) {
    if (a.vars_ == b.vars_) return {a.vars_, a, b};
    std::vector<std::string> u;
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(u), symbol_less);
    check_vars(u);
    return {u, a.with_vars(u), b.with_vars(u)};
  }

  // drop symbols with zero exponent everywhere
  void trim_vars() {
    std::vector<bool> used(vars_.size(), false);
    for (const auto& t : terms_)
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (t.mono.get(static_cast<int>(i))) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
    std::vector<std::string> keep;
    std::vector<int> from;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (used[i]) {
        keep.push_back(vars_[i]);
        from.push_back(static_cast<int>(i));
      }
    for (auto& t : terms_) {
      Monomial m;
      for (std::size_t j = 0; j < from.size(); ++j) m.set(static_cast<int>(j), t.mono.get(from[j]));
      t.mono = m;
    }
    vars_ = std::move(keep);
  }

  static MultiPoly add(const MultiPoly& a, const MultiPoly& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    auto [vars, ra, rb] = align(a, b);
    MultiPoly r;
    r.vars_ = std::move(vars);
    r.terms_.reserve(ra.terms_.size() + rb.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < ra.terms_.size() || j < rb.terms_.size()) {
      if (j == rb.terms_.size() ||
          (i < ra.terms_.size() && grlex_greater(ra.terms_[i].mono, rb.terms_[j].mono))) {
        r.terms_.push_back(ra.terms_[i++]);
      } else if (i == ra.terms_.size() || grlex_greater(rb.terms_[j].mono, ra.terms_[i].mono)) {
        Term t = rb.terms_[j++];
        if (subtract) t.coef = -t.coef;
        r.terms_.push_back(std::move(t));
      } else {
        BigRational c = ra.terms_[i].coef;
        if (subtract) c -= rb.terms_[j].coef;
        else c += rb.terms_[j].coef;
        if (c != 0) r.terms_.push_back({ra.terms_[i].mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    r.trim_vars();
    return r;
  }
};

// ---------------------------------------------------------------------------
// parsing the canonical text form

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(const std::string& s) : s_(s) {}

  MultiPoly parse() {
    skip();
    MultiPoly result;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    result = term();
    if (neg) result = -result;
    for (;;) {
      skip();
      const char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        MultiPoly t = term();
        result = c == '+' ? result + t : result - t;
      } else {
        break;
      }
    }
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return result;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("cannot parse polynomial '" + s_ + "': " + what);
  }
  void skip() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  MultiPoly factor() {
    skip();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (peek() == '/') {
        ++pos_;
        num += "/" + digits();
      }
      BigRational q(num);
      q.canonicalize();
      return MultiPoly(q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      int e = 1;
      if (peek() == '^') {
        ++pos_;
        e = std::stoi(digits());
      }
      return MultiPoly::var(name, e);
    }
    fail("expected number or symbol");
  }

  MultiPoly term() {
    MultiPoly t = factor();
    for (;;) {
      skip();
      if (peek() != '*') break;
      ++pos_;
      t = t * factor();
    }
    return t;
  }
};

}  // namespace detail

inline MultiPoly MultiPoly::parse(const std::string& text) { return detail::PolyParser(text).parse(); }

// ---------------------------------------------------------------------------
// gcd

namespace detail {

inline std::string lowest_var(const MultiPoly& a, const MultiPoly& b) {
  std::string best;
  for (const auto* p : {&a, &b})
    for (const auto& v : p->vars())
      if (best.empty() || symbol_less(best, v)) best = v;
  return best;
}

MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b);

// gcd of the coefficients of p viewed as a polynomial in v
inline MultiPoly content(const std::vector<MultiPoly>& cs) {
  MultiPoly g;
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd_impl(g, c);
    if (g.is_constant()) return MultiPoly(1);
  }
  return g;
}

inline void strip(std::vector<MultiPoly>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// removes the polynomial content and scales to coprime integer coefficients
inline std::vector<MultiPoly> primitive(std::vector<MultiPoly> p) {
  MultiPoly c = content(p);
  if (!c.is_constant())
    for (auto& x : p) x = divexact(x, c);
  BigInt l = 1, g = 0;
  for (const auto& x : p)
    for (const auto& t : x.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
  for (const auto& x : p)
    for (const auto& t : x.terms()) {
      BigInt v = t.coef.get_num() * (l / t.coef.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
  if (g != 0) {
    BigRational s(l, g);
    s.canonicalize();
    for (auto& x : p) x = x.scaled(s);
  }
  return p;
}

// pseudo-remainder of a by b as polynomials in one variable
inline std::vector<MultiPoly> prem(std::vector<MultiPoly> a, const std::vector<MultiPoly>& b) {
  const std::size_t db = b.size() - 1;
  const MultiPoly& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const MultiPoly la = a.back();
    for (auto& x : a) x = x * lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    strip(a);
  }
  return a;
}

inline MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return MultiPoly(1);
  if (a == b) return a.monic();
  const std::string v = lowest_var(a, b);
  auto ca = a.coefficients(v);
  auto cb = b.coefficients(v);
  if (ca.size() == 1) return gcd_impl(a, content(cb));
  if (cb.size() == 1) return gcd_impl(content(ca), b);
  MultiPoly g_content = gcd_impl(content(ca), content(cb));
  auto pa = primitive(std::move(ca));
  auto pb = primitive(std::move(cb));
  if (pa.size() < pb.size()) std::swap(pa, pb);
  for (;;) {
    auto r = prem(pa, pb);
    if (r.empty()) break;
    if (r.size() == 1) return g_content.monic();
    pa = std::move(pb);
    pb = primitive(std::move(r));
  }
  return (g_content * MultiPoly::from_coefficients(pb, v)).monic();
}

}  // namespace detail

// monic greatest common divisor (1 for coprime inputs)
inline MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) { return detail::gcd_impl(a, b); }

// ---------------------------------------------------------------------------
// RatFunc

class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}
  RatFunc(const BigRational& c) : num_(c), den_(1) {}
  RatFunc(const MultiPoly& p) : num_(p), den_(1) {}
  RatFunc(const MultiPoly& num, const MultiPoly& den) : num_(num), den_(den) { normalize(); }

  static RatFunc var(const std::string& name) { return RatFunc(MultiPoly::var(name)); }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  BigRational constant_value() const { return num_.constant_value() / den_.constant_value(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    if (a.den_.is_constant() && b.den_.is_constant())
      return RatFunc(a.num_.scaled(1 / a.den_.constant_value()) + b.num_.scaled(1 / b.den_.constant_value()));
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.den_.is_constant() && b.den_.is_constant()) return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    // cross-cancel before multiplying
    MultiPoly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    RatFunc r;
    r.num_ = divexact(a.num_, g1) * divexact(b.num_, g2);
    r.den_ = divexact(a.den_, g2) * divexact(b.den_, g1);
    r.make_monic();
    return r;
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DomainError("division by the zero rational function");
    RatFunc inv;
    inv.num_ = b.den_;
    inv.den_ = b.num_;
    inv.make_monic();
    return a * inv;
  }
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

  RatFunc pow(int e) const {
    if (e < 0) return RatFunc(1) / pow(-e);
    RatFunc r;
    r.num_ = num_.pow(static_cast<unsigned>(e));
    r.den_ = den_.pow(static_cast<unsigned>(e));
    return r;
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc substitute(const std::string& v, const RatFunc& value) const {
    return num_.substitute(v, value) / den_.substitute(v, value);
  }

  RatFunc eval(const std::map<std::string, BigRational>& point) const {
    MultiPoly d = den_.eval(point);
    if (d.is_zero()) throw PoleError("rational function evaluated at a pole");
    return RatFunc(num_.eval(point), d);
  }

  BigRational eval_rational(const std::map<std::string, BigRational>& point) const {
    return eval(point).constant_value();
  }

  template <typename C>
  C eval_complex(const std::map<std::string, C>& point) const {
    return num_.eval_complex(point) / den_.eval_complex(point);
  }

  // polynomial value; throws if the denominator did not cancel
  MultiPoly as_polynomial() const {
    if (!den_.is_constant()) throw InternalConsistencyError("expected a polynomial, got " + to_string());
    return num_.scaled(1 / den_.constant_value());
  }

  std::string to_string() const {
    if (den_.is_constant() && den_.constant_value() == 1) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

  static RatFunc parse(const std::string& text) {
    const auto slash = text.find(")/(");
    if (!text.empty() && text.front() == '(' && slash != std::string::npos && text.back() == ')')
      return RatFunc(MultiPoly::parse(text.substr(1, slash - 1)),
                     MultiPoly::parse(text.substr(slash + 3, text.size() - slash - 4)));
    return RatFunc(MultiPoly::parse(text));
  }

 private:
  MultiPoly num_;
  MultiPoly den_;

  void make_monic() {
    if (num_.is_zero()) {
      den_ = MultiPoly(1);
      return;
    }
    const BigRational lc = den_.leading_coef();
    if (lc != 1) {
      num_ = num_.scaled(1 / lc);
      den_ = den_.scaled(1 / lc);
    }
  }

  void normalize() {
    if (den_.is_zero()) throw DomainError("zero denominator");
    if (num_.is_zero()) {
      den_ = MultiPoly(1);
      return;
    }
    if (den_.is_constant()) {
      num_ = num_.scaled(1 / den_.constant_value());
      den_ = MultiPoly(1);
      return;
    }
    if (!num_.is_constant()) {
      MultiPoly g = gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
      }
    }
    make_monic();
  }
};

inline RatFunc MultiPoly::substitute(const std::string& v, const RatFunc& value) const {
  if (value.is_polynomial()) return RatFunc(substitute(v, value.as_polynomial()));
  auto cs = coefficients(v);
  const std::size_t d = cs.size() - 1;
  std::vector<MultiPoly> npow{MultiPoly(1)}, dpow{MultiPoly(1)};
  for (std::size_t e = 1; e <= d; ++e) {
    npow.push_back(npow.back() * value.num());
    dpow.push_back(dpow.back() * value.den());
  }
  MultiPoly n;
  for (std::size_t e = 0; e <= d; ++e)
    if (!cs[e].is_zero()) n += cs[e] * npow[e] * dpow[d - e];
  return RatFunc(n, dpow[d]);
}

// ---------------------------------------------------------------------------
// determinants

// Bareiss fraction-free elimination over polynomials.
inline MultiPoly det_bareiss(Matrix<MultiPoly> m) {
  const std::size_t n = m.size();
  if (n == 0) return MultiPoly(1);
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("determinant of a non-square matrix");
  bool negate = false;
  MultiPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return MultiPoly();
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = k == 0 ? std::move(t) : divexact(t, prev);
      }
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

inline std::size_t& det_size_bound() {
  static std::size_t bound = 10;
  return bound;
}

// Clears denominators row by row, runs Bareiss, restores the row factors.
inline RatFunc det_fraction_free(const Matrix<RatFunc>& m) {
  if (m.size() > det_size_bound()) throw CapacityError("determinant size over bound");
  Matrix<MultiPoly> pm;
  MultiPoly scale(1);
  for (const auto& row : m) {
    MultiPoly l(1);
    for (const auto& x : row)
      if (!x.den().is_constant()) l = divexact(l * x.den(), gcd(l, x.den()));
    std::vector<MultiPoly> prow;
    for (const auto& x : row) prow.push_back(divexact(l * x.num(), x.den()));
    pm.push_back(std::move(prow));
    scale *= l;
  }
  return RatFunc(det_bareiss(std::move(pm)), scale);
}

}  // namespace susy8v
