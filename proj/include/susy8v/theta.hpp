#pragma once

// Jacobi theta functions in the Whittaker-Watson normalisation,
//   th1(z,q) = 2 sum_{n>=0} (-1)^n q^{(n+1/2)^2} sin((2n+1)z),
//   th2(z,q) = 2 sum_{n>=0} q^{(n+1/2)^2} cos((2n+1)z),
//   th3(z,q) = 1 + 2 sum_{n>=1} q^{n^2} cos(2nz),
//   th4(z,q) = 1 + 2 sum_{n>=1} (-1)^n q^{n^2} cos(2nz),
// for complex z and real nome 0 < q < 1. The scalar type C is either
// std::complex<double> or the 50-digit boost complex.

#include <cmath>
#include <complex>

#include "susy8v/errors.hpp"
#include "susy8v/numeric.hpp"

namespace susy8v {

struct ThetaParams {
  double p = 0.25;
  Complex lambda{0.0, 0.0};
  double trunc_eps = 1e-17;
  int precision = 53;

  // p = exp(i pi tau) with tau on the imaginary axis.
  Complex tau() const { return Complex(0.0, -std::log(p) / M_PI); }

  static ThetaParams make(double p, Complex lambda = {0.0, 0.0}, int precision = 53) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("nome must lie in (0,1)");
    ThetaParams t;
    t.p = p;
    t.lambda = lambda;
    t.precision = precision;
    t.trunc_eps = precision > 53 ? 1e-52 : 1e-17;
    return t;
  }
};

template <typename C>
C theta(int kind, const C& z, const real_t<C>& q, double trunc_eps = 1e-17) {
  using R = real_t<C>;
  using std::abs;
  using std::cos;
  using std::exp;
  using std::sin;
  using std::sqrt;
  if (!(q > R(0) && q < R(1))) throw DomainError("theta: nome must lie in (0,1)");
  if (kind < 1 || kind > 4) throw DomainError("theta: kind must be 1..4");
  const double im = std::abs(static_cast<double>(z.imag()));
  const double lq = std::log(static_cast<double>(q));
  const bool half = (kind == 1 || kind == 2);
  C sum = half ? C(0) : C(1);
  // q^{(n+1/2)^2} resp. q^{n^2}, and the factor to the next power
  R qn = half ? R(sqrt(sqrt(q))) : q;
  R f = half ? R(q * q) : R(q * q * q);
  for (int n = half ? 0 : 1, count = 0; count < 256; ++n, ++count) {
    C term;
    const R sgn = (n % 2 == 0) ? R(1) : R(-1);
    switch (kind) {
      case 1: term = C(R(2) * sgn * qn) * sin(C(2 * n + 1) * z); break;
      case 2: term = C(R(2) * qn) * cos(C(2 * n + 1) * z); break;
      case 3: term = C(R(2) * qn) * cos(C(2 * n) * z); break;
      default: term = C(R(2) * sgn * qn) * cos(C(2 * n) * z); break;
    }
    sum += term;
    qn *= f;
    f *= q * q;
    // stop on an a-priori bound of the remaining terms: individual terms may
    // vanish (sin(k pi) at rational multiples of pi) long before convergence
    const double growth = (half ? 2.0 * (n + 1) : 2.0 * n + 1.0) * lq + 2.0 * im;
    if (growth < 0.0) {
      const double nn = half ? n + 1.5 : n + 1.0;
      const double log_bound = std::log(2.0) + nn * nn * lq + 2.0 * nn * im;
      const double s = magnitude(sum);
      if (log_bound < std::log(trunc_eps) + (s > 0.0 ? std::log(s) : -745.0)) return sum;
    }
  }
  return sum;
}

// Theta functions bound to one nome p, with the nome-p^2 variants and the
// constants that recur in the model (eta = pi/3, pi tau).
template <typename C>
struct Theta {
  using R = real_t<C>;
  R p, p2;
  C pi, eta, pitau;
  double eps;

  explicit Theta(const ThetaParams& tp) {
    using std::log;
    if constexpr (std::is_same_v<R, double>) {
      p = tp.p;
    } else {
      // the decimal string keeps 0.1 as one tenth at high precision
      p = R(std::to_string(tp.p));
    }
    p2 = p * p;
    pi = pi_value<C>();
    eta = pi / C(3);
    pitau = C(R(0), R(-log(p)));
    eps = tp.trunc_eps;
  }

  C t1(const C& z) const { return theta<C>(1, z, p, eps); }
  C t2(const C& z) const { return theta<C>(2, z, p, eps); }
  C t3(const C& z) const { return theta<C>(3, z, p, eps); }
  C t4(const C& z) const { return theta<C>(4, z, p, eps); }
  C T1(const C& z) const { return theta<C>(1, z, p2, eps); }
  C T2(const C& z) const { return theta<C>(2, z, p2, eps); }
  C T3(const C& z) const { return theta<C>(3, z, p2, eps); }
  C T4(const C& z) const { return theta<C>(4, z, p2, eps); }
  C t(int k, const C& z) const { return theta<C>(k, z, p, eps); }
  C T(int k, const C& z) const { return theta<C>(k, z, p2, eps); }

  // exp(i x)
  C expi(const C& x) const {
    using std::exp;
    return exp(C(R(0), R(1)) * x);
  }
  C cp() const { return C(p, R(0)); }
};

}  // namespace susy8v
