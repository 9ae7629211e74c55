#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "susy8v/errors.hpp"

namespace susy8v {

using Complex = std::complex<double>;
using ComplexHP = boost::multiprecision::cpp_complex_50;

template <typename C>
using CMatrix = std::vector<std::vector<C>>;

// Real scalar type behind a complex type.
template <typename C>
struct real_of {
  using type = typename C::value_type;
};
template <>
struct real_of<ComplexHP> {
  using type = boost::multiprecision::cpp_bin_float_50;
};
template <typename C>
using real_t = typename real_of<C>::type;

template <typename C>
double magnitude(const C& z) {
  using std::abs;
  return static_cast<double>(abs(z));
}

template <typename C>
C to_complex(const Complex& z) {
  return C(z.real(), z.imag());
}

template <typename C>
Complex to_double(const C& z) {
  return Complex(static_cast<double>(z.real()), static_cast<double>(z.imag()));
}

template <typename C>
C pi_value() {
  using R = real_t<C>;
  if constexpr (std::is_same_v<R, double>) {
    return C(M_PI, 0.0);
  } else {
    return C(boost::math::constants::pi<R>(), R(0));
  }
}

// Determinant by LU with partial pivoting.
template <typename C>
C det_lu(CMatrix<C> m) {
  const std::size_t n = m.size();
  C det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = magnitude(m[k][k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      double a = magnitude(m[i][k]);
      if (a > best) {
        best = a;
        piv = i;
      }
    }
    if (best == 0.0) return C(0);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      C f = m[i][k] / m[k][k];
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

// |a-b| / max(|a|, |b|, 1)
template <typename C>
double rel_diff(const C& a, const C& b) {
  double scale = std::max({magnitude(a), magnitude(b), 1.0});
  return magnitude(C(a - b)) / scale;
}

// |a-b| / max(|a|, |b|), for quantities whose natural scale is far from 1.
template <typename C>
double rel_diff_scaled(const C& a, const C& b) {
  double scale = std::max(magnitude(a), magnitude(b));
  if (scale == 0.0) return 0.0;
  return magnitude(C(a - b)) / scale;
}

// Working precision from SUSY8V_PRECISION ("double" or a bit count); 53 when unset.
inline int env_precision_bits(int fallback = 53) {
  const char* s = std::getenv("SUSY8V_PRECISION");
  if (!s || !*s) return fallback;
  std::string v(s);
  if (v == "double") return 53;
  if (v == "extended" || v == "high") return 166;
  char* end = nullptr;
  long bits = std::strtol(s, &end, 10);
  if (*end != '\0' || bits <= 0) throw ConfigError("SUSY8V_PRECISION must be 'double', 'extended' or a bit count");
  return static_cast<int>(bits);
}

}  // namespace susy8v
