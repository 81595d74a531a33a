#pragma once

// Coefficient backends.
//
// Every series, rational function and point type in this library is a
// template over a coefficient field T.  The operations the algorithms need
// beyond the arithmetic operators are collected in FieldTraits<T>:
//
//   from_int, from_rational   embed integers / exact rationals
//   is_zero                   exact test (all parts of a jet)
//   invertible                the value part is nonzero
//   root(x, n)                an n-th root if one exists in the backend
//   magnitude                 |x| as a Real, for tolerance checks
//   to_string / parse         serialization
//
// Rational is exact (GMP).  Real is MPFR with a runtime precision given in
// decimal digits; set_precision() changes the default for the calling thread.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace wtl {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;
using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultPrecision = 64;

inline void set_precision(unsigned digits) { Real::default_precision(digits); }
inline unsigned precision() { return Real::default_precision(); }

class BackendError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class T>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr bool exact = true;
  static Rational from_int(long long v) { return Rational(v); }
  static Rational from_rational(const Rational& r) { return r; }
  static bool is_zero(const Rational& x) { return x == 0; }
  static bool invertible(const Rational& x) { return x != 0; }

  static std::optional<Integer> int_root(const Integer& v, unsigned n) {
    if (v < 0 && n % 2 == 0) return std::nullopt;
    Integer r;
    const bool neg = v < 0;
    Integer a = neg ? Integer(-v) : v;
    if (mpz_root(r.backend().data(), a.backend().data(), n) == 0) return std::nullopt;
    return neg ? Integer(-r) : r;
  }

  static std::optional<Rational> root(const Rational& x, int n) {
    if (n == 1) return x;
    if (n <= 0) throw BackendError("root: degree must be positive");
    auto p = int_root(numerator(x), static_cast<unsigned>(n));
    auto q = int_root(denominator(x), static_cast<unsigned>(n));
    if (!p || !q) return std::nullopt;
    return Rational(*p, *q);
  }

  static Real magnitude(const Rational& x) { return abs(Real(x)); }
  static Real to_real(const Rational& x) { return Real(x); }
  static Rational value(const Rational& x) { return x; }

  static std::string to_string(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str() + "/1";
    return x.str();
  }
  static Rational parse(const std::string& s) {
    if (s.find_first_of(".eE") != std::string::npos)
      throw BackendError("rational backend cannot parse decimal '" + s + "'");
    return Rational(s);
  }
};

template <>
struct FieldTraits<Real> {
  static constexpr bool exact = false;
  static Real from_int(long long v) { return Real(v); }
  static Real from_rational(const Rational& r) { return Real(r); }
  static bool is_zero(const Real& x) { return x == 0; }
  static bool invertible(const Real& x) { return x != 0; }
  static std::optional<Real> root(const Real& x, int n) {
    if (n == 1) return x;
    if (n <= 0) throw BackendError("root: degree must be positive");
    if (x > 0) return pow(x, Real(1) / n);
    if (x < 0 && n % 2 == 1) return -pow(-x, Real(1) / n);
    if (x == 0) return Real(0);
    return std::nullopt;
  }
  static Real magnitude(const Real& x) { return abs(x); }
  static Real to_real(const Real& x) { return x; }
  static Real value(const Real& x) { return x; }
  static std::string to_string(const Real& x) {
    return x.str(static_cast<std::streamsize>(precision()), std::ios_base::scientific);
  }
  static Real parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) return Real(Rational(s));
    return Real(s);
  }
};

template <class T>
T from_int(long long v) {
  return FieldTraits<T>::from_int(v);
}

template <class T>
T from_ratio(long long p, long long q) {
  return FieldTraits<T>::from_rational(Rational(p, q));
}

template <class T>
bool is_zero(const T& x) {
  return FieldTraits<T>::is_zero(x);
}

template <class T>
T int_pow(const T& x, long long e) {
  if (e < 0) return T(from_int<T>(1) / int_pow(x, -e));
  T r = from_int<T>(1), b = x;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

inline Rational factorial(int n) {
  Rational r(1);
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace wtl
