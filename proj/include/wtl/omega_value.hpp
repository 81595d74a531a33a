#pragma once

// Values of tau-structure entries: a field element plus a finite sum of
// integer-weighted logarithms coef * log(arg) with exact arguments.
//
// Arguments that agree up to sign are merged (log(-x) = log(x) + i pi; the
// constant is branch data and is not tracked).  Derivatives ignore it.

#include "wtl/jet.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <sstream>
#include <string>
#include <vector>

namespace wtl {

template <class T>
struct LogTerm {
  T coef;
  T arg;
};

template <class T>
class OmegaValue {
 public:
  OmegaValue() : scalar_(FieldTraits<T>::from_int(0)) {}
  OmegaValue(const T& s) : scalar_(s) {}  // NOLINT(google-explicit-constructor)

  static OmegaValue log_of(const T& arg, const T& coef = FieldTraits<T>::from_int(1)) {
    if (!FieldTraits<T>::invertible(arg))
      throw std::domain_error("log of zero in a tau-structure entry");
    OmegaValue v;
    v.logs_.push_back({coef, arg});
    return v;
  }

  const T& scalar() const { return scalar_; }
  const std::vector<LogTerm<T>>& logs() const { return logs_; }
  bool has_log() const { return !logs_.empty(); }

  OmegaValue& operator+=(const OmegaValue& o) {
    scalar_ += o.scalar_;
    for (const auto& l : o.logs_) add_log(l);
    return *this;
  }
  friend OmegaValue operator+(OmegaValue a, const OmegaValue& b) { return a += b; }
  OmegaValue scaled(const T& c) const {
    OmegaValue r;
    r.scalar_ = c * scalar_;
    for (const auto& l : logs_) r.add_log({c * l.coef, l.arg});
    return r;
  }
  friend OmegaValue operator-(const OmegaValue& a, const OmegaValue& b) {
    return a + b.scaled(FieldTraits<T>::from_int(-1));
  }

  // Total magnitude of what is left after cancellation: |scalar| plus
  // |coef| of every surviving log.  Arguments are matched up to sign with
  // relative tolerance `tol` (zero for exact comparison).
  static Real distance(const OmegaValue& a, const OmegaValue& b, const Real& tol = Real(0)) {
    Real d = FieldTraits<T>::magnitude(a.scalar_ - b.scalar_);
    std::vector<LogTerm<T>> rest = a.logs_;
    for (const auto& l : b.logs_) merge_into(rest, {T(-l.coef), l.arg}, tol);
    for (const auto& l : rest) d += FieldTraits<T>::magnitude(l.coef);
    return d;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << FieldTraits<T>::to_string(scalar_);
    for (const auto& l : logs_)
      os << " + " << FieldTraits<T>::to_string(l.coef) << "*log(" << FieldTraits<T>::to_string(l.arg) << ")";
    return os.str();
  }

 private:
  static bool same_up_to_sign(const T& x, const T& y, const Real& tol) {
    const Real scale = std::max(Real(1), FieldTraits<T>::magnitude(x));
    const Real lim = tol * scale;
    return FieldTraits<T>::magnitude(x - y) <= lim || FieldTraits<T>::magnitude(x + y) <= lim;
  }

  static void merge_into(std::vector<LogTerm<T>>& v, const LogTerm<T>& l, const Real& tol) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (same_up_to_sign(v[i].arg, l.arg, tol)) {
        v[i].coef += l.coef;
        if (FieldTraits<T>::is_zero(v[i].coef)) v.erase(v.begin() + static_cast<long>(i));
        return;
      }
    }
    if (!FieldTraits<T>::is_zero(l.coef)) v.push_back(l);
  }

  void add_log(const LogTerm<T>& l) { merge_into(logs_, l, Real(0)); }

  T scalar_;
  std::vector<LogTerm<T>> logs_;
};

// d/d(direction) of an entry evaluated on jets; log terms give coef * arg' / arg.
template <class T>
T jet_derivative(const OmegaValue<Jet<T>>& v, std::size_t dir) {
  T d = v.scalar().part(dir);
  for (const auto& l : v.logs()) d += l.coef.value() * l.arg.part(dir) / l.arg.value();
  return d;
}

template <class T>
OmegaValue<T> value_of(const OmegaValue<Jet<T>>& v) {
  OmegaValue<T> r(v.scalar().value());
  for (const auto& l : v.logs()) r += OmegaValue<T>::log_of(l.arg.value(), l.coef.value());
  return r;
}

// Real rendering on the principal branch (real part).
template <class T>
Real numeric_value(const OmegaValue<T>& v) {
  Real r = FieldTraits<T>::to_real(v.scalar());
  for (const auto& l : v.logs()) r += FieldTraits<T>::to_real(l.coef) * log(abs(FieldTraits<T>::to_real(l.arg)));
  return r;
}

}  // namespace wtl
