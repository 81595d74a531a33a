#pragma once

// First-order jets: a value plus one first-order part per infinitesimal
// direction, eps_i * eps_j = 0.  Used for x-derivatives of Lax flows and for
// directional derivatives along tangent fields.  Directions missing from an
// operand count as zero, so jets of different widths mix freely.

#include "wtl/field.hpp"

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <vector>

namespace wtl {

template <class T>
class Jet {
 public:
  Jet() : value_(FieldTraits<T>::from_int(0)) {}
  Jet(const T& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Jet(const T& v, std::vector<T> d) : value_(v), d_(std::move(d)) {}

  static Jet variable(const T& v, std::size_t dir, std::size_t width) {
    std::vector<T> d(width, FieldTraits<T>::from_int(0));
    d.at(dir) = FieldTraits<T>::from_int(1);
    return Jet(v, std::move(d));
  }

  const T& value() const { return value_; }
  std::size_t width() const { return d_.size(); }
  T part(std::size_t i) const { return i < d_.size() ? d_[i] : FieldTraits<T>::from_int(0); }
  const std::vector<T>& parts() const { return d_; }
  void set_part(std::size_t i, const T& v) {
    if (d_.size() <= i) d_.resize(i + 1, FieldTraits<T>::from_int(0));
    d_[i] = v;
  }

  Jet& operator+=(const Jet& o) {
    value_ += o.value_;
    grow(o.d_.size());
    for (std::size_t i = 0; i < o.d_.size(); ++i) d_[i] += o.d_[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    value_ -= o.value_;
    grow(o.d_.size());
    for (std::size_t i = 0; i < o.d_.size(); ++i) d_[i] -= o.d_[i];
    return *this;
  }
  Jet& operator*=(const Jet& o) {
    grow(o.d_.size());
    for (std::size_t i = 0; i < d_.size(); ++i) d_[i] = d_[i] * o.value_ + value_ * o.part(i);
    value_ *= o.value_;
    return *this;
  }
  Jet& operator/=(const Jet& o) {
    T inv = FieldTraits<T>::from_int(1) / o.value_;
    grow(o.d_.size());
    for (std::size_t i = 0; i < d_.size(); ++i) d_[i] = (d_[i] - value_ * inv * o.part(i)) * inv;
    value_ *= inv;
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const Jet& b) { return a *= b; }
  friend Jet operator/(Jet a, const Jet& b) { return a /= b; }
  friend Jet operator-(const Jet& a) {
    Jet r(-a.value_);
    r.d_.reserve(a.d_.size());
    for (const auto& x : a.d_) r.d_.push_back(-x);
    return r;
  }

  friend bool operator==(const Jet& a, const Jet& b) {
    if (!(a.value_ == b.value_)) return false;
    const std::size_t w = std::max(a.d_.size(), b.d_.size());
    for (std::size_t i = 0; i < w; ++i)
      if (!(a.part(i) == b.part(i))) return false;
    return true;
  }

  friend std::ostream& operator<<(std::ostream& os, const Jet& j) {
    os << j.value_;
    for (std::size_t i = 0; i < j.d_.size(); ++i) os << " + (" << j.d_[i] << ")e" << i;
    return os;
  }

 private:
  void grow(std::size_t n) {
    if (d_.size() < n) d_.resize(n, FieldTraits<T>::from_int(0));
  }

  T value_;
  std::vector<T> d_;
};

template <class T>
struct FieldTraits<Jet<T>> {
  using Base = FieldTraits<T>;
  static constexpr bool exact = Base::exact;
  static Jet<T> from_int(long long v) { return Jet<T>(Base::from_int(v)); }
  static Jet<T> from_rational(const Rational& r) { return Jet<T>(Base::from_rational(r)); }
  static bool is_zero(const Jet<T>& x) {
    if (!Base::is_zero(x.value())) return false;
    for (const auto& d : x.parts())
      if (!Base::is_zero(d)) return false;
    return true;
  }
  static bool invertible(const Jet<T>& x) { return Base::invertible(x.value()); }
  static std::optional<Jet<T>> root(const Jet<T>& x, int n) {
    auto r = Base::root(x.value(), n);
    if (!r) return std::nullopt;
    // d(x^{1/n}) = dx / (n r^{n-1})
    T denom = Base::from_int(n) * int_pow(*r, n - 1);
    std::vector<T> d;
    for (const auto& p : x.parts()) d.push_back(p / denom);
    return Jet<T>(*r, std::move(d));
  }
  static Real magnitude(const Jet<T>& x) {
    Real m = Base::magnitude(x.value());
    for (const auto& d : x.parts()) m = std::max(m, Base::magnitude(d));
    return m;
  }
  static Real to_real(const Jet<T>& x) { return Base::to_real(x.value()); }
  static T value(const Jet<T>& x) { return x.value(); }
  static std::string to_string(const Jet<T>& x) {
    std::string s = "[" + Base::to_string(x.value());
    for (const auto& d : x.parts()) s += "," + Base::to_string(d);
    return s + "]";
  }
  static Jet<T> parse(const std::string& s) { return Jet<T>(Base::parse(s)); }
};

}  // namespace wtl
