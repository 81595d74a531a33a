#pragma once

// Rational functions kept as a polynomial part plus principal parts at
// finitely many finite points:
//
//   R(z) = sum_i poly[i] z^i + sum_k sum_j parts[k].c[j-1] (z - loc_k)^-j
//
// The layer is linear on purpose: nonlinear expressions are formed after
// expand_at() at the point where a residue is taken.

#include "wtl/series.hpp"

#include <cstddef>
#include <vector>

namespace wtl {

template <class T>
struct PolePart {
  T loc;
  std::vector<T> c;  // c[j-1] multiplies (z - loc)^-j
};

template <class T>
class GlobalRational {
 public:
  GlobalRational() = default;

  static GlobalRational polynomial(std::vector<T> p) {
    GlobalRational r;
    r.poly_ = std::move(p);
    return r;
  }
  static GlobalRational pole(const T& loc, std::vector<T> c) {
    GlobalRational r;
    r.add_part(loc, c);
    return r;
  }

  const std::vector<T>& poly() const { return poly_; }
  const std::vector<PolePart<T>>& parts() const { return parts_; }

  // merges with an existing part at the same location
  void add_part(const T& loc, const std::vector<T>& c) {
    for (auto& p : parts_) {
      if (FieldTraits<T>::is_zero(p.loc - loc)) {
        if (p.c.size() < c.size()) p.c.resize(c.size(), FieldTraits<T>::from_int(0));
        for (std::size_t j = 0; j < c.size(); ++j) p.c[j] += c[j];
        return;
      }
    }
    parts_.push_back({loc, c});
  }

  GlobalRational& operator+=(const GlobalRational& o) {
    if (poly_.size() < o.poly_.size()) poly_.resize(o.poly_.size(), FieldTraits<T>::from_int(0));
    for (std::size_t i = 0; i < o.poly_.size(); ++i) poly_[i] += o.poly_[i];
    for (const auto& p : o.parts_) add_part(p.loc, p.c);
    return *this;
  }
  GlobalRational scaled(const T& s) const {
    GlobalRational r = *this;
    for (auto& x : r.poly_) x = s * x;
    for (auto& p : r.parts_)
      for (auto& x : p.c) x = s * x;
    return r;
  }
  friend GlobalRational operator+(GlobalRational a, const GlobalRational& b) { return a += b; }
  friend GlobalRational operator-(const GlobalRational& a, const GlobalRational& b) {
    return a + b.scaled(FieldTraits<T>::from_int(-1));
  }

  T eval(const T& z) const {
    T s = FieldTraits<T>::from_int(0);
    for (std::size_t i = poly_.size(); i-- > 0;) s = s * z + poly_[i];
    for (const auto& p : parts_) {
      const T inv = FieldTraits<T>::from_int(1) / (z - p.loc);
      T q = FieldTraits<T>::from_int(0);
      for (std::size_t j = p.c.size(); j-- > 0;) q = (q + p.c[j]) * inv;
      s += q;
    }
    return s;
  }

  GlobalRational derive() const {
    GlobalRational r;
    for (std::size_t i = 1; i < poly_.size(); ++i)
      r.poly_.push_back(FieldTraits<T>::from_int(static_cast<long long>(i)) * poly_[i]);
    for (const auto& p : parts_) {
      std::vector<T> c(p.c.size() + 1, FieldTraits<T>::from_int(0));
      for (std::size_t j = 0; j < p.c.size(); ++j)
        c[j + 1] = FieldTraits<T>::from_int(-static_cast<long long>(j + 1)) * p.c[j];
      r.parts_.push_back({p.loc, std::move(c)});
    }
    return r;
  }

  template <class F>
  auto map(F&& fn) const {
    using U = std::decay_t<decltype(fn(std::declval<const T&>()))>;
    GlobalRational<U> r;
    std::vector<U> p;
    for (const auto& x : poly_) p.push_back(fn(x));
    r = GlobalRational<U>::polynomial(std::move(p));
    for (const auto& part : parts_) {
      std::vector<U> c;
      for (const auto& x : part.c) c.push_back(fn(x));
      r.add_part(fn(part.loc), c);
    }
    return r;
  }

 private:
  std::vector<T> poly_;
  std::vector<PolePart<T>> parts_;
};

template <class T>
GlobalRational<T> principal_part_at(const LaurentSeries<T>& f) {
  if (f.center().infinite) throw SeriesError("principal_part_at: center must be finite");
  if (f.denom() != 1) throw SeriesError("principal_part_at: fractional exponents");
  if (f.order() < 0) throw TruncationError("principal_part_at: exponent -1 is beyond truncation");
  std::vector<T> c;
  for (long k = -1; k >= f.low(); --k) c.push_back(f.at(k));
  if (c.empty()) return GlobalRational<T>();
  return GlobalRational<T>::pole(f.center().loc, std::move(c));
}

template <class T>
GlobalRational<T> polynomial_part(const LaurentSeries<T>& f) {
  if (!f.center().infinite) throw SeriesError("polynomial_part: center must be infinity");
  if (f.denom() != 1) throw SeriesError("polynomial_part: fractional exponents");
  if (f.order() <= 0) throw TruncationError("polynomial_part: exponent 0 is beyond truncation");
  std::vector<T> p;
  for (long k = 0; k >= f.low(); --k) p.push_back(f.at(k));
  return GlobalRational<T>::polynomial(std::move(p));
}

// Expansion of R at c, every t-index below `order` (exclusive) determined.
template <class T>
LaurentSeries<T> expand_at(const GlobalRational<T>& R, const Center<T>& c, long order) {
  const T zero = FieldTraits<T>::from_int(0);
  long low = 0;
  if (c.infinite) low = -static_cast<long>(R.poly().size()) + 1;
  for (const auto& p : R.parts())
    if (!c.infinite && FieldTraits<T>::is_zero(p.loc - c.loc)) low = std::min(low, -static_cast<long>(p.c.size()));
  low = std::min(low, order);
  std::vector<T> out(static_cast<std::size_t>(order - low), zero);
  auto put = [&](long k, const T& v) {
    if (k >= low && k < order) out[static_cast<std::size_t>(k - low)] += v;
  };

  if (c.infinite) {
    for (std::size_t i = 0; i < R.poly().size(); ++i) put(-static_cast<long>(i), R.poly()[i]);
    // (z-a)^-j = t^j (1 - a t)^-j = sum_m C(j+m-1, m) a^m t^(j+m)
    for (const auto& p : R.parts()) {
      for (std::size_t jj = 0; jj < p.c.size(); ++jj) {
        const long j = static_cast<long>(jj) + 1;
        T binom = FieldTraits<T>::from_int(1), apow = FieldTraits<T>::from_int(1);
        for (long m = 0; j + m < order; ++m) {
          if (m > 0) {
            binom = binom * FieldTraits<T>::from_rational(Rational(j + m - 1, m));
            apow = apow * p.loc;
          }
          put(j + m, p.c[jj] * binom * apow);
        }
      }
    }
  } else {
    // z^i = (phi + t)^i
    for (std::size_t i = 0; i < R.poly().size(); ++i) {
      T binom = FieldTraits<T>::from_int(1);
      for (std::size_t m = 0; m <= i; ++m) {
        if (m > 0) binom = binom * FieldTraits<T>::from_rational(Rational(static_cast<long>(i - m + 1), static_cast<long>(m)));
        put(static_cast<long>(m), R.poly()[i] * binom * int_pow(c.loc, static_cast<long long>(i - m)));
      }
    }
    for (const auto& p : R.parts()) {
      const T delta = c.loc - p.loc;
      if (FieldTraits<T>::is_zero(delta)) {
        for (std::size_t jj = 0; jj < p.c.size(); ++jj) put(-static_cast<long>(jj) - 1, p.c[jj]);
        continue;
      }
      // (t + delta)^-j = sum_m C(j+m-1, m) (-1)^m delta^(-j-m) t^m
      const T dinv = FieldTraits<T>::from_int(1) / delta;
      for (std::size_t jj = 0; jj < p.c.size(); ++jj) {
        const long j = static_cast<long>(jj) + 1;
        T binom = FieldTraits<T>::from_int(1);
        T dp = int_pow(dinv, j);
        for (long m = 0; m < order; ++m) {
          if (m > 0) {
            binom = binom * FieldTraits<T>::from_rational(Rational(-(j + m - 1), m));
            dp = dp * dinv;
          }
          put(m, p.c[jj] * binom * dp);
        }
      }
    }
  }
  return LaurentSeries<T>(c, 1, low, std::move(out), order);
}

template <class T>
T residue_at(const GlobalRational<T>& R, const Center<T>& c) {
  if (c.infinite) {
    // computed through the expansion rather than from the stored parts
    return residue(expand_at(R, c, 2));
  }
  for (const auto& p : R.parts())
    if (FieldTraits<T>::is_zero(p.loc - c.loc)) return p.c.empty() ? FieldTraits<T>::from_int(0) : p.c[0];
  return FieldTraits<T>::from_int(0);
}

template <class T>
T residue_sum(const GlobalRational<T>& R) {
  T s = residue_at(R, Center<T>::infinity());
  for (const auto& p : R.parts()) s += residue_at(R, Center<T>::at(p.loc));
  return s;
}

}  // namespace wtl
