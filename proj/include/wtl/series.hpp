#pragma once

// Truncated Laurent / Puiseux series at a finite point or at infinity.
//
// Storage convention.  A series is kept in the local uniformizer t of its
// center: t = z - phi at a finite center, t = 1/z at infinity.  Entry i of
// coeffs() is the coefficient of t^((low + i) / denom).  Every exponent
// >= order / denom is unknown.  At infinity "higher t-order" therefore means
// lower powers of z: z + 3 z^-1 is stored as low = -1, coeffs = {1, 0, 3}.
// coeff() and residue() take and report exponents of z (resp. z - phi), so
// callers never see the inversion.
//
// An order of kExact marks a series that is known exactly; entries past the
// stored coefficients are then zero.  Anything else is a truncation bound and
// asking for a coefficient at or past it throws TruncationError.

#include "wtl/field.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace wtl {

class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr long kExact = 1L << 40;
inline bool is_exact_order(long o) { return o >= kExact / 2; }
inline long clamp_order(long o) { return is_exact_order(o) ? kExact : o; }

template <class T>
struct Center {
  bool infinite = true;
  T loc{};

  static Center infinity() { return Center{true, FieldTraits<T>::from_int(0)}; }
  static Center at(const T& p) { return Center{false, p}; }
};

template <class T>
bool same_center(const Center<T>& a, const Center<T>& b) {
  if (a.infinite || b.infinite) return a.infinite == b.infinite;
  return FieldTraits<T>::is_zero(a.loc - b.loc);
}

template <class T>
class LaurentSeries {
 public:
  LaurentSeries() : center_(Center<T>::infinity()), order_(0) {}

  LaurentSeries(Center<T> c, int denom, long low, std::vector<T> coeffs, long order)
      : center_(std::move(c)), denom_(denom), low_(low), coeffs_(std::move(coeffs)),
        order_(clamp_order(order)) {
    if (denom_ < 1) throw SeriesError("series denominator must be positive");
    if (!exact()) {
      if (low_ > order_) {
        low_ = order_;
        coeffs_.clear();
      }
      if (static_cast<long>(coeffs_.size()) != order_ - low_)
        throw SeriesError("series: coefficient count " + std::to_string(coeffs_.size()) +
                          " does not match order - low = " + std::to_string(order_ - low_));
    }
  }

  static LaurentSeries exact_terms(Center<T> c, long low, std::vector<T> coeffs, int denom = 1) {
    return LaurentSeries(std::move(c), denom, low, std::move(coeffs), kExact);
  }
  static LaurentSeries constant(Center<T> c, const T& v) { return exact_terms(std::move(c), 0, {v}); }
  // O(t^(order/denom)) with nothing known below it.
  static LaurentSeries unknown(Center<T> c, long order, int denom = 1) {
    return LaurentSeries(std::move(c), denom, order, {}, order);
  }

  const Center<T>& center() const { return center_; }
  int denom() const { return denom_; }
  long low() const { return low_; }
  long order() const { return order_; }
  bool exact() const { return is_exact_order(order_); }
  const std::vector<T>& coeffs() const { return coeffs_; }

  // one past the last index that may be nonzero
  long high() const { return exact() ? low_ + static_cast<long>(coeffs_.size()) : order_; }

  // coefficient of t^(k/denom)
  T at(long k) const {
    if (k >= order_)
      throw TruncationError("coefficient t^(" + std::to_string(k) + "/" + std::to_string(denom_) +
                            ") is beyond the truncation order " + std::to_string(order_));
    if (k < low_ || k >= low_ + static_cast<long>(coeffs_.size())) return FieldTraits<T>::from_int(0);
    return coeffs_[static_cast<std::size_t>(k - low_)];
  }

  // first index carrying a nonzero coefficient, if any is known
  std::optional<long> valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!FieldTraits<T>::is_zero(coeffs_[i])) return low_ + static_cast<long>(i);
    return std::nullopt;
  }

  template <class F>
  auto map(F&& fn) const {
    using U = std::decay_t<decltype(fn(std::declval<const T&>()))>;
    Center<U> c = center_.infinite ? Center<U>::infinity() : Center<U>::at(fn(center_.loc));
    std::vector<U> out;
    out.reserve(coeffs_.size());
    for (const auto& x : coeffs_) out.push_back(fn(x));
    return LaurentSeries<U>(c, denom_, low_, std::move(out), order_);
  }

 private:
  Center<T> center_;
  int denom_ = 1;
  long low_ = 0;
  std::vector<T> coeffs_;
  long order_ = 0;
};

namespace detail {

inline long ceil_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

inline long mul_order(long a, long k) { return is_exact_order(a) ? kExact : a * k; }

template <class T>
void require_same_center(const LaurentSeries<T>& f, const LaurentSeries<T>& g, const char* op) {
  if (!same_center(f.center(), g.center()))
    throw SeriesError(std::string(op) + ": center mismatch");
}

}  // namespace detail

// Re-express f with exponent denominator D (a multiple of f.denom()).
template <class T>
LaurentSeries<T> with_denom(const LaurentSeries<T>& f, int D) {
  if (D == f.denom()) return f;
  if (D % f.denom() != 0) throw SeriesError("with_denom: not a multiple");
  const long k = D / f.denom();
  std::vector<T> out;
  const long n = static_cast<long>(f.coeffs().size());
  if (n > 0) out.assign(static_cast<std::size_t>((n - 1) * k + 1), FieldTraits<T>::from_int(0));
  for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i * k)] = f.coeffs()[static_cast<std::size_t>(i)];
  if (!f.exact()) out.resize(static_cast<std::size_t>(n * k), FieldTraits<T>::from_int(0));
  return LaurentSeries<T>(f.center(), D, f.low() * k, std::move(out), detail::mul_order(f.order(), k));
}

// Reduce the exponent denominator as far as the known coefficients allow.
template <class T>
LaurentSeries<T> simplify_denom(const LaurentSeries<T>& f) {
  if (f.denom() == 1) return f;
  long g = f.denom();
  if (!f.exact()) g = std::gcd(g, f.order());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    if (!FieldTraits<T>::is_zero(f.coeffs()[i])) g = std::gcd(g, f.low() + static_cast<long>(i));
  if (g <= 1) return f;
  const long new_low = detail::ceil_div(f.low(), g);
  const long hi = f.exact() ? detail::ceil_div(f.high(), g) : f.order() / g;
  std::vector<T> out;
  for (long k = new_low; k < hi; ++k) out.push_back(f.at(k * g));
  return LaurentSeries<T>(f.center(), static_cast<int>(f.denom() / g), new_low, std::move(out),
                          f.exact() ? kExact : f.order() / g);
}

template <class T>
LaurentSeries<T> truncate(const LaurentSeries<T>& f, long order) {
  if (order >= f.order()) return f;
  std::vector<T> out;
  const long lo = std::min(f.low(), order);
  for (long k = lo; k < order; ++k) out.push_back(f.at(k));
  return LaurentSeries<T>(f.center(), f.denom(), lo, std::move(out), order);
}

// multiply by t^(k/denom)
template <class T>
LaurentSeries<T> shift(const LaurentSeries<T>& f, long k) {
  return LaurentSeries<T>(f.center(), f.denom(), f.low() + k, f.coeffs(),
                          f.exact() ? kExact : f.order() + k);
}

namespace detail {

template <class T>
LaurentSeries<T> add_impl(const LaurentSeries<T>& a, const LaurentSeries<T>& b, bool subtract) {
  require_same_center(a, b, subtract ? "sub" : "add");
  const int D = std::lcm(a.denom(), b.denom());
  LaurentSeries<T> f = with_denom(a, D), g = with_denom(b, D);
  const long order = std::min(f.order(), g.order());
  const long low = std::min({f.low(), g.low(), order});
  const long hi = is_exact_order(order) ? std::max(f.high(), g.high()) : order;
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(std::max(0L, hi - low)));
  for (long k = low; k < hi; ++k) {
    T fk = k < f.high() ? f.at(k) : FieldTraits<T>::from_int(0);
    T gk = k < g.high() ? g.at(k) : FieldTraits<T>::from_int(0);
    out.push_back(subtract ? T(fk - gk) : T(fk + gk));
  }
  return LaurentSeries<T>(f.center(), D, low, std::move(out), order);
}

}  // namespace detail

template <class T>
LaurentSeries<T> operator+(const LaurentSeries<T>& a, const LaurentSeries<T>& b) {
  return detail::add_impl(a, b, false);
}
template <class T>
LaurentSeries<T> operator-(const LaurentSeries<T>& a, const LaurentSeries<T>& b) {
  return detail::add_impl(a, b, true);
}
template <class T>
LaurentSeries<T> operator-(const LaurentSeries<T>& a) {
  return a.map([](const T& x) { return T(-x); });
}

template <class T>
LaurentSeries<T> scale(const LaurentSeries<T>& f, const T& c) {
  std::vector<T> out;
  out.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) out.push_back(c * x);
  return LaurentSeries<T>(f.center(), f.denom(), f.low(), std::move(out), f.order());
}

template <class T>
LaurentSeries<T> add_constant(const LaurentSeries<T>& f, const T& c) {
  return f + LaurentSeries<T>::constant(f.center(), c);
}

// Cauchy product; the order is the tightest bound the operands support.
template <class T>
LaurentSeries<T> mul(const LaurentSeries<T>& a, const LaurentSeries<T>& b) {
  detail::require_same_center(a, b, "mul");
  const int D = std::lcm(a.denom(), b.denom());
  LaurentSeries<T> f = with_denom(a, D), g = with_denom(b, D);
  const long low = f.low() + g.low();
  const long order = clamp_order(std::min(f.low() + g.order(), g.low() + f.order()));
  const long hi = is_exact_order(order) ? f.high() + g.high() - 1 : order;
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(std::max(0L, hi - low)));
  const auto& fc = f.coeffs();
  const auto& gc = g.coeffs();
  for (long k = low; k < hi; ++k) {
    T s = FieldTraits<T>::from_int(0);
    const long n = k - low;  // index sum
    const long i0 = std::max(0L, n - static_cast<long>(gc.size()) + 1);
    const long i1 = std::min(n, static_cast<long>(fc.size()) - 1);
    for (long i = i0; i <= i1; ++i) s += fc[static_cast<std::size_t>(i)] * gc[static_cast<std::size_t>(n - i)];
    out.push_back(s);
  }
  return LaurentSeries<T>(f.center(), D, std::min(low, order), std::move(out), order);
}

template <class T>
LaurentSeries<T> operator*(const LaurentSeries<T>& a, const LaurentSeries<T>& b) {
  return mul(a, b);
}

namespace detail {

// number of relative terms available past the valuation v
template <class T>
long relative_terms(const LaurentSeries<T>& f, long v, std::size_t max_terms, const char* op) {
  if (!f.exact()) {
    long rel = f.order() - v;
    if (max_terms > 0) rel = std::min(rel, static_cast<long>(max_terms));
    return rel;
  }
  if (max_terms == 0)
    throw SeriesError(std::string(op) + ": exact operand yields an infinite series; pass max_terms");
  return static_cast<long>(max_terms);
}

template <class T>
long leading(const LaurentSeries<T>& f, const char* op) {
  auto v = f.valuation();
  if (!v) throw SeriesError(std::string(op) + ": no nonzero coefficient below the truncation order");
  if (!FieldTraits<T>::invertible(f.at(*v)))
    throw SeriesError(std::string(op) + ": leading coefficient is not invertible");
  return *v;
}

template <class T>
bool is_monomial(const LaurentSeries<T>& f, long v) {
  if (!f.exact()) return false;
  for (long k = v + 1; k < f.high(); ++k)
    if (!FieldTraits<T>::is_zero(f.at(k))) return false;
  return true;
}

}  // namespace detail

// g with f * g = 1.  max_terms caps the output length (required when f is
// exact but not a monomial).
template <class T>
LaurentSeries<T> invert(const LaurentSeries<T>& f, std::size_t max_terms = 0) {
  const long v = detail::leading(f, "invert");
  const T c = f.at(v);
  const T ci = FieldTraits<T>::from_int(1) / c;
  if (detail::is_monomial(f, v)) return LaurentSeries<T>::exact_terms(f.center(), -v, {ci}, f.denom());
  const long n = detail::relative_terms(f, v, max_terms, "invert");
  std::vector<T> g;
  g.reserve(static_cast<std::size_t>(n));
  for (long k = 0; k < n; ++k) {
    if (k == 0) {
      g.push_back(ci);
      continue;
    }
    T s = FieldTraits<T>::from_int(0);
    for (long i = 1; i <= k; ++i) {
      const long idx = v + i;
      if (idx >= f.high()) break;
      s += f.at(idx) * g[static_cast<std::size_t>(k - i)];
    }
    g.push_back(-(s * ci));
  }
  return LaurentSeries<T>(f.center(), f.denom(), -v, std::move(g), -v + n);
}

template <class T>
LaurentSeries<T> pow_int(const LaurentSeries<T>& f, long n, std::size_t max_terms = 0) {
  if (n < 0) return pow_int(invert(f, max_terms), -n, max_terms);
  LaurentSeries<T> r = LaurentSeries<T>::constant(f.center(), FieldTraits<T>::from_int(1));
  if (n == 0) return r;
  LaurentSeries<T> b = f;
  bool first = true;
  while (n > 0) {
    if (n & 1) {
      r = first ? b : mul(r, b);
      first = false;
    }
    n >>= 1;
    if (n > 0) b = mul(b, b);
  }
  return r;
}

// f^r for rational r, f = c t^k (1 + h).  The root c^(1/q) of the leading
// coefficient (r = p/q in lowest terms) is taken from lead_root when given,
// otherwise from the backend; exact backends fail when it is irrational.
template <class T>
LaurentSeries<T> pow_rational(const LaurentSeries<T>& f, const Rational& r,
                              const std::optional<std::type_identity_t<T>>& lead_root = std::nullopt,
                              std::size_t max_terms = 0) {
  const long p = numerator(r).convert_to<long>();
  const long q = denominator(r).convert_to<long>();
  if (q == 1 && !lead_root) return pow_int(f, p, max_terms);
  const long v = detail::leading(f, "pow_rational");
  const T c = f.at(v);
  std::optional<T> root = lead_root ? lead_root : FieldTraits<T>::root(c, static_cast<int>(q));
  if (!root)
    throw BackendError("pow_rational: leading coefficient has no " + std::to_string(q) +
                       "-th root in this backend; supply one or use the float backend");
  const T cr = int_pow(*root, p);
  const long D = static_cast<long>(f.denom()) * q;
  const long low = p * v;
  if (detail::is_monomial(f, v))
    return simplify_denom(LaurentSeries<T>::exact_terms(f.center(), low, {cr}, static_cast<int>(D)));

  const long n = detail::relative_terms(f, v, max_terms, "pow_rational");
  const T ci = FieldTraits<T>::from_int(1) / c;
  std::vector<T> h(static_cast<std::size_t>(n), FieldTraits<T>::from_int(0));
  for (long i = 1; i < n && v + i < f.high(); ++i) h[static_cast<std::size_t>(i)] = f.at(v + i) * ci;
  const T rr = FieldTraits<T>::from_rational(r);
  const T one = FieldTraits<T>::from_int(1);
  std::vector<T> w;
  w.reserve(static_cast<std::size_t>(n));
  w.push_back(one);
  // Miller's recurrence for (1 + h)^r
  for (long k = 1; k < n; ++k) {
    T s = FieldTraits<T>::from_int(0);
    for (long i = 1; i <= k; ++i) {
      const auto& hi = h[static_cast<std::size_t>(i)];
      if (FieldTraits<T>::is_zero(hi)) continue;
      s += ((rr + one) * FieldTraits<T>::from_int(i) - FieldTraits<T>::from_int(k)) * hi *
           w[static_cast<std::size_t>(k - i)];
    }
    w.push_back(s / FieldTraits<T>::from_int(k));
  }
  std::vector<T> out(static_cast<std::size_t>(n * q), FieldTraits<T>::from_int(0));
  for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i * q)] = cr * w[static_cast<std::size_t>(i)];
  return simplify_denom(LaurentSeries<T>(f.center(), static_cast<int>(D), low, std::move(out), low + n * q));
}

// d/dz, term by term in the local variable.
template <class T>
LaurentSeries<T> derive(const LaurentSeries<T>& f) {
  const long d = f.denom();
  std::vector<T> out;
  out.reserve(f.coeffs().size());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const long k = f.low() + static_cast<long>(i);
    // finite: c t^(k/d) -> (k/d) c t^(k/d - 1); infinity: c z^(-k/d) -> -(k/d) c t^(k/d + 1)
    T e = FieldTraits<T>::from_rational(Rational(k, d));
    out.push_back(f.center().infinite ? T(-(e * f.coeffs()[i])) : T(e * f.coeffs()[i]));
  }
  const long s = f.center().infinite ? d : -d;
  return LaurentSeries<T>(f.center(), f.denom(), f.low() + s, std::move(out),
                          f.exact() ? kExact : f.order() + s);
}

// Coefficient of z^e (finite center: (z - phi)^e).
template <class T>
T coeff(const LaurentSeries<T>& f, const Rational& e) {
  const Rational te = f.center().infinite ? Rational(-e) : e;
  const Rational k = te * f.denom();
  if (k >= f.order())
    throw TruncationError("coefficient of exponent " + e.str() + " is beyond truncation");
  if (denominator(k) != 1) return FieldTraits<T>::from_int(0);
  return f.at(numerator(k).convert_to<long>());
}

// Res f dz.  At infinity this is MINUS the coefficient of z^-1.
template <class T>
T residue(const LaurentSeries<T>& f) {
  const long d = f.denom();
  try {
    if (f.center().infinite) return -f.at(d);
    return f.at(-d);
  } catch (const TruncationError&) {
    throw TruncationError("residue: truncation order too short to determine the z^-1 coefficient");
  }
}

namespace detail {

// Power series F = F1 t + F2 t^2 + ... (F1 invertible) -> G with F(G(v)) = v,
// by Lagrange inversion: [v^n] G = (1/n) [t^(n-1)] (t / F)^n.
template <class T>
LaurentSeries<T> revert_power_series(const LaurentSeries<T>& F, std::size_t max_terms) {
  auto v = F.valuation();
  if (!v || *v != 1 || F.denom() != 1) throw SeriesError("revert: series is not of near-identity shape");
  if (!FieldTraits<T>::invertible(F.at(1))) throw SeriesError("revert: linear coefficient not invertible");
  long K = F.order();
  if (F.exact()) {
    if (max_terms == 0) throw SeriesError("revert: exact input needs max_terms");
    K = static_cast<long>(max_terms) + 1;
  }
  // t / F, known through t^(K-2)
  LaurentSeries<T> Fdt = truncate(shift(F, -1), K - 1);
  if (Fdt.exact()) Fdt = truncate(Fdt, K - 1);
  LaurentSeries<T> phi = invert(Fdt, static_cast<std::size_t>(std::max(1L, K - 1)));
  phi = truncate(phi, K - 1);
  std::vector<T> g;
  LaurentSeries<T> pw = LaurentSeries<T>::constant(F.center(), FieldTraits<T>::from_int(1));
  for (long n = 1; n < K; ++n) {
    pw = truncate(mul(pw, phi), K - 1);
    g.push_back(pw.at(n - 1) / FieldTraits<T>::from_int(n));
  }
  return LaurentSeries<T>(Center<T>::infinity(), 1, 1, std::move(g), K);
}

template <class T>
LaurentSeries<T> relocate(const LaurentSeries<T>& f, const Center<T>& c) {
  return LaurentSeries<T>(c, f.denom(), f.low(), f.coeffs(), f.order());
}

}  // namespace detail

// Compositional inverse.  Supported shapes (all integer exponents):
//   at infinity, f = c z + O(1)          -> z(f) at infinity in f
//   at phi,      f = c (z-phi)^-1 + O(1) -> z(f) = phi + ... at infinity in f
//   at infinity, f = c0 + c1 z^-1 + ...  -> z(f) at the finite point c0
// Roots of Puiseux series must be taken with pow_rational first.
template <class T>
LaurentSeries<T> revert(const LaurentSeries<T>& f, std::size_t max_terms = 0) {
  if (f.denom() != 1) throw SeriesError("revert: take an integral root with pow_rational first");
  auto v = f.valuation();
  if (!v) throw SeriesError("revert: series has no known nonzero term");
  const auto inf = Center<T>::infinity();
  if (f.center().infinite && *v == -1) {
    LaurentSeries<T> F = detail::relocate(invert(f, max_terms), inf);
    LaurentSeries<T> G = detail::revert_power_series(F, max_terms);
    return invert(G, max_terms);
  }
  if (!f.center().infinite && *v == -1) {
    LaurentSeries<T> F = detail::relocate(invert(f, max_terms), inf);
    LaurentSeries<T> G = detail::revert_power_series(F, max_terms);
    return add_constant(G, f.center().loc);
  }
  if (f.center().infinite && (*v == 0 || *v == 1)) {
    // v == 1: the image point is 0
    const T c0 = *v == 0 ? f.at(0) : FieldTraits<T>::from_int(0);
    LaurentSeries<T> G = add_constant(f, T(-c0));
    LaurentSeries<T> H = detail::revert_power_series(G, max_terms);
    return detail::relocate(invert(H, max_terms), Center<T>::at(c0));
  }
  throw SeriesError("revert: leading shape is not invertible");
}

// f(g(w)): g is a series in its own variable whose values tend to f's center.
template <class T>
LaurentSeries<T> compose(const LaurentSeries<T>& f, const LaurentSeries<T>& g, std::size_t max_terms = 0) {
  LaurentSeries<T> s;
  bool polynomial_case = false;
  if (f.center().infinite) {
    auto v = g.valuation();
    if (!v || *v >= 0) throw SeriesError("compose: inner series must tend to infinity");
    s = invert(g, max_terms);
  } else {
    s = add_constant(g, T(-f.center().loc));
    auto v = s.valuation();
    if (!v || *v <= 0) {
      const bool poly = f.exact() && f.denom() == 1 && f.low() >= 0;
      if (!poly) throw SeriesError("compose: inner series does not tend to the outer center");
      polynomial_case = true;
    }
  }
  if (f.denom() > 1) s = pow_rational(s, Rational(1, f.denom()), std::nullopt, max_terms);

  long tail = kExact;
  if (!f.exact()) {
    const long vs = *s.valuation();
    tail = f.order() * vs;
  }
  auto cap = [&](const LaurentSeries<T>& x) { return is_exact_order(tail) ? x : truncate(x, tail); };

  const long k0 = f.low();
  const long k1 = f.high();
  LaurentSeries<T> acc = is_exact_order(tail) ? LaurentSeries<T>::exact_terms(s.center(), 0, {}, s.denom())
                                              : LaurentSeries<T>::unknown(s.center(), tail, s.denom());
  if (k0 >= k1) return acc;
  LaurentSeries<T> pw = cap(pow_int(s, k0, max_terms));
  for (long k = k0; k < k1; ++k) {
    const T c = f.at(k);
    if (!FieldTraits<T>::is_zero(c)) acc = acc + scale(pw, c);
    if (k + 1 < k1) pw = cap(mul(pw, s));
  }
  (void)polynomial_case;
  return acc;
}

// Coefficientwise difference over the common known range, as a magnitude.
template <class T>
Real max_known_difference(const LaurentSeries<T>& a, const LaurentSeries<T>& b) {
  LaurentSeries<T> d = a - b;
  Real m = 0;
  for (const auto& c : d.coeffs()) m = std::max(m, FieldTraits<T>::magnitude(c));
  return m;
}

}  // namespace wtl
