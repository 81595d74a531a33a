#pragma once

// Open extension: the functions theta~ on the formal space and on H_{0;n},
// their stabilization, and the open WDVV residual.
//
// Everything is a series in the open variable s, stored like any other
// LaurentSeries (t = 1/s at infinity, t = s - phi at a pole), plus at most
// one term coef * log(s - loc).

#include "wtl/stabilize.hpp"
#include "wtl/wdvv.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wtl {

inline constexpr long kDefaultSOrder = 12;  // keep s^{-12} and above

template <class T>
struct OpenLog {
  T coef;
  T loc;
};

template <class T>
struct OpenSeries {
  LaurentSeries<T> series;
  std::optional<OpenLog<T>> log;
};

enum class OpenKind { E, H0, H1, S };

struct OpenIndex {
  OpenKind kind = OpenKind::E;
  int k = 0;
  int p = 0;
  static OpenIndex e(int p) { return {OpenKind::E, 0, p}; }
  static OpenIndex h0(int k, int p) { return {OpenKind::H0, k, p}; }
  static OpenIndex h1(int k) { return {OpenKind::H1, k, 0}; }
  static OpenIndex s(int p) { return {OpenKind::S, 0, p}; }
};

std::string to_string(const OpenIndex& a);

namespace detail {

// t-order that keeps s^{-s_order} at infinity
inline long inf_order(long s_order) { return s_order + 1; }

template <class T>
LaurentSeries<T> negative_part_at_inf(const LaurentSeries<T>& f) {
  // z^{-1}, z^{-2}, ... are t-indices >= 1
  if (f.order() <= 1) return LaurentSeries<T>::unknown(f.center(), f.order());
  std::vector<T> c;
  for (long k = 1; k < f.order(); ++k) c.push_back(k < f.low() ? FieldTraits<T>::from_int(0) : f.at(k));
  return LaurentSeries<T>(f.center(), f.denom(), 1, std::move(c), f.order());
}

template <class T>
LaurentSeries<T> exact_part(const GlobalRational<T>& R, const Center<T>& c) {
  // polynomial (at infinity) or principal part (at its pole): finitely many terms
  LaurentSeries<T> s = expand_at(R, c, 1);
  std::vector<T> coeffs;
  for (long k = s.low(); k < (c.infinite ? 1 : 0); ++k) coeffs.push_back(s.at(k));
  return LaurentSeries<T>(c, 1, s.low(), std::move(coeffs), kExact);
}

}  // namespace detail

// theta~^M on the formal space, truncated at s^{-s_order} where infinite.
template <class T>
OpenSeries<T> theta_tilde_M(const WhithamPoint<T>& pt, const OpenIndex& a, long s_order = kDefaultSOrder) {
  const T inv = FieldTraits<T>::from_rational(Rational(1) / factorial(a.p + 1));
  const T minus_inv = -inv;
  const auto check_k = [&] {
    if (a.k < 1 || a.k > pt.m()) throw std::invalid_argument("theta_tilde_M: pole index out of range");
  };
  switch (a.kind) {
    case OpenKind::S:
    case OpenKind::E: {
      if (a.p < 0) throw std::invalid_argument("theta_tilde_M: negative level");
      LaurentSeries<T> P = truncate(pow_int(pt.lambda0, a.p + 1), detail::inf_order(s_order));
      if (P.order() < detail::inf_order(s_order)) throw TruncationError("theta_tilde_M: lambda0 is too short");
      if (a.kind == OpenKind::S) return {scale(P, inv), std::nullopt};
      return {scale(detail::negative_part_at_inf(P), minus_inv), std::nullopt};
    }
    case OpenKind::H0: {
      check_k();
      if (a.p < 0) throw std::invalid_argument("theta_tilde_M: negative level");
      const auto& L = pt.lambda[static_cast<std::size_t>(a.k - 1)];
      GlobalRational<T> pp = principal_part_at(pow_int(L, a.p + 1)).scaled(minus_inv);
      return {detail::exact_part(pp, L.center()), std::nullopt};
    }
    case OpenKind::H1: {
      check_k();
      if (a.p != 0) throw UnsupportedSector("theta~_{h_{k,1},p} is given only at p = 0");
      const T& phi = pt.phi[static_cast<std::size_t>(a.k - 1)];
      return {LaurentSeries<T>::constant(Center<T>::at(phi), FieldTraits<T>::from_int(0)),
              OpenLog<T>{FieldTraits<T>::from_int(1), phi}};
    }
  }
  throw std::logic_error("theta_tilde_M: bad kind");
}

// theta~^H_{v,0} as a rational function of s plus the log term.
template <class T>
struct OpenFunction {
  GlobalRational<T> rational;
  std::optional<OpenLog<T>> log;
};

template <class T>
OpenFunction<T> theta_tilde_H_function(const HurwitzData<T>& d, const VIndex& v) {
  detail::check_vindex(d, v);
  const int ni = d.ni(v.i);
  if (is_log_index(d, v))
    return {GlobalRational<T>{}, OpenLog<T>{FieldTraits<T>::from_int(ni), d.pole(v.i).loc}};
  const int e = ni - v.j;
  const T c = FieldTraits<T>::from_rational(Rational(ni, e));
  LaurentSeries<T> P = pow_int(local_root(d, v.i, e + 2), e);
  if (v.i == 0) return {polynomial_part(P).scaled(c), std::nullopt};
  return {principal_part_at(P).scaled(T(-c)), std::nullopt};
}

template <class T>
GlobalRational<T> theta_tilde_H_s(const HurwitzData<T>& d) {
  return d.lambda();
}

template <class T>
OpenSeries<T> theta_tilde_H(const HurwitzData<T>& d, const VIndex& v) {
  OpenFunction<T> f = theta_tilde_H_function(d, v);
  if (f.log) return {LaurentSeries<T>::constant(d.center(v.i), FieldTraits<T>::from_int(0)), f.log};
  return {detail::exact_part(f.rational, d.center(v.i)), std::nullopt};
}

enum class OpenFamily { Infinity, Pole, Log };
std::string to_string(OpenFamily f);

template <class T>
struct OpenRow {
  OpenFamily family;
  HatIndex index;  // p = 0 for the log family
  bool threshold_ok = false;
  OpenSeries<T> lhs, rhs;
  Real max_coeff_dev;  // relative, over the common known range
  long s_order = kDefaultSOrder;
};

namespace detail {

template <class T>
Real open_deviation(const OpenSeries<T>& a, const OpenSeries<T>& b) {
  Real worst = 0;
  if (a.log.has_value() != b.log.has_value()) return Real(1);
  if (a.log) {
    worst = std::max(worst, FieldTraits<T>::magnitude(a.log->coef - b.log->coef));
    worst = std::max(worst, FieldTraits<T>::magnitude(a.log->loc - b.log->loc));
  }
  const auto &ca = a.series.center(), &cb = b.series.center();
  if (ca.infinite != cb.infinite) return Real(1);
  // centers are compared like coefficients so float points are not rejected outright
  if (!ca.infinite) worst = std::max(worst, FieldTraits<T>::magnitude(ca.loc - cb.loc));
  const long lo = std::min(a.series.low(), b.series.low());
  long hi = std::min(a.series.order(), b.series.order());
  if (is_exact_order(hi)) hi = std::max(a.series.high(), b.series.high());
  const auto get = [](const LaurentSeries<T>& s, long k) {
    return k < s.low() ? FieldTraits<T>::from_int(0) : s.at(k);
  };
  for (long k = lo; k < hi; ++k) {
    const T x = get(a.series, k), y = get(b.series, k);
    const Real sc = std::max(Real(1), FieldTraits<T>::magnitude(x));
    worst = std::max(worst, Real(FieldTraits<T>::magnitude(x - y) / sc));
  }
  return worst;
}

template <class T>
OpenSeries<T> scaled(OpenSeries<T> s, const T& c) {
  s.series = scale(s.series, c);
  if (s.log) s.log->coef = c * s.log->coef;
  return s;
}

}  // namespace detail

// Rows for every hat index with p <= pmax:
//   (1/n0) th~H_{v_{0,n0-p}} vs (p-1)! (th~M_{s,p-1} + th~M_{e,p-1}),  n0 >= p
//   (1/nk) th~H_{v_{k,nk-p}} vs (p-1)! th~M_{h_{k,0},p-1},             nk >= p
//   (1/ni) th~H_{v_{i,ni}}   vs th~M_{h_{i,1},0}
template <class T>
std::vector<OpenRow<T>> open_stabilization_report(const HurwitzData<T>& d, int pmax,
                                                  long s_order = kDefaultSOrder) {
  const FlatCoordsH<T> v = flat_coords(d);
  const WhithamPoint<T> formal = formal_point(v, static_cast<std::size_t>(s_order + pmax + 4));
  std::vector<OpenRow<T>> rows;
  for (const auto& h : hat_indices(d, pmax)) {
    OpenRow<T> row;
    row.index = h;
    row.s_order = s_order;
    const VIndex vi = *to_vindex(d, h);
    const T inv_n = FieldTraits<T>::from_rational(Rational(1, d.ni(h.i)));
    row.lhs = detail::scaled(theta_tilde_H(d, vi), inv_n);
    if (h.i >= 1 && h.p == 0) {
      row.family = OpenFamily::Log;
      row.threshold_ok = true;
      row.rhs = theta_tilde_M(formal, OpenIndex::h1(h.i), s_order);
    } else {
      const T f = FieldTraits<T>::from_rational(factorial(h.p - 1));
      if (h.i == 0) {
        row.family = OpenFamily::Infinity;
        row.threshold_ok = d.ni(0) >= h.p;
        OpenSeries<T> s = theta_tilde_M(formal, OpenIndex::s(h.p - 1), s_order);
        OpenSeries<T> e = theta_tilde_M(formal, OpenIndex::e(h.p - 1), s_order);
        row.rhs = {scale(s.series + e.series, f), std::nullopt};
      } else {
        row.family = OpenFamily::Pole;
        row.threshold_ok = d.ni(h.i) >= h.p;
        row.rhs = detail::scaled(theta_tilde_M(formal, OpenIndex::h0(h.i, h.p - 1), s_order), f);
      }
    }
    row.max_coeff_dev = detail::open_deviation(row.lhs, row.rhs);
    rows.push_back(std::move(row));
  }
  return rows;
}

// Second derivatives of F^o at (v, s); flat indices in flat_indices order,
// the open direction last.
template <class T>
struct OpenHessian {
  Matrix<T> vv;           // d^2 F^o / dv_a dv_b
  std::vector<T> vs;      // d^2 F^o / dv_a ds from d/ds theta~_a
  std::vector<T> sv;      // the same from d/dv_a lambda(s)
  T ss;                   // lambda'(s)
};

template <class T>
OpenHessian<T> open_hessian(const HurwitzData<T>& d, const T& s) {
  const auto idx = flat_indices(d);
  const std::size_t N = idx.size();
  const HurwitzData<Jet<T>> J = jet_data(d);
  const Jet<T> sj(s);
  OpenHessian<T> h;
  h.vv.assign(N, std::vector<T>(N));
  for (std::size_t a = 0; a < N; ++a) {
    OpenFunction<Jet<T>> fj = theta_tilde_H_function(J, idx[a]);
    OpenFunction<T> f = theta_tilde_H_function(d, idx[a]);
    const Jet<T> val = fj.rational.eval(sj);
    for (std::size_t b = 0; b < N; ++b) {
      h.vv[a][b] = val.part(b);
      // d log(s - loc) = -d loc / (s - loc)
      if (fj.log) h.vv[a][b] -= fj.log->coef.value() * fj.log->loc.part(b) / (s - fj.log->loc.value());
    }
    T ds = f.rational.derive().eval(s);
    if (f.log) ds += f.log->coef / (s - f.log->loc);
    h.vs.push_back(ds);
    h.sv.push_back(dlambda_dv(d, idx[a]).eval(s));
  }
  h.ss = d.lambda().derive().eval(s);
  return h;
}

struct OpenWdvvResult {
  Real first;      // max residual of the first equation
  Real second;     // max residual of the second equation
  Real mixed;      // max |d_s th~_a - d_a lambda(s)|
  Real hessian_sym;  // max |d_b th~_a - d_a th~_b|
};

template <class T>
OpenWdvvResult open_wdvv_residual(const HurwitzData<T>& d, const T& s) {
  const Tensor3<T> c = structure_constants(d);
  const Matrix<T> eta_inv = inverse(metric_matrix(d));
  const OpenHessian<T> h = open_hessian(d, s);
  const std::size_t N = c.dim;
  // c_{ab}^f
  Tensor3<T> up{N, std::vector<T>(N * N * N, FieldTraits<T>::from_int(0))};
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      for (std::size_t f = 0; f < N; ++f) {
        T x = FieldTraits<T>::from_int(0);
        for (std::size_t g = 0; g < N; ++g) x += c(a, b, g) * eta_inv[g][f];
        up(a, b, f) = x;
      }
  OpenWdvvResult r{Real(0), Real(0), Real(0), Real(0)};
  for (std::size_t a = 0; a < N; ++a) {
    r.mixed = std::max(r.mixed, FieldTraits<T>::magnitude(h.vs[a] - h.sv[a]));
    for (std::size_t b = 0; b < N; ++b) {
      r.hessian_sym = std::max(r.hessian_sym, FieldTraits<T>::magnitude(h.vv[a][b] - h.vv[b][a]));
      T lhs2 = h.vv[a][b] * h.ss - h.vs[a] * h.vs[b];
      for (std::size_t f = 0; f < N; ++f) lhs2 += up(a, b, f) * h.vs[f];
      r.second = std::max(r.second, FieldTraits<T>::magnitude(lhs2));
      for (std::size_t g = 0; g < N; ++g) {
        T x = h.vv[a][b] * h.vs[g] - h.vv[b][g] * h.vs[a];
        for (std::size_t f = 0; f < N; ++f) x += up(a, b, f) * h.vv[f][g] - up(b, g, f) * h.vv[f][a];
        r.first = std::max(r.first, FieldTraits<T>::magnitude(x));
      }
    }
  }
  return r;
}

}  // namespace wtl
