#pragma once

// Comparison of rescaled Hurwitz entries with the formal tau-structure.
//
// Hat index (i, p) stands for vhat_{i,p} = n_i v_{i, n_i - p}; for i >= 1 and
// p = 0 it is the log coordinate v_{i,n_i}.  On the formal side
//   (0, p)      -> e,       level p-1, factor (p-1)!
//   (k, p >= 1) -> h0 k,    level p-1, factor (p-1)!
//   (k, 0)      -> h1 k,    factor 1
// and the formal point is built from u = v, zero beyond the profile.

#include "wtl/hurwitz.hpp"
#include "wtl/whitham.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wtl {

struct HatIndex {
  int i = 0;
  int p = 0;
  friend bool operator==(const HatIndex&, const HatIndex&) = default;
};

std::string to_string(const HatIndex& h);

enum class StabFamily { EE, HHSame, HHCross, EH, ELog, HLogCross, HLogSame, LogLog };
std::string to_string(StabFamily f);

template <class T>
struct StabRow {
  HatIndex a, b;
  StabFamily family;
  bool threshold_ok = false;
  OmegaValue<T> lhs, rhs;
  Real deviation;  // |lhs - rhs| / max(1, |lhs|)
};

template <class T>
std::optional<VIndex> to_vindex(const HurwitzData<T>& d, const HatIndex& h) {
  if (h.i < 0 || h.i > d.m() || h.p < 0) return std::nullopt;
  const int n = d.ni(h.i);
  if (h.i == 0) {
    if (h.p < 1 || h.p > n - 1) return std::nullopt;
    return VIndex{0, n - h.p};
  }
  if (h.p > n) return std::nullopt;
  return VIndex{h.i, h.p == 0 ? n : n - h.p};
}

inline SectorIndex to_sector(const HatIndex& h) {
  if (h.i == 0) return SectorIndex::e(h.p - 1);
  if (h.p == 0) return SectorIndex::h1(h.i);
  return SectorIndex::h0(h.i, h.p - 1);
}

inline StabFamily family_of(const HatIndex& a, const HatIndex& b) {
  const bool la = a.i >= 1 && a.p == 0, lb = b.i >= 1 && b.p == 0;
  if (la && lb) return StabFamily::LogLog;
  if (la || lb) {
    const HatIndex& s = la ? b : a;
    const HatIndex& l = la ? a : b;
    if (s.i == 0) return StabFamily::ELog;
    return s.i == l.i ? StabFamily::HLogSame : StabFamily::HLogCross;
  }
  if (a.i == 0 && b.i == 0) return StabFamily::EE;
  if (a.i == 0 || b.i == 0) return StabFamily::EH;
  return a.i == b.i ? StabFamily::HHSame : StabFamily::HHCross;
}

// The sufficient condition for the rescaled entry to equal its formal limit.
inline bool threshold_holds(const std::vector<int>& n, const HatIndex& a, const HatIndex& b) {
  const auto N = [&](int i) { return n.at(static_cast<std::size_t>(i)); };
  switch (family_of(a, b)) {
    case StabFamily::EE:
      return N(0) >= a.p + b.p;
    case StabFamily::HHSame:
      return N(a.i) >= a.p + b.p + 1;
    case StabFamily::HHCross:
      return N(a.i) >= a.p && N(b.i) >= b.p;
    case StabFamily::EH: {
      const HatIndex& e = a.i == 0 ? a : b;
      const HatIndex& h = a.i == 0 ? b : a;
      return N(0) >= e.p && N(h.i) >= h.p;
    }
    case StabFamily::ELog: {
      const HatIndex& e = a.i == 0 ? a : b;
      return N(0) >= e.p + 1;
    }
    case StabFamily::HLogCross: {
      const HatIndex& s = a.p == 0 ? b : a;
      return N(s.i) >= s.p;
    }
    case StabFamily::HLogSame: {
      const HatIndex& s = a.p == 0 ? b : a;
      return N(s.i) >= s.p + 1;
    }
    case StabFamily::LogLog:
      return true;
  }
  return false;
}

// Formal point with u = v and zeros past the profile, `len` u's per series.
template <class T>
WhithamPoint<T> formal_point(const FlatCoordsH<T>& v, std::size_t len) {
  UCoords<T> u = v;
  u.u0.resize(std::max(len, u.u0.size()), FieldTraits<T>::from_int(0));
  for (auto& row : u.uk) row.resize(std::max(len + 1, row.size()), FieldTraits<T>::from_int(0));
  return point_of_u(u);
}

template <class T>
Real relative_deviation(const OmegaValue<T>& lhs, const OmegaValue<T>& rhs, const Real& tol) {
  Real scale = std::max(Real(1), FieldTraits<T>::magnitude(lhs.scalar()));
  return OmegaValue<T>::distance(lhs, rhs, tol) / scale;
}

template <class T>
StabRow<T> stab_entry(const HurwitzData<T>& d, const WhithamPoint<T>& formal, const HatIndex& a, const HatIndex& b,
                      const Real& log_tol = Real(0)) {
  auto va = to_vindex(d, a), vb = to_vindex(d, b);
  if (!va || !vb) throw std::invalid_argument("stab_entry: hat index outside the profile");
  StabRow<T> row;
  row.a = a;
  row.b = b;
  row.family = family_of(a, b);
  row.threshold_ok = threshold_holds(d.n, a, b);
  const T scale = FieldTraits<T>::from_rational(Rational(1, static_cast<long>(d.ni(a.i)) * d.ni(b.i)));
  row.lhs = omega_H(d, *va, *vb).scaled(scale);
  T f = FieldTraits<T>::from_int(1);
  if (a.p >= 1) f = f * FieldTraits<T>::from_rational(factorial(a.p - 1));
  if (b.p >= 1) f = f * FieldTraits<T>::from_rational(factorial(b.p - 1));
  row.rhs = omega(formal, to_sector(a), to_sector(b)).scaled(f);
  row.deviation = relative_deviation(row.lhs, row.rhs, log_tol);
  return row;
}

template <class T>
std::vector<HatIndex> hat_indices(const HurwitzData<T>& d, int pmax) {
  std::vector<HatIndex> out;
  for (int i = 0; i <= d.m(); ++i)
    for (int p = 0; p <= pmax; ++p)
      if (to_vindex(d, HatIndex{i, p})) out.push_back({i, p});
  return out;
}

// Every ordered pair of hat indices with levels up to (pmax, qmax).
template <class T>
std::vector<StabRow<T>> stabilization_report(const HurwitzData<T>& d, int pmax, int qmax,
                                             const Real& log_tol = Real(0)) {
  const FlatCoordsH<T> v = flat_coords(d);
  const WhithamPoint<T> formal = formal_point(v, static_cast<std::size_t>(pmax + qmax + 4));
  std::vector<StabRow<T>> rows;
  for (const auto& a : hat_indices(d, pmax))
    for (const auto& b : hat_indices(d, qmax)) rows.push_back(stab_entry(d, formal, a, b, log_tol));
  return rows;
}

}  // namespace wtl
