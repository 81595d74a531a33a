#pragma once

// Parity-symmetric superpotentials lambda(z) = lambda(-z).
//
// Reduced profile n' = (n0', n1', ..., n_m'') sits inside the full profile
//   n0 = 2 n0', n1 = 2 n1', n_{2i-2} = n_{2i-1} = n_i'  (2 <= i <= m'),
// with pole 1 at z = 0 and poles (2i-2, 2i-1) at +r_i, -r_i, r_i^2 = b_{i,0}.
// Pair coordinates carry the sign combination (index 2i-2) - (index 2i-1).

#include "wtl/open.hpp"
#include "wtl/stabilize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wtl {

class EvenConstraintError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::vector<int> full_profile(const std::vector<int>& np) {
  if (np.size() < 2) throw std::invalid_argument("even profile needs n0' and n1'");
  for (int x : np)
    if (x < 1) throw std::invalid_argument("even profile entries must be positive");
  std::vector<int> n{2 * np[0], 2 * np[1]};
  for (std::size_t i = 2; i < np.size(); ++i) {
    n.push_back(np[i]);
    n.push_back(np[i]);
  }
  return n;
}

// b-coefficients of
//   z^{2n0'} + sum b0[j] z^{2j} + sum b1[j-1] z^{-2j} + sum_i sum_j b[j-1] (z^2 - b_{i,0})^{-j}
template <class T>
struct EvenPair {
  T b0;                          // b_{i,0}
  std::optional<T> root;         // r with r^2 = b_{i,0}; pole 2i-2 sits at +r
  std::vector<T> b;              // b_{i,1..n_i'}
  std::optional<T> lead_root;    // lead root at +r; the one at -r is its negative
};

template <class T>
struct EvenHurwitzData {
  std::vector<int> np;
  std::vector<T> b0;             // b_{0,0..n0'-1}
  std::vector<T> b1;             // b_{1,1..n1'}
  std::optional<T> lead_root1;   // rho^{2 n1'} = b_{1,n1'}
  std::vector<EvenPair<T>> pairs;

  int mp() const { return static_cast<int>(np.size()) - 1; }

  // lambda(z) straight from the b-form
  T eval(const T& z) const {
    const T z2 = z * z;
    T r = int_pow(z2, np[0]);
    for (std::size_t j = 0; j < b0.size(); ++j) r += b0[j] * int_pow(z2, static_cast<int>(j));
    for (std::size_t j = 0; j < b1.size(); ++j) r += b1[j] / int_pow(z2, static_cast<int>(j) + 1);
    for (const auto& p : pairs)
      for (std::size_t j = 0; j < p.b.size(); ++j) r += p.b[j] / int_pow(T(z2 - p.b0), static_cast<int>(j) + 1);
    return r;
  }
};

namespace detail {

inline Rational binomial(int n, int k) {
  Rational r(1);
  for (int i = 1; i <= k; ++i) r = r * Rational(n - k + i) / Rational(i);
  return r;
}

}  // namespace detail

// Partial fractions into the generic representation.
template <class T>
HurwitzData<T> expand_even(const EvenHurwitzData<T>& e) {
  const std::vector<int> n = full_profile(e.np);
  if (static_cast<int>(e.b0.size()) != e.np[0] || static_cast<int>(e.b1.size()) != e.np[1] ||
      static_cast<int>(e.pairs.size()) != e.mp() - 1)
    throw std::invalid_argument("expand_even: coefficient counts do not match n'");
  const T zero = FieldTraits<T>::from_int(0);
  HurwitzData<T> d;
  d.n = n;
  d.a0.assign(static_cast<std::size_t>(n[0] - 1), zero);
  for (std::size_t j = 0; j < e.b0.size(); ++j) d.a0[2 * j] = e.b0[j];

  HurwitzPole<T> p1;
  p1.loc = zero;
  p1.a.assign(static_cast<std::size_t>(n[1]), zero);
  for (std::size_t j = 0; j < e.b1.size(); ++j) p1.a[2 * j + 1] = e.b1[j];
  p1.lead_root = e.lead_root1 ? e.lead_root1 : FieldTraits<T>::root(e.b1.back(), n[1]);
  d.poles.push_back(std::move(p1));

  for (std::size_t i = 0; i < e.pairs.size(); ++i) {
    const auto& pr = e.pairs[i];
    const int ni = e.np[i + 2];
    std::optional<T> r = pr.root ? pr.root : FieldTraits<T>::root(pr.b0, 2);
    if (!r) throw std::domain_error("expand_even: no square root of b_{i,0} available");
    if (!FieldTraits<T>::is_zero(*r * *r - pr.b0)) throw std::invalid_argument("expand_even: root^2 differs from b_{i,0}");
    if (!FieldTraits<T>::invertible(*r)) throw std::invalid_argument("expand_even: b_{i,0} = 0 collides with the pole at 0");
    const T two_r = FieldTraits<T>::from_int(2) * *r;
    // (z^2-b)^{-j} = t^{-j} (2r + t)^{-j} at +r and (-1)^j t^{-j} (2r - t)^{-j} at -r
    std::vector<T> plus(static_cast<std::size_t>(ni), zero), minus(static_cast<std::size_t>(ni), zero);
    for (int j = 1; j <= ni; ++j) {
      const T& bj = pr.b[static_cast<std::size_t>(j - 1)];
      for (int l = 1; l <= j; ++l) {
        const int m = j - l;
        const T c = bj * FieldTraits<T>::from_rational(detail::binomial(j + m - 1, m)) / int_pow(two_r, j + m);
        plus[static_cast<std::size_t>(l - 1)] += (m % 2 ? T(-c) : c);
        minus[static_cast<std::size_t>(l - 1)] += (j % 2 ? T(-c) : c);
      }
    }
    HurwitzPole<T> a, b;
    a.loc = *r;
    a.a = plus;
    b.loc = -*r;
    b.a = minus;
    a.lead_root = pr.lead_root ? pr.lead_root : FieldTraits<T>::root(plus.back(), ni);
    if (a.lead_root) b.lead_root = -*a.lead_root;
    d.poles.push_back(std::move(a));
    d.poles.push_back(std::move(b));
  }
  return d;
}

// Even flat coordinates: v_{0,2j-1}, v_{1,2j-1}, and v_{2i-2,j} per pair.
template <class T>
struct EvenFlat {
  std::vector<T> odd0;                 // v_{0,1}, v_{0,3}, ..., v_{0,2n0'-1}
  std::vector<T> odd1;                 // v_{1,1}, ..., v_{1,2n1'-1}
  std::vector<std::vector<T>> pairs;   // pairs[i-2][j] = v_{2i-2,j}
};

template <class T>
FlatCoordsH<T> expand_flat(const std::vector<int>& np, const EvenFlat<T>& e) {
  const std::vector<int> n = full_profile(np);
  const T zero = FieldTraits<T>::from_int(0);
  if (static_cast<int>(e.odd0.size()) != np[0] || static_cast<int>(e.odd1.size()) != np[1] ||
      e.pairs.size() + 2 != np.size())
    throw std::invalid_argument("expand_flat: coordinate counts do not match n'");
  FlatCoordsH<T> v;
  v.u0.assign(static_cast<std::size_t>(n[0] - 1), zero);
  for (std::size_t j = 0; j < e.odd0.size(); ++j) v.u0[2 * j] = e.odd0[j];
  std::vector<T> row1(static_cast<std::size_t>(n[1]) + 1, zero);
  for (std::size_t j = 0; j < e.odd1.size(); ++j) row1[2 * j + 1] = e.odd1[j];
  v.uk.push_back(std::move(row1));
  for (std::size_t i = 0; i < e.pairs.size(); ++i) {
    if (static_cast<int>(e.pairs[i].size()) != np[i + 2] + 1)
      throw std::invalid_argument("expand_flat: pair needs v_{k,0..n'}");
    v.uk.push_back(e.pairs[i]);
    std::vector<T> neg;
    for (const auto& x : e.pairs[i]) neg.push_back(-x);
    v.uk.push_back(std::move(neg));
  }
  return v;
}

template <class T>
HurwitzData<T> even_data_from_flat(const std::vector<int>& np, const EvenFlat<T>& e) {
  return data_from_flat(full_profile(np), expand_flat(np, e));
}

// Largest violation of the flat-coordinate constraints.
template <class T>
Real even_constraint_defect(const HurwitzData<T>& d) {
  const FlatCoordsH<T> v = flat_coords(d);
  Real worst = 0;
  auto bump = [&](const T& x) { worst = std::max(worst, FieldTraits<T>::magnitude(x)); };
  for (std::size_t j = 1; j < v.u0.size(); j += 2) bump(v.u0[j]);  // v_{0,2}, v_{0,4}, ...
  for (std::size_t j = 0; j < v.uk.at(0).size(); j += 2) bump(v.uk[0][j]);
  for (std::size_t k = 1; k + 1 < v.uk.size(); k += 2)
    for (std::size_t j = 0; j < v.uk[k].size(); ++j) bump(v.uk[k][j] + v.uk[k + 1][j]);
  return worst;
}

// max |lambda(z) - lambda(-z)| over the coefficients
template <class T>
Real parity_defect(const HurwitzData<T>& d) {
  const GlobalRational<T> L = d.lambda();
  Real worst = 0;
  for (std::size_t j = 1; j < L.poly().size(); j += 2) worst = std::max(worst, FieldTraits<T>::magnitude(L.poly()[j]));
  // pole parts: at -a the coefficients must be (-1)^j times those at a
  for (const auto& p : L.parts()) {
    const PolePart<T>* q = nullptr;
    for (const auto& o : L.parts())
      if (FieldTraits<T>::magnitude(o.loc + p.loc) <= FieldTraits<T>::magnitude(p.loc) * Real("1e-40")) q = &o;
    if (!q) return Real(1);
    for (std::size_t j = 0; j < p.c.size(); ++j) {
      const T want = j % 2 ? p.c[j] : T(-p.c[j]);  // c_{j+1} (z - a)^{-(j+1)}
      const T got = j < q->c.size() ? q->c[j] : FieldTraits<T>::from_int(0);
      worst = std::max(worst, FieldTraits<T>::magnitude(got - want));
    }
  }
  return worst;
}

template <class T>
void require_even(const HurwitzData<T>& d, const Real& tol = Real(0)) {
  const int m = d.m();
  if (m < 1 || m % 2 == 0 || d.ni(0) % 2 || d.ni(1) % 2)
    throw EvenConstraintError("profile is not of the even form");
  for (int k = 2; k < m; k += 2)
    if (d.ni(k) != d.ni(k + 1)) throw EvenConstraintError("paired poles need equal orders");
  if (!(FieldTraits<T>::magnitude(d.pole(1).loc) <= tol)) throw EvenConstraintError("pole 1 must sit at 0");
  if (parity_defect(d) > tol) throw EvenConstraintError("lambda(z) != lambda(-z)");
  if (even_constraint_defect(d) > tol) throw EvenConstraintError("flat coordinates violate the parity constraints");
}

// ---- reduced index sets ----

struct EvenVIndex {
  int i = 0;  // 0, 1, or an even pair label 2, 4, ...
  int j = 0;
};

inline std::vector<std::pair<int, VIndex>> even_terms(const EvenVIndex& a) {
  if (a.i <= 1) return {{1, VIndex{a.i, a.j}}};
  return {{1, VIndex{a.i, a.j}}, {-1, VIndex{a.i + 1, a.j}}};
}

template <class T>
std::vector<EvenVIndex> even_flat_indices(const HurwitzData<T>& d) {
  std::vector<EvenVIndex> out;
  for (int j = 1; j < d.ni(0); j += 2) out.push_back({0, j});
  for (int j = 1; j < d.ni(1); j += 2) out.push_back({1, j});
  for (int k = 2; k < d.m(); k += 2)
    for (int j = 0; j <= d.ni(k); ++j) out.push_back({k, j});
  return out;
}

// Omega^even as the signed combination of full entries.
template <class T>
OmegaValue<T> omega_even(const HurwitzData<T>& d, const EvenVIndex& a, const EvenVIndex& b) {
  OmegaValue<T> r;
  for (const auto& [sa, va] : even_terms(a))
    for (const auto& [sb, vb] : even_terms(b))
      r += omega_H(d, va, vb).scaled(FieldTraits<T>::from_int(sa * sb));
  return r;
}

// Same entry using only residues at the first pole of each pair: on a
// symmetric point the partner terms are images under z -> -z.
template <class T>
OmegaValue<T> omega_even_reduced(const HurwitzData<T>& d, const EvenVIndex& a, const EvenVIndex& b) {
  const bool pa = a.i >= 2, pb = b.i >= 2;
  const T two = FieldTraits<T>::from_int(2);
  if (!pa && !pb) return omega_H(d, VIndex{a.i, a.j}, VIndex{b.i, b.j});
  if (pa && !pb) return omega_H(d, VIndex{a.i, a.j}, VIndex{b.i, b.j}).scaled(two);
  if (!pa && pb) return omega_H(d, VIndex{a.i, a.j}, VIndex{b.i, b.j}).scaled(two);
  return (omega_H(d, VIndex{a.i, a.j}, VIndex{b.i, b.j}) - omega_H(d, VIndex{a.i, a.j}, VIndex{b.i + 1, b.j}))
      .scaled(two);
}

// ---- formal side ----

// -lambda0(z) = lambda0(-z), -lambda1(z) = lambda1(-z), lambda_{2j-2}(-z) = lambda_{2j-1}(z)
template <class T>
Real even_point_defect(const WhithamPoint<T>& pt) {
  Real worst = 0;
  auto bump = [&](const T& x) { worst = std::max(worst, FieldTraits<T>::magnitude(x)); };
  const auto& L0 = pt.lambda0;
  for (long k = L0.low(); k < std::min(L0.order(), L0.high()); ++k)
    if (k % 2 == 0) bump(L0.at(k));
  const auto& L1 = pt.lambda.at(0);
  bump(pt.phi.at(0));
  for (long k = L1.low(); k < std::min(L1.order(), L1.high()); ++k)
    if (k % 2 == 0) bump(L1.at(k));
  for (std::size_t a = 1; a + 1 < pt.lambda.size(); a += 2) {
    const auto &P = pt.lambda[a], &Q = pt.lambda[a + 1];
    bump(pt.phi[a] + pt.phi[a + 1]);
    const long hi = std::min(P.order(), Q.order());
    for (long k = std::min(P.low(), Q.low()); k < hi; ++k) {
      const T p = k < P.low() ? FieldTraits<T>::from_int(0) : P.at(k);
      const T q = k < Q.low() ? FieldTraits<T>::from_int(0) : Q.at(k);
      bump(k % 2 ? T(q + p) : T(q - p));
    }
  }
  return worst;
}

inline std::vector<std::pair<int, SectorIndex>> even_sector_terms(const SectorIndex& a) {
  if (a.kind == Sector::E || a.k == 1) return {{1, a}};
  SectorIndex b = a;
  b.k = a.k + 1;
  return {{1, a}, {-1, b}};
}

template <class T>
OmegaValue<T> omega_even_M(const WhithamPoint<T>& pt, const SectorIndex& a, const SectorIndex& b) {
  auto ok = [](const SectorIndex& s) {
    if (s.kind == Sector::E || (s.kind == Sector::H0 && s.k == 1)) return s.p % 2 == 0;
    return s.k >= 2 && s.k % 2 == 0;
  };
  if (!ok(a) || !ok(b)) throw UnsupportedSector("omega_even_M: index outside the reduced set");
  OmegaValue<T> r;
  for (const auto& [sa, x] : even_sector_terms(a))
    for (const auto& [sb, y] : even_sector_terms(b)) r += omega(pt, x, y).scaled(FieldTraits<T>::from_int(sa * sb));
  return r;
}

// ---- stabilization ----

template <class T>
std::vector<HatIndex> even_hat_indices(const HurwitzData<T>& d, int pmax) {
  std::vector<HatIndex> out;
  for (int p = 1; p <= std::min(pmax, d.ni(0) - 1); p += 2) out.push_back({0, p});
  for (int p = 1; p <= std::min(pmax, d.ni(1)); p += 2) out.push_back({1, p});
  for (int k = 2; k < d.m(); k += 2)
    for (int p = 0; p <= std::min(pmax, d.ni(k)); ++p) out.push_back({k, p});
  return out;
}

inline std::vector<std::pair<int, HatIndex>> even_hat_terms(const HatIndex& h) {
  if (h.i <= 1) return {{1, h}};
  return {{1, h}, {-1, HatIndex{h.i + 1, h.p}}};
}

template <class T>
struct EvenStabRow {
  HatIndex a, b;
  bool threshold_ok = true;
  OmegaValue<T> lhs, rhs;
  Real deviation;
};

template <class T>
std::vector<EvenStabRow<T>> even_stabilization_report(const HurwitzData<T>& d, int pmax, int qmax,
                                                      const Real& tol = Real(0)) {
  require_even(d, tol);
  const FlatCoordsH<T> v = flat_coords(d);
  const WhithamPoint<T> formal = formal_point(v, static_cast<std::size_t>(pmax + qmax + 4));
  std::vector<EvenStabRow<T>> rows;
  for (const auto& a : even_hat_indices(d, pmax))
    for (const auto& b : even_hat_indices(d, qmax)) {
      EvenStabRow<T> row;
      row.a = a;
      row.b = b;
      for (const auto& [sa, x] : even_hat_terms(a))
        for (const auto& [sb, y] : even_hat_terms(b)) {
          StabRow<T> s = stab_entry(d, formal, x, y, tol);
          const T c = FieldTraits<T>::from_int(sa * sb);
          row.lhs += s.lhs.scaled(c);
          row.rhs += s.rhs.scaled(c);
          row.threshold_ok = row.threshold_ok && s.threshold_ok;
        }
      row.deviation = relative_deviation(row.lhs, row.rhs, tol);
      rows.push_back(std::move(row));
    }
  return rows;
}

// Open rows: each side is a signed list of series (one per pole involved).
template <class T>
struct EvenOpenRow {
  HatIndex index;
  bool threshold_ok = true;
  std::vector<OpenSeries<T>> lhs, rhs;
  Real max_coeff_dev;
};

template <class T>
std::vector<EvenOpenRow<T>> even_open_report(const HurwitzData<T>& d, int pmax, long s_order = kDefaultSOrder,
                                             const Real& tol = Real(0)) {
  require_even(d, tol);
  const auto full = open_stabilization_report(d, pmax, s_order);
  auto find = [&](const HatIndex& h) -> const OpenRow<T>& {
    for (const auto& r : full)
      if (r.index == h) return r;
    throw std::logic_error("even_open_report: missing row");
  };
  std::vector<EvenOpenRow<T>> rows;
  for (const auto& h : even_hat_indices(d, pmax)) {
    EvenOpenRow<T> row;
    row.index = h;
    row.max_coeff_dev = 0;
    for (const auto& [s, x] : even_hat_terms(h)) {
      const OpenRow<T>& r = find(x);
      const T c = FieldTraits<T>::from_int(s);
      row.lhs.push_back(detail::scaled(r.lhs, c));
      row.rhs.push_back(detail::scaled(r.rhs, c));
      row.threshold_ok = row.threshold_ok && r.threshold_ok;
      row.max_coeff_dev = std::max(row.max_coeff_dev, detail::open_deviation(row.lhs.back(), row.rhs.back()));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace wtl
