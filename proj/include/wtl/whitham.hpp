#pragma once

// Points of the formal Whitham space and their tau-structure.
//
//   lambda0(z) = z + a_1 z^-1 + a_2 z^-2 + ...                  at infinity
//   lambda_k(z) = c_-1 (z - phi_k)^-1 + c_0 + c_1 (z - phi_k) + ...  at phi_k
//
// Sector indices: e (p >= 0), h0 k (p >= 0), h1 k (p = 0 only).  Residues at
// infinity follow the series convention Res_inf f = -[z^-1] f.

#include "wtl/omega_value.hpp"
#include "wtl/ratfun.hpp"

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace wtl {

class UnsupportedSector : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Sector { E, H0, H1 };

struct SectorIndex {
  Sector kind = Sector::E;
  int k = 0;  // pole label 1..m for h0/h1
  int p = 0;

  static SectorIndex e(int p) { return {Sector::E, 0, p}; }
  static SectorIndex h0(int k, int p) { return {Sector::H0, k, p}; }
  static SectorIndex h1(int k) { return {Sector::H1, k, 0}; }

  friend bool operator==(const SectorIndex&, const SectorIndex&) = default;
};

std::string to_string(const SectorIndex& s);
SectorIndex parse_sector(const std::string& s);  // "e:2", "h0:1:3", "h1:2"

template <class T>
struct WhithamPoint {
  std::vector<T> phi;
  LaurentSeries<T> lambda0;
  std::vector<LaurentSeries<T>> lambda;

  int m() const { return static_cast<int>(phi.size()); }

  void validate() const {
    if (lambda.size() != phi.size()) throw std::invalid_argument("point: one series per pole is required");
    if (!lambda0.center().infinite || lambda0.denom() != 1)
      throw std::invalid_argument("point: lambda0 must be a Laurent series at infinity");
    if (lambda0.low() < -1 || !(lambda0.at(-1) == FieldTraits<T>::from_int(1)) ||
        !FieldTraits<T>::is_zero(lambda0.at(0)))
      throw std::invalid_argument("point: lambda0 must start z + 0 + O(z^-1)");
    for (int k = 0; k < m(); ++k) {
      const auto& s = lambda[static_cast<std::size_t>(k)];
      if (s.center().infinite || !FieldTraits<T>::is_zero(s.center().loc - phi[static_cast<std::size_t>(k)]))
        throw std::invalid_argument("point: lambda_k must be centered at phi_k");
      if (s.denom() != 1 || s.low() < -1 || !FieldTraits<T>::invertible(s.at(-1)))
        throw std::invalid_argument("point: lambda_k must have a simple pole with invertible residue");
      for (int j = 0; j < k; ++j)
        if (!FieldTraits<T>::invertible(phi[static_cast<std::size_t>(k)] - phi[static_cast<std::size_t>(j)]))
          throw std::invalid_argument("point: pole locations must be distinct");
    }
  }

  template <class F>
  auto map(F&& fn) const {
    using U = std::decay_t<decltype(fn(std::declval<const T&>()))>;
    WhithamPoint<U> r;
    for (const auto& x : phi) r.phi.push_back(fn(x));
    r.lambda0 = lambda0.map(fn);
    for (const auto& s : lambda) r.lambda.push_back(s.map(fn));
    return r;
  }
};

// u0[j-1] = u_{0,j};  uk[k-1][j] = u_{k,j}
template <class T>
struct UCoords {
  std::vector<T> u0;
  std::vector<std::vector<T>> uk;
};

inline constexpr std::size_t kDefaultTerms = 16;

template <class T>
UCoords<T> u_coords(const WhithamPoint<T>& pt, std::size_t terms = kDefaultTerms) {
  UCoords<T> u;
  LaurentSeries<T> z = revert(pt.lambda0, terms);
  for (long j = 1; j < z.order(); ++j) u.u0.push_back(T(-z.at(j)));
  for (const auto& s : pt.lambda) {
    LaurentSeries<T> zk = revert(s, terms);
    std::vector<T> row;
    for (long j = 0; j < zk.order(); ++j) row.push_back(zk.at(j));
    u.uk.push_back(std::move(row));
  }
  return u;
}

// Rebuild lambda's from z(a) = a - sum u0 a^-j and z(ah) = sum uk ah^-j.
template <class T>
WhithamPoint<T> point_of_u(const UCoords<T>& u) {
  WhithamPoint<T> pt;
  const auto inf = Center<T>::infinity();
  std::vector<T> za{FieldTraits<T>::from_int(1), FieldTraits<T>::from_int(0)};
  for (const auto& x : u.u0) za.push_back(-x);
  pt.lambda0 = revert(LaurentSeries<T>(inf, 1, -1, za, static_cast<long>(u.u0.size()) + 1));
  for (const auto& row : u.uk) {
    if (row.size() < 2 || !FieldTraits<T>::invertible(row[1]))
      throw std::invalid_argument("point_of_u: u_{k,1} must be nonzero");
    pt.phi.push_back(row[0]);
    pt.lambda.push_back(revert(LaurentSeries<T>(inf, 1, 0, row, static_cast<long>(row.size()))));
  }
  return pt;
}

namespace detail {

inline void check_pole(int m, const SectorIndex& s) {
  if (s.kind == Sector::E) {
    if (s.k != 0) throw std::invalid_argument("sector e carries no pole label");
  } else if (s.k < 1 || s.k > m) {
    throw std::invalid_argument("sector pole label " + std::to_string(s.k) + " outside 1.." + std::to_string(m));
  }
  if (s.p < 0) throw std::invalid_argument("negative level");
  if (s.kind == Sector::H1 && s.p != 0)
    throw UnsupportedSector("h1 sector is supported only at level 0");
}

template <class T>
const LaurentSeries<T>& lam(const WhithamPoint<T>& pt, int k) {
  return pt.lambda[static_cast<std::size_t>(k - 1)];
}

template <class T>
T inv_factorial(int n) {
  return FieldTraits<T>::from_rational(Rational(1) / factorial(n));
}

}  // namespace detail

template <class T>
T theta(const WhithamPoint<T>& pt, const SectorIndex& a) {
  detail::check_pole(pt.m(), a);
  switch (a.kind) {
    case Sector::E:
      return -residue(pow_int(pt.lambda0, a.p + 1)) * detail::inv_factorial<T>(a.p + 1);
    case Sector::H0:
      return residue(pow_int(detail::lam(pt, a.k), a.p + 1)) * detail::inv_factorial<T>(a.p + 1);
    case Sector::H1:
      return pt.phi[static_cast<std::size_t>(a.k - 1)];
  }
  return FieldTraits<T>::from_int(0);
}

namespace detail {

// (lambda_k^(p+1))_{phi_k, <= -1}
template <class T>
GlobalRational<T> principal_power(const WhithamPoint<T>& pt, int k, int p) {
  return principal_part_at(pow_int(lam(pt, k), p + 1));
}

// (lambda0^(p+1))_{inf, >= 0}
template <class T>
GlobalRational<T> polynomial_power(const WhithamPoint<T>& pt, int p) {
  return polynomial_part(pow_int(pt.lambda0, p + 1));
}

template <class T>
Center<T> pole_center(const WhithamPoint<T>& pt, int k) {
  return Center<T>::at(pt.phi[static_cast<std::size_t>(k - 1)]);
}

// residue at c of R * S, R re-expanded far enough for S's pole order
template <class T>
T residue_product(const GlobalRational<T>& R, const LaurentSeries<T>& S) {
  const long need = std::max(2L, -S.low() + 2);
  return residue(mul(expand_at(R, S.center(), need), S));
}

template <class T>
T residue_product(const GlobalRational<T>& R1, const GlobalRational<T>& R2, const Center<T>& c, long need) {
  return residue(mul(expand_at(R1, c, need), expand_at(R2, c, need)));
}

template <class T>
GlobalRational<T> simple_pole(const T& loc) {
  return GlobalRational<T>::pole(loc, {FieldTraits<T>::from_int(1)});
}

template <class T>
OmegaValue<T> log_entry(const WhithamPoint<T>& pt, const SectorIndex& a, int k) {
  // Omega_{a; h1 k}
  const T cp = inv_factorial<T>(a.p + 1);
  const T phik = pt.phi[static_cast<std::size_t>(k - 1)];
  switch (a.kind) {
    case Sector::E: {
      LaurentSeries<T> P = pow_int(pt.lambda0, a.p + 1);
      return OmegaValue<T>(-residue_product(simple_pole(phik), P) * cp);
    }
    case Sector::H0: {
      LaurentSeries<T> P = pow_int(lam(pt, a.k), a.p + 1);
      return OmegaValue<T>(residue_product(simple_pole(phik), P) * cp);
    }
    case Sector::H1:
      if (a.k == k) return OmegaValue<T>::log_of(lam(pt, k).at(-1));
      return OmegaValue<T>::log_of(pt.phi[static_cast<std::size_t>(a.k - 1)] - phik);
  }
  return {};
}

}  // namespace detail

// Omega_{a; b}: finite residue sums at the poles (and at infinity for the
// e-e and h-e cases, which is where the contour integral lands).
template <class T>
OmegaValue<T> omega(const WhithamPoint<T>& pt, const SectorIndex& a, const SectorIndex& b) {
  detail::check_pole(pt.m(), a);
  detail::check_pole(pt.m(), b);
  if (b.kind == Sector::H1) return detail::log_entry(pt, a, b.k);
  if (a.kind == Sector::H1) return detail::log_entry(pt, b, a.k);

  const T C = detail::inv_factorial<T>(a.p + 1) * detail::inv_factorial<T>(b.p + 1);
  if (b.kind == Sector::H0) {
    LaurentSeries<T> dQ = derive(pow_int(detail::lam(pt, b.k), b.p + 1));
    if (a.kind == Sector::H0) return OmegaValue<T>(C * detail::residue_product(detail::principal_power(pt, a.k, a.p), dQ));
    return OmegaValue<T>(-C * detail::residue_product(detail::polynomial_power(pt, a.p), dQ));
  }
  LaurentSeries<T> dQ = derive(pow_int(pt.lambda0, b.p + 1));
  if (a.kind == Sector::H0) return OmegaValue<T>(-C * detail::residue_product(detail::principal_power(pt, a.k, a.p), dQ));
  return OmegaValue<T>(C * detail::residue_product(detail::polynomial_power(pt, a.p), dQ));
}

// Independent evaluation of the same entries: integrate by parts and move
// every residue to the other side of the residue theorem.
template <class T>
OmegaValue<T> omega_transfer(const WhithamPoint<T>& pt, const SectorIndex& a, const SectorIndex& b) {
  detail::check_pole(pt.m(), a);
  detail::check_pole(pt.m(), b);
  const auto inf = Center<T>::infinity();
  if (a.kind == Sector::H1 && b.kind == Sector::H1) return detail::log_entry(pt, a, b.k);
  if (a.kind == Sector::H1 || b.kind == Sector::H1) {
    const SectorIndex& s = a.kind == Sector::H1 ? b : a;
    const int k = a.kind == Sector::H1 ? a.k : b.k;
    const T phik = pt.phi[static_cast<std::size_t>(k - 1)];
    const T cp = detail::inv_factorial<T>(s.p + 1);
    if (s.kind == Sector::E) return OmegaValue<T>(detail::polynomial_power(pt, s.p).eval(phik) * cp);
    if (s.k != k) return OmegaValue<T>(-detail::principal_power(pt, s.k, s.p).eval(phik) * cp);
    return OmegaValue<T>(coeff(pow_int(detail::lam(pt, k), s.p + 1), Rational(0)) * cp);
  }

  const T C = detail::inv_factorial<T>(a.p + 1) * detail::inv_factorial<T>(b.p + 1);
  const long need = a.p + b.p + 4;
  if (a.kind == Sector::E && b.kind == Sector::E) {
    GlobalRational<T> dpoly = detail::polynomial_power(pt, a.p).derive();
    return OmegaValue<T>(-C * detail::residue_product(dpoly, pow_int(pt.lambda0, b.p + 1)));
  }
  if (a.kind == Sector::E) {
    GlobalRational<T> poly = detail::polynomial_power(pt, a.p);
    GlobalRational<T> dP = detail::principal_power(pt, b.k, b.p).derive();
    return OmegaValue<T>(C * detail::residue_product(poly, dP, inf, need));
  }
  if (b.kind == Sector::E) {
    GlobalRational<T> P = detail::principal_power(pt, a.k, a.p);
    GlobalRational<T> dpoly = detail::polynomial_power(pt, b.p).derive();
    return OmegaValue<T>(C * detail::residue_product(P, dpoly, detail::pole_center(pt, a.k), need));
  }
  GlobalRational<T> Pa = detail::principal_power(pt, a.k, a.p);
  GlobalRational<T> Pb = detail::principal_power(pt, b.k, b.p);
  if (a.k != b.k) {
    GlobalRational<T> dPb = Pb.derive();
    T r = detail::residue_product(Pa, dPb, detail::pole_center(pt, a.k), need) +
          detail::residue_product(Pa, dPb, inf, need);
    return OmegaValue<T>(-C * r);
  }
  GlobalRational<T> dPa = Pa.derive();
  const auto c = detail::pole_center(pt, a.k);
  LaurentSeries<T> Q = pow_int(detail::lam(pt, b.k), b.p + 1);
  LaurentSeries<T> regular = Q - expand_at(Pb, c, Q.exact() ? need : Q.order());
  T r = -residue(mul(expand_at(dPa, c, need), regular)) + detail::residue_product(dPa, Pb, inf, need);
  return OmegaValue<T>(C * r);
}

// The u-coordinates an entry depends on: (0, j) for u_{0,j}, (k, j) for u_{k,j}.
std::set<std::pair<int, int>> dependence_indices(const SectorIndex& a, const SectorIndex& b);

}  // namespace wtl
