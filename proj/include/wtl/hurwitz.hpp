#pragma once

// Hurwitz spaces H_{0;n}: superpotentials
//
//   lambda(z) = z^n0 + a_{0,n0-2} z^(n0-2) + ... + a_{0,0}
//             + sum_{i=1..m} sum_{j=1..n_i} a_{i,j} (z - a_{i,0})^-j
//
// with flat coordinates read off the local inverses z(lambda^(1/n_i)).
// Fractional powers lambda^(1 - j/n_i) are integer powers of the local root
// mu_i = lambda^(1/n_i), so every computation below is over integer
// exponents once mu_i is known.  On the rational backend the root of the
// leading coefficient a_{i,n_i} must be supplied (lead_root).

#include "wtl/omega_value.hpp"
#include "wtl/ratfun.hpp"
#include "wtl/whitham.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wtl {

template <class T>
struct HurwitzPole {
  T loc;                        // a_{i,0}
  std::vector<T> a;             // a[j-1] = a_{i,j}, j = 1..n_i
  std::optional<T> lead_root;   // rho with rho^{n_i} = a_{i,n_i}
};

template <class T>
struct HurwitzData {
  std::vector<int> n;  // (n_0, n_1, ..., n_m)
  std::vector<T> a0;   // a_{0,0} .. a_{0,n0-2}
  std::vector<HurwitzPole<T>> poles;

  int m() const { return static_cast<int>(n.size()) - 1; }
  int ni(int i) const { return n.at(static_cast<std::size_t>(i)); }
  const HurwitzPole<T>& pole(int k) const { return poles.at(static_cast<std::size_t>(k - 1)); }

  void validate() const {
    if (n.empty()) throw std::invalid_argument("hurwitz: empty profile");
    for (int x : n)
      if (x < 1) throw std::invalid_argument("hurwitz: profile entries must be positive");
    if (static_cast<int>(a0.size()) != std::max(0, n[0] - 1))
      throw std::invalid_argument("hurwitz: a0 must hold a_{0,0}..a_{0,n0-2}");
    if (static_cast<int>(poles.size()) != m()) throw std::invalid_argument("hurwitz: one pole per profile entry");
    for (int k = 1; k <= m(); ++k) {
      const auto& p = pole(k);
      if (static_cast<int>(p.a.size()) != ni(k))
        throw std::invalid_argument("hurwitz: pole " + std::to_string(k) + " needs n_k coefficients");
      if (!FieldTraits<T>::invertible(p.a.back()))
        throw std::invalid_argument("hurwitz: leading pole coefficient must be nonzero");
      if (p.lead_root && !FieldTraits<T>::is_zero(int_pow(*p.lead_root, ni(k)) - p.a.back()) &&
          FieldTraits<T>::exact)
        throw std::invalid_argument("hurwitz: lead_root^n_k differs from a_{k,n_k}");
      for (int j = 1; j < k; ++j)
        if (!FieldTraits<T>::invertible(p.loc - pole(j).loc))
          throw std::invalid_argument("hurwitz: pole locations must be distinct");
    }
  }

  GlobalRational<T> lambda() const {
    std::vector<T> poly = a0;
    poly.resize(static_cast<std::size_t>(n[0]) + 1, FieldTraits<T>::from_int(0));
    poly.back() = FieldTraits<T>::from_int(1);
    GlobalRational<T> r = GlobalRational<T>::polynomial(std::move(poly));
    for (const auto& p : poles) r.add_part(p.loc, p.a);
    return r;
  }

  Center<T> center(int i) const { return i == 0 ? Center<T>::infinity() : Center<T>::at(pole(i).loc); }

  template <class F>
  auto map(F&& fn) const {
    using U = std::decay_t<decltype(fn(std::declval<const T&>()))>;
    HurwitzData<U> r;
    r.n = n;
    for (const auto& x : a0) r.a0.push_back(fn(x));
    for (const auto& p : poles) {
      HurwitzPole<U> q;
      q.loc = fn(p.loc);
      for (const auto& x : p.a) q.a.push_back(fn(x));
      if (p.lead_root) q.lead_root = fn(*p.lead_root);
      r.poles.push_back(std::move(q));
    }
    return r;
  }
};

// v_{i,j}: i = 0 with 1 <= j <= n0-1, or i >= 1 with 0 <= j <= n_i.
struct VIndex {
  int i = 0;
  int j = 0;
  friend bool operator==(const VIndex&, const VIndex&) = default;
};

std::string to_string(const VIndex& v);
VIndex parse_vindex(const std::string& s);  // "v:i:j"

template <class T>
std::vector<VIndex> flat_indices(const HurwitzData<T>& d) {
  std::vector<VIndex> out;
  for (int j = 1; j < d.ni(0); ++j) out.push_back({0, j});
  for (int k = 1; k <= d.m(); ++k)
    for (int j = 0; j <= d.ni(k); ++j) out.push_back({k, j});
  return out;
}

template <class T>
bool is_log_index(const HurwitzData<T>& d, const VIndex& v) {
  return v.i >= 1 && v.j == d.ni(v.i);
}

namespace detail {

template <class T>
void check_vindex(const HurwitzData<T>& d, const VIndex& v) {
  const bool ok = (v.i == 0 && v.j >= 1 && v.j < d.ni(0)) || (v.i >= 1 && v.i <= d.m() && v.j >= 0 && v.j <= d.ni(v.i));
  if (!ok) throw std::invalid_argument("flat index " + to_string(v) + " is outside the profile");
}

}  // namespace detail

// lambda at center c with t-indices below `order` determined.
template <class T>
LaurentSeries<T> superpotential(const HurwitzData<T>& d, const Center<T>& c, long order) {
  return expand_at(d.lambda(), c, order);
}

// mu_i = lambda^(1/n_i) at the center of pole i (i = 0: infinity), with
// t-indices below `order` determined.
template <class T>
LaurentSeries<T> local_root(const HurwitzData<T>& d, int i, long order) {
  const int ni = d.ni(i);
  const long K = std::max(1L, order - ni + 1);
  LaurentSeries<T> lam = superpotential(d, d.center(i), K);
  std::optional<T> rho;
  if (i == 0) rho = FieldTraits<T>::from_int(1);
  else rho = d.pole(i).lead_root;
  if (ni == 1) return lam;
  LaurentSeries<T> r = pow_rational(lam, Rational(1, ni), rho);
  if (r.denom() != 1) throw SeriesError("local root has fractional exponents");
  return truncate(r, order);
}

template <class T>
using FlatCoordsH = UCoords<T>;  // u0[j-1] = v_{0,j}, uk[k-1][j] = v_{k,j}

template <class T>
FlatCoordsH<T> flat_coords(const HurwitzData<T>& d) {
  FlatCoordsH<T> v;
  {
    LaurentSeries<T> z = revert(local_root(d, 0, d.ni(0) + 1));
    for (int j = 1; j < d.ni(0); ++j) v.u0.push_back(T(-z.at(j)));
  }
  for (int k = 1; k <= d.m(); ++k) {
    LaurentSeries<T> z = revert(local_root(d, k, d.ni(k) + 1));
    std::vector<T> row;
    for (int j = 0; j <= d.ni(k); ++j) row.push_back(z.at(j));
    v.uk.push_back(std::move(row));
  }
  return v;
}

// Superpotential with the given flat coordinates; exact on every backend.
// v_{k,1} becomes the lead root at pole k.
template <class T>
HurwitzData<T> data_from_flat(const std::vector<int>& n, const FlatCoordsH<T>& v) {
  HurwitzData<T> d;
  d.n = n;
  const auto inf = Center<T>::infinity();
  const int n0 = n.at(0);
  if (static_cast<int>(v.u0.size()) != n0 - 1) throw std::invalid_argument("data_from_flat: need v_{0,1..n0-1}");
  if (v.uk.size() + 1 != n.size()) throw std::invalid_argument("data_from_flat: one row per pole");
  {
    std::vector<T> zc{FieldTraits<T>::from_int(1), FieldTraits<T>::from_int(0)};
    for (const auto& x : v.u0) zc.push_back(-x);
    LaurentSeries<T> mu = revert(LaurentSeries<T>(inf, 1, -1, zc, n0));
    LaurentSeries<T> lam = pow_int(mu, n0);
    for (int i = 0; i <= n0 - 2; ++i) d.a0.push_back(coeff(lam, Rational(i)));
  }
  for (std::size_t k = 0; k < v.uk.size(); ++k) {
    const int nk = n.at(k + 1);
    const auto& row = v.uk[k];
    if (static_cast<int>(row.size()) != nk + 1) throw std::invalid_argument("data_from_flat: need v_{k,0..n_k}");
    if (!FieldTraits<T>::invertible(row[1])) throw std::invalid_argument("data_from_flat: v_{k,1} must be nonzero");
    LaurentSeries<T> mu = revert(LaurentSeries<T>(inf, 1, 0, row, nk + 1));
    LaurentSeries<T> lam = pow_int(mu, nk);
    HurwitzPole<T> p;
    p.loc = row[0];
    for (int j = 1; j <= nk; ++j) p.a.push_back(lam.at(-j));
    p.lead_root = row[1];
    d.poles.push_back(std::move(p));
  }
  return d;
}

// d lambda / d v_{i,j} as a rational function.
template <class T>
GlobalRational<T> dlambda_dv(const HurwitzData<T>& d, const VIndex& v) {
  detail::check_vindex(d, v);
  const int ni = d.ni(v.i);
  const long ord = ni + v.j + 4;
  LaurentSeries<T> mu = local_root(d, v.i, ord);
  LaurentSeries<T> dl = derive(superpotential(d, d.center(v.i), ord));
  LaurentSeries<T> s = mul(pow_int(mu, -v.j), dl);
  if (v.i == 0) return polynomial_part(s);
  return principal_part_at(s).scaled(FieldTraits<T>::from_int(-1));
}

namespace detail {

// Gamma(1 - x) / Gamma(2 + p - x) with x = j/n, as a finite product
inline Rational gamma_ratio(int j, int n, int p) {
  Rational r(1);
  for (int s = 0; s <= p; ++s) r *= Rational(1 + s) - Rational(j, n);
  return Rational(1) / r;
}

}  // namespace detail

// Hamiltonian densities theta_{v_{i,j},p}; the log family only at p = 0.
template <class T>
T theta_H(const HurwitzData<T>& d, const VIndex& v, int p) {
  detail::check_vindex(d, v);
  if (p < 0) throw std::invalid_argument("negative level");
  const int ni = d.ni(v.i);
  if (is_log_index(d, v)) {
    if (p != 0) throw UnsupportedSector("log density theta_{v_{k,n_k},p} is supported only at p = 0");
    // at p = 0 only -n_k Res_inf log(mu_0 / (z - a_k)) survives; the
    // argument is 1 + c z^-1 + O(z^-2), so the residue is -c
    const auto inf = Center<T>::infinity();
    LaurentSeries<T> q = mul(local_root(d, 0, 3),
                             expand_at(GlobalRational<T>::pole(d.pole(v.i).loc, {FieldTraits<T>::from_int(1)}), inf, 4));
    if (!(q.at(0) == FieldTraits<T>::from_int(1))) throw SeriesError("log density: argument does not tend to 1");
    return FieldTraits<T>::from_int(ni) * q.at(1);
  }
  const int e = ni * (p + 1) - v.j;
  const T g = FieldTraits<T>::from_rational(detail::gamma_ratio(v.j, ni, p));
  LaurentSeries<T> s = pow_int(local_root(d, v.i, e + 2), e);
  return v.i == 0 ? T(-g * residue(s)) : T(g * residue(s));
}

namespace detail {

template <class T>
T ratio(long a, long b) {
  return FieldTraits<T>::from_rational(Rational(a, b));
}

// Omega_{A;B} for A non-log; B may be the log index.
template <class T>
OmegaValue<T> omega_H_ordered(const HurwitzData<T>& d, const VIndex& A, const VIndex& B) {
  const int ni = d.ni(A.i), nk = d.ni(B.i);
  const int ea = ni - A.j;
  const long ordA = ea + 3;
  LaurentSeries<T> QA = pow_int(local_root(d, A.i, ordA), ea);
  if (is_log_index(d, B)) {
    const T pref = ratio<T>(static_cast<long>(ni) * nk, ea);
    GlobalRational<T> pole = GlobalRational<T>::pole(d.pole(B.i).loc, {FieldTraits<T>::from_int(1)});
    T r = residue_product(pole, QA);
    return OmegaValue<T>(A.i == 0 ? T(-pref * r) : T(pref * r));
  }
  const int eb = nk - B.j;
  const T pref = ratio<T>(static_cast<long>(ni) * nk, static_cast<long>(ea) * eb);
  GlobalRational<T> PA = A.i == 0 ? polynomial_part(QA) : principal_part_at(QA);
  LaurentSeries<T> dQB = derive(pow_int(local_root(d, B.i, eb + ea + 3), eb));
  T r = residue_product(PA, dQB);
  // the (+) projection at infinity carries a minus sign unless both sit there
  if ((A.i == 0) != (B.i == 0)) r = -r;
  return OmegaValue<T>(pref * r);
}

}  // namespace detail

// Second derivatives of the prepotential in flat coordinates.
template <class T>
OmegaValue<T> omega_H(const HurwitzData<T>& d, const VIndex& A, const VIndex& B) {
  detail::check_vindex(d, A);
  detail::check_vindex(d, B);
  const bool la = is_log_index(d, A), lb = is_log_index(d, B);
  if (la && lb) {
    const T c = FieldTraits<T>::from_int(static_cast<long long>(d.ni(A.i)) * d.ni(B.i));
    if (A.i != B.i) return OmegaValue<T>::log_of(T(d.pole(A.i).loc - d.pole(B.i).loc), c);
    return OmegaValue<T>::log_of(flat_coords(d).uk[static_cast<std::size_t>(A.i - 1)][1], c);
  }
  if (la) return detail::omega_H_ordered(d, B, A);
  return detail::omega_H_ordered(d, A, B);
}

namespace detail {

// -(Res_inf + sum_k Res_{a_k}) of prod(factors) / lambda'
template <class T>
T critical_residue_sum(const HurwitzData<T>& d, const std::vector<GlobalRational<T>>& factors) {
  T total = FieldTraits<T>::from_int(0);
  for (int i = 0; i <= d.m(); ++i) {
    const Center<T> c = d.center(i);
    const long ni = d.ni(i);
    long pole_order = 0;  // bound on the total pole order of the factors at c
    for (const auto& f : factors) {
      long po = 0;
      if (i == 0) po = static_cast<long>(f.poly().size());
      else
        for (const auto& p : f.parts())
          if (FieldTraits<T>::is_zero(p.loc - c.loc)) po = static_cast<long>(p.c.size());
      pole_order += po;
    }
    const long ord = pole_order + ni + 4;
    LaurentSeries<T> dl = derive(superpotential(d, c, ord));
    LaurentSeries<T> acc = invert(dl, static_cast<std::size_t>(ord + ni + 2));
    for (const auto& f : factors) acc = mul(acc, expand_at(f, c, ord));
    total -= residue(acc);
  }
  return total;
}

}  // namespace detail

template <class T>
T metric_H(const HurwitzData<T>& d, const VIndex& A, const VIndex& B) {
  return detail::critical_residue_sum(d, {dlambda_dv(d, A), dlambda_dv(d, B)});
}

// Structure constants c(A, B, C) by the residue formula.
template <class T>
T c_H(const HurwitzData<T>& d, const VIndex& A, const VIndex& B, const VIndex& C) {
  return detail::critical_residue_sum(d, {dlambda_dv(d, A), dlambda_dv(d, B), dlambda_dv(d, C)});
}

// The point of the formal space given by the local roots of lambda.
template <class T>
WhithamPoint<T> embed(const HurwitzData<T>& d, long order) {
  WhithamPoint<T> pt;
  pt.lambda0 = local_root(d, 0, order);
  for (int k = 1; k <= d.m(); ++k) {
    pt.phi.push_back(d.pole(k).loc);
    pt.lambda.push_back(local_root(d, k, order));
  }
  return pt;
}

}  // namespace wtl
