#pragma once

// Lax flows on points whose coefficients carry an x-jet, and the check that
// the flow derivative of a density equals d/dx of the matching Omega entry.
//
// Flow (j, k) has generator
//   (0, k >= 1)  (lambda0^k)_{inf, >= 0}
//   (j, k >= 1)  -(lambda_j^k)_{phi_j, <= -1}
//   (j, 0)       log(z - phi_j)
// and acts by {f, lambda_i} = f_z X(lambda_i) - X(f) lambda_i', with X the
// x-derivative at fixed z.  Moving centers contribute -phi' * (d/dz).

#include "wtl/jet.hpp"
#include "wtl/whitham.hpp"

#include <cstddef>
#include <vector>

namespace wtl {

struct Flow {
  int j = 0;
  int k = 1;
};

template <class T>
LaurentSeries<T> value_series(const LaurentSeries<Jet<T>>& f) {
  return f.map([](const Jet<T>& x) { return x.value(); });
}

// x-derivative at fixed z of a jet-valued series
template <class T>
LaurentSeries<T> x_derivative(const LaurentSeries<Jet<T>>& f, std::size_t dir = 0) {
  LaurentSeries<T> dc = f.map([dir](const Jet<T>& x) { return x.part(dir); });
  if (f.center().infinite) return dc;
  // keep the value center so both terms add
  LaurentSeries<T> v = value_series(f);
  LaurentSeries<T> shifted(v.center(), dc.denom(), dc.low(), dc.coeffs(), dc.order());
  return shifted - scale(derive(v), f.center().loc.part(dir));
}

template <class T>
GlobalRational<T> value_rational(const GlobalRational<Jet<T>>& R) {
  return R.map([](const Jet<T>& x) { return x.value(); });
}

template <class T>
GlobalRational<T> x_derivative(const GlobalRational<Jet<T>>& R, std::size_t dir = 0) {
  std::vector<T> poly;
  for (const auto& x : R.poly()) poly.push_back(x.part(dir));
  GlobalRational<T> out = GlobalRational<T>::polynomial(std::move(poly));
  for (const auto& part : R.parts()) {
    // d/dx c_j (z - a)^-j = c_j' (z - a)^-j + j c_j a' (z - a)^-(j+1)
    std::vector<T> c(part.c.size() + 1, FieldTraits<T>::from_int(0));
    const T da = part.loc.part(dir);
    for (std::size_t jj = 0; jj < part.c.size(); ++jj) {
      c[jj] += part.c[jj].part(dir);
      c[jj + 1] += FieldTraits<T>::from_int(static_cast<long long>(jj + 1)) * part.c[jj].value() * da;
    }
    out.add_part(part.loc.value(), c);
  }
  return out;
}

namespace detail {

template <class T>
long expansion_order_for(const LaurentSeries<T>& B) {
  const long ord = B.exact() ? B.high() + static_cast<long>(kDefaultTerms) : B.order();
  return ord - B.low() + 2;
}

}  // namespace detail

// d lambda_i / d sigma^{flow}, i = 0..m, as value series at the same centers.
template <class T>
std::vector<LaurentSeries<T>> lax_rhs(const WhithamPoint<Jet<T>>& pt, const Flow& flow, std::size_t dir = 0) {
  const int m = pt.m();
  if (flow.j < 0 || flow.j > m || flow.k < 0 || (flow.j == 0 && flow.k == 0))
    throw std::invalid_argument("lax_rhs: flow index out of range");
  GlobalRational<T> Gz, Gx;
  if (flow.k == 0) {
    const Jet<T>& phi = pt.phi[static_cast<std::size_t>(flow.j - 1)];
    Gz = GlobalRational<T>::pole(phi.value(), {FieldTraits<T>::from_int(1)});
    Gx = GlobalRational<T>::pole(phi.value(), {T(-phi.part(dir))});
  } else {
    GlobalRational<Jet<T>> G;
    if (flow.j == 0) {
      G = polynomial_part(pow_int(pt.lambda0, flow.k));
    } else {
      G = principal_part_at(pow_int(pt.lambda[static_cast<std::size_t>(flow.j - 1)], flow.k))
              .scaled(FieldTraits<Jet<T>>::from_int(-1));
    }
    Gz = value_rational(G).derive();
    Gx = x_derivative(G, dir);
  }

  std::vector<LaurentSeries<T>> out;
  auto bracket = [&](const LaurentSeries<Jet<T>>& L) {
    LaurentSeries<T> Lx = x_derivative(L, dir);
    LaurentSeries<T> Lz = derive(value_series(L));
    const auto& c = Lx.center();
    return mul(expand_at(Gz, c, detail::expansion_order_for(Lx)), Lx) -
           mul(expand_at(Gx, c, detail::expansion_order_for(Lz)), Lz);
  };
  out.push_back(bracket(pt.lambda0));
  for (const auto& L : pt.lambda) out.push_back(bracket(L));
  return out;
}

// Point with a single first-order direction along the given tangent
// (d lambda_i at fixed z).  The tangent at phi_k moves the pole through its
// (z - phi)^-2 term.
template <class T>
WhithamPoint<Jet<T>> perturb(const WhithamPoint<T>& pt, const std::vector<LaurentSeries<T>>& tangent) {
  if (tangent.size() != static_cast<std::size_t>(pt.m()) + 1)
    throw std::invalid_argument("perturb: one tangent series per lambda is required");
  WhithamPoint<Jet<T>> out;
  auto jet = [](const T& v, const T& d) { return Jet<T>(v, {d}); };
  auto zero = FieldTraits<T>::from_int(0);

  {
    const auto& L = pt.lambda0;
    const auto& t = tangent[0];
    auto v = t.valuation();
    if (v && *v < 1) throw std::invalid_argument("perturb: tangent at infinity must be O(z^-1)");
    const long ord = std::min(L.order(), t.order());
    std::vector<Jet<T>> c;
    for (long i = -1; i < ord; ++i) c.push_back(jet(L.at(i), i < t.low() ? zero : t.at(i)));
    out.lambda0 = LaurentSeries<Jet<T>>(Center<Jet<T>>::infinity(), 1, -1, std::move(c), ord);
  }
  for (int k = 0; k < pt.m(); ++k) {
    const auto& L = pt.lambda[static_cast<std::size_t>(k)];
    const auto& t = tangent[static_cast<std::size_t>(k) + 1];
    auto v = t.valuation();
    if (v && *v < -2) throw std::invalid_argument("perturb: tangent pole order exceeds two");
    const T cm1 = L.at(-1);
    const T dphi = t.at(-2) / cm1;
    const long ord = std::min(t.order(), L.order() - 1);
    std::vector<Jet<T>> c;
    for (long i = -1; i < ord; ++i) {
      // tangent_i = c_i' - phi' (i+1) c_{i+1}
      const T ti = i < t.low() ? zero : t.at(i);
      c.push_back(jet(L.at(i), ti + dphi * FieldTraits<T>::from_int(i + 1) * L.at(i + 1)));
    }
    const Jet<T> phi = jet(pt.phi[static_cast<std::size_t>(k)], dphi);
    out.phi.push_back(phi);
    out.lambda.push_back(LaurentSeries<Jet<T>>(Center<Jet<T>>::at(phi), 1, -1, std::move(c), ord));
  }
  return out;
}

// Flow of the time T^{a}: e,p -> sigma^{0,p+1}/(p+1)!, h0 k,p ->
// sigma^{k,p+1}/(p+1)!, h1 k -> sigma^{k,0}.
template <class T>
std::vector<LaurentSeries<T>> time_flow(const WhithamPoint<Jet<T>>& pt, const SectorIndex& a, std::size_t dir = 0) {
  detail::check_pole(pt.m(), a);
  if (a.kind == Sector::H1) return lax_rhs(pt, Flow{a.k, 0}, dir);
  const T c = FieldTraits<T>::from_rational(Rational(1) / factorial(a.p + 1));
  auto rhs = lax_rhs(pt, Flow{a.kind == Sector::E ? 0 : a.k, a.p + 1}, dir);
  for (auto& s : rhs) s = scale(s, c);
  return rhs;
}

// d theta_b / d T^a - d/dx Omega_{a; b}; zero on every point.
template <class T>
T tau_flow_residual(const WhithamPoint<Jet<T>>& pt, const SectorIndex& a, const SectorIndex& b) {
  WhithamPoint<T> base = pt.map([](const Jet<T>& x) { return x.value(); });
  const T lhs = theta(perturb(base, time_flow(pt, a)), b).part(0);
  const T rhs = jet_derivative(omega(pt, a, b), 0);
  return lhs - rhs;
}

}  // namespace wtl
