#include <doctest.h>

#include "wtl/lax.hpp"

using namespace wtl;
using Q = Rational;
using J = Jet<Q>;
using SJ = LaurentSeries<J>;

namespace {

J xj(long v, long d) { return J(Q(v), {Q(d)}); }
J xj(Q v, Q d) { return J(v, {d}); }

// x-jet point: lambda0 = z + sum a_j z^-j, lambda_k around phi_k(x)
WhithamPoint<J> jet_point(long order) {
  WhithamPoint<J> pt;
  std::vector<J> l0{xj(1, 0), xj(0, 0)};
  for (long j = 1; j < order; ++j) l0.push_back(xj(Q(j % 3 + 1, j + 1), Q(2 - j % 4, 3)));
  pt.lambda0 = SJ(Center<J>::infinity(), 1, -1, l0, order);
  const std::vector<J> phis{xj(1, 2), xj(-2, 1)};
  for (std::size_t k = 0; k < phis.size(); ++k) {
    std::vector<J> c;
    for (long j = -1; j <= order - 1; ++j)
      c.push_back(xj(Q(static_cast<long>(k) + 2 - j % 3, 1 + (j + 3) % 4), Q((j * 5 + static_cast<long>(k)) % 7 - 3, 2)));
    pt.phi.push_back(phis[k]);
    pt.lambda.push_back(SJ(Center<J>::at(phis[k]), 1, -1, c, order));
  }
  return pt;
}

}  // namespace

TEST_CASE("x flow is the first time") {
  auto pt = jet_point(10);
  auto rhs = lax_rhs(pt, Flow{0, 1});
  auto dx = x_derivative(pt.lambda0);
  CHECK(max_known_difference(rhs[0], dx) == 0);
  for (int k = 0; k < 2; ++k)
    CHECK(max_known_difference(rhs[static_cast<std::size_t>(k) + 1], x_derivative(pt.lambda[static_cast<std::size_t>(k)])) == 0);
}

TEST_CASE("flows vanish on x-independent points") {
  auto pt = jet_point(8).map([](const J& x) { return J(x.value(), {Q(0)}); });
  for (Flow f : {Flow{0, 2}, Flow{1, 1}, Flow{2, 0}})
    for (const auto& s : lax_rhs(pt, f))
      for (const auto& c : s.coeffs()) CHECK(c == 0);
}

TEST_CASE("second flow on lambda0") {
  // lambda0 = z + a1(x) z^-1: d lambda0 / d sigma^{0,2} starts at 2 a1' z^-1 ... with no z^0 term
  std::vector<J> l0{xj(1, 0), xj(0, 0), xj(3, 5), xj(0, 0), xj(0, 0), xj(0, 0)};
  WhithamPoint<J> pt;
  pt.lambda0 = SJ(Center<J>::infinity(), 1, -1, l0, 5);
  auto rhs = lax_rhs(pt, Flow{0, 2});
  CHECK(coeff(rhs[0], Q(0)) == 0);
  // generator z^2 + 2 a1: 2z * a1' z^-1 - 2 a1' (1 - a1 z^-2) = 2 a1 a1' z^-2
  CHECK(coeff(rhs[0], Q(-1)) == 0);
  CHECK(coeff(rhs[0], Q(-2)) == 2 * 3 * 5);
}

TEST_CASE("tau flow residual vanishes") {
  auto pt = jet_point(18);
  std::vector<SectorIndex> idx;
  for (int p = 0; p <= 2; ++p) {
    idx.push_back(SectorIndex::e(p));
    idx.push_back(SectorIndex::h0(1, p));
    idx.push_back(SectorIndex::h0(2, p));
  }
  idx.push_back(SectorIndex::h1(1));
  idx.push_back(SectorIndex::h1(2));
  // both sides are nonzero in general
  CHECK(jet_derivative(omega(pt, SectorIndex::h0(1, 1), SectorIndex::e(1)), 0) != 0);
  for (const auto& a : idx) {
    for (const auto& b : idx) {
      CAPTURE(to_string(a));
      CAPTURE(to_string(b));
      CHECK(tau_flow_residual(pt, a, b) == 0);
    }
  }
}
