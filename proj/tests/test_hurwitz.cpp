#include <doctest.h>

#include "wtl/hurwitz.hpp"

using namespace wtl;
using Q = Rational;
using H = HurwitzData<Q>;

namespace {

H a_type(std::vector<Q> a0) {
  H d;
  d.n = {static_cast<int>(a0.size()) + 1};
  d.a0 = std::move(a0);
  d.validate();
  return d;
}

}  // namespace

TEST_CASE("superpotential expansions") {
  H d;
  d.n = {1, 1};
  d.poles.push_back({Q(2), {Q(3)}, Q(3)});
  d.validate();
  auto s = superpotential(d, Center<Q>::infinity(), 4);
  CHECK(coeff(s, Q(1)) == 1);
  CHECK(coeff(s, Q(-1)) == 3);
  CHECK(coeff(s, Q(-2)) == 6);
  CHECK(coeff(s, Q(-3)) == 12);
  auto t = superpotential(d, Center<Q>::at(Q(2)), 3);
  CHECK(t.at(-1) == 3);
  CHECK(t.at(0) == 2);
  CHECK(t.at(1) == 1);
  CHECK(t.at(2) == 0);
}

TEST_CASE("flat coordinates of A-type points") {
  const Q a00(5, 3), a01(-2);
  auto v = flat_coords(a_type({a00, a01}));
  CHECK(v.u0.at(0) == a01 / 3);
  CHECK(v.u0.at(1) == a00 / 3);
  CHECK(flat_coords(a_type({a00})).u0.at(0) == a00 / 2);
}

TEST_CASE("flat coordinates round trip through data_from_flat") {
  FlatCoordsH<Q> v;
  v.u0 = {Q(1, 2), Q(-1), Q(2, 3)};
  v.uk = {{Q(1), Q(2), Q(-1), Q(1, 4)}, {Q(-2), Q(-1, 3), Q(5)}};
  H d = data_from_flat({4, 3, 2}, v);
  d.validate();
  auto w = flat_coords(d);
  CHECK(w.u0 == v.u0);
  CHECK(w.uk == v.uk);
  auto pt = embed(d, 8);
  auto u = u_coords(pt);
  for (std::size_t j = 0; j < 3; ++j) CHECK(u.u0.at(j) == v.u0.at(j));
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t j = 0; j < v.uk[k].size(); ++j) CHECK(u.uk.at(k).at(j) == v.uk[k][j]);
}

TEST_CASE("d lambda / d v") {
  H d = a_type({Q(7)});
  auto g = dlambda_dv(d, {0, 1});
  CHECK(g.poly() == std::vector<Q>{Q(2)});
  CHECK(g.parts().empty());

  H e;
  e.n = {1, 1};
  e.poles.push_back({Q(2), {Q(3)}, Q(3)});
  auto h = dlambda_dv(e, {1, 0});
  REQUIRE(h.parts().size() == 1);
  CHECK(h.parts()[0].c == std::vector<Q>{Q(0), Q(3)});
  // the log direction is n_k / (z - a_k)
  auto l = dlambda_dv(e, {1, 1});
  REQUIRE(l.parts().size() == 1);
  CHECK(l.parts()[0].c.at(0) == 1);
}

TEST_CASE("A1 density, entry and metric") {
  const Q a(3, 5);
  H d = a_type({a});
  // lambda^(1/2) = z + a/(2z) - a^2/(8 z^3) + ...: Res_inf = -a/2
  CHECK(theta_H(d, {0, 1}, 0) == -2 * (-a / 2));
  CHECK(omega_H(d, {0, 1}, {0, 1}).scalar() == 2 * a);
  CHECK(metric_H(d, {0, 1}, {0, 1}) == 2);
}

TEST_CASE("A-type metric is antidiagonal and constant") {
  for (const auto& a0 : {std::vector<Q>{Q(1), Q(2), Q(-1)}, std::vector<Q>{Q(-3), Q(1, 2), Q(4)}}) {
    H d = a_type(a0);
    for (int j = 1; j <= 3; ++j)
      for (int l = 1; l <= 3; ++l) CHECK(metric_H(d, {0, j}, {0, l}) == (j + l == 4 ? 4 : 0));
  }
}

TEST_CASE("log entries") {
  H d;
  d.n = {1, 1, 1};
  d.poles.push_back({Q(2), {Q(1)}, Q(1)});
  d.poles.push_back({Q(0), {Q(4)}, Q(4)});
  auto v = omega_H(d, {1, 1}, {2, 1});
  REQUIRE(v.logs().size() == 1);
  CHECK(v.logs()[0].arg == 2);
  CHECK(v.logs()[0].coef == 1);
  auto w = omega_H(d, {2, 1}, {2, 1});
  REQUIRE(w.logs().size() == 1);
  CHECK(w.logs()[0].arg == 4);
  CHECK(theta_H(d, {1, 1}, 0) == 2);
  CHECK_THROWS_AS(theta_H(d, {1, 1}, 1), UnsupportedSector);
}

TEST_CASE("omega_H is symmetric") {
  FlatCoordsH<Q> v;
  v.u0 = {Q(1, 2), Q(-1)};
  v.uk = {{Q(1), Q(2), Q(-1), Q(1, 4)}, {Q(-2), Q(-1, 3), Q(5)}};
  H d = data_from_flat({3, 3, 2}, v);
  auto idx = flat_indices(d);
  for (const auto& A : idx)
    for (const auto& B : idx) {
      CAPTURE(to_string(A));
      CAPTURE(to_string(B));
      CHECK(OmegaValue<Q>::distance(omega_H(d, A, B), omega_H(d, B, A)) == 0);
    }
}
