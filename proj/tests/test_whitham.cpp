#include <doctest.h>

#include "wtl/whitham.hpp"

using namespace wtl;
using Q = Rational;
using S = LaurentSeries<Q>;

namespace {

const Center<Q> kInf = Center<Q>::infinity();

// lambda0 = z + sum a[j-1] z^-j, lambda_k = sum c[i] (z-phi)^(i-1), all truncated at `order`
WhithamPoint<Q> make_point(const std::vector<Q>& a, const std::vector<std::pair<Q, std::vector<Q>>>& poles,
                           long order = 10) {
  WhithamPoint<Q> pt;
  std::vector<Q> l0{Q(1), Q(0)};
  for (const auto& x : a) l0.push_back(x);
  l0.resize(static_cast<std::size_t>(order + 1), Q(0));
  pt.lambda0 = S(kInf, 1, -1, l0, order);
  for (const auto& [phi, c] : poles) {
    std::vector<Q> v = c;
    v.resize(static_cast<std::size_t>(order + 1), Q(0));
    pt.phi.push_back(phi);
    pt.lambda.push_back(S(Center<Q>::at(phi), 1, -1, v, order));
  }
  pt.validate();
  return pt;
}

}  // namespace

TEST_CASE("u-coordinates by reversion") {
  const Q a1(2), a2(-3, 7);
  auto pt = make_point({a1, a2}, {{Q(1), {Q(3), Q(4)}}});
  auto u = u_coords(pt);
  CHECK(u.u0.at(0) == a1);
  CHECK(u.u0.at(1) == a2);
  CHECK(u.u0.at(2) == a1 * a1);
  CHECK(u.uk.at(0).at(0) == 1);
  CHECK(u.uk.at(0).at(1) == 3);
  CHECK(u.uk.at(0).at(2) == 12);

  auto back = u_coords(point_of_u(u));
  for (std::size_t j = 0; j < 6; ++j) CHECK(back.u0.at(j) == u.u0.at(j));
  for (std::size_t j = 0; j < 6; ++j) CHECK(back.uk.at(0).at(j) == u.uk.at(0).at(j));
}

TEST_CASE("densities match the u-coordinates") {
  auto pt = make_point({Q(1), Q(2), Q(-1), Q(1, 2)}, {{Q(-2), {Q(3), Q(1), Q(5), Q(-1)}}});
  auto u = u_coords(pt);
  CHECK(theta(pt, SectorIndex::e(0)) == 1);
  for (int p = 0; p <= 5; ++p) {
    CHECK(theta(pt, SectorIndex::e(p)) == u.u0.at(static_cast<std::size_t>(p)) / factorial(p));
    CHECK(theta(pt, SectorIndex::h0(1, p)) == u.uk.at(0).at(static_cast<std::size_t>(p + 1)) / factorial(p));
  }
  CHECK(theta(pt, SectorIndex::h1(1)) == -2);
}

TEST_CASE("closed-form entries") {
  auto pt = make_point({Q(7)}, {{Q(0), {Q(1), Q(0), Q(5)}}});
  CHECK(omega(pt, SectorIndex::h0(1, 0), SectorIndex::h0(1, 0)).scalar() == 5);
  CHECK(omega(pt, SectorIndex::e(0), SectorIndex::e(0)).scalar() == 7);
  auto l = omega(pt, SectorIndex::h1(1), SectorIndex::h1(1));
  REQUIRE(l.logs().size() == 1);
  CHECK(l.logs()[0].arg == 1);

  auto pt2 = make_point({}, {{Q(3), {Q(2)}}, {Q(0), {Q(1)}}});
  auto v = omega(pt2, SectorIndex::h1(1), SectorIndex::h1(2));
  REQUIRE(v.logs().size() == 1);
  CHECK(v.logs()[0].arg == 3);
  CHECK(v.scalar() == 0);
  CHECK(omega(pt2, SectorIndex::e(0), SectorIndex::h1(1)).scalar() == 3);
  CHECK_THROWS_AS(theta(pt2, SectorIndex{Sector::H1, 1, 1}), UnsupportedSector);
}

TEST_CASE("symmetry and the transfer path agree") {
  auto pt = make_point({Q(1, 2), Q(-1), Q(2), Q(3, 4), Q(1)},
                       {{Q(1), {Q(2), Q(-1), Q(1, 3), Q(2), Q(1)}}, {Q(-1), {Q(-3), Q(2), Q(1), Q(0), Q(1, 5)}}}, 16);
  std::vector<SectorIndex> idx;
  for (int p = 0; p <= 3; ++p) {
    idx.push_back(SectorIndex::e(p));
    idx.push_back(SectorIndex::h0(1, p));
    idx.push_back(SectorIndex::h0(2, p));
  }
  idx.push_back(SectorIndex::h1(1));
  idx.push_back(SectorIndex::h1(2));
  for (const auto& a : idx) {
    for (const auto& b : idx) {
      CAPTURE(to_string(a));
      CAPTURE(to_string(b));
      auto ab = omega(pt, a, b);
      CHECK(OmegaValue<Q>::distance(ab, omega(pt, b, a)) == 0);
      CHECK(OmegaValue<Q>::distance(ab, omega_transfer(pt, a, b)) == 0);
    }
  }
}

TEST_CASE("dependence table") {
  auto d = dependence_indices(SectorIndex::h0(2, 1), SectorIndex::h0(2, 2));
  CHECK(d.size() == 7);
  CHECK(d.count({2, 6}) == 1);
  auto e = dependence_indices(SectorIndex::e(1), SectorIndex::e(2));
  CHECK(e == std::set<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  auto l = dependence_indices(SectorIndex::e(3), SectorIndex::h1(1));
  CHECK(l == std::set<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 0}});
  CHECK(parse_sector("h0:2:3") == SectorIndex::h0(2, 3));
  CHECK_THROWS(parse_sector("h2:1"));
}
