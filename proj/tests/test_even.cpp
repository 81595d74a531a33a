#include <doctest.h>

#include "wtl/even.hpp"

using namespace wtl;
using Q = Rational;

namespace {

EvenFlat<Q> flat(const std::vector<int>& np) {
  EvenFlat<Q> e;
  for (int j = 0; j < np[0]; ++j) e.odd0.push_back(Q(2 * j + 1, 5 - j) * (j % 2 ? -1 : 1));
  for (int j = 0; j < np[1]; ++j) e.odd1.push_back(Q(j + 2, 3 + 2 * j));
  for (std::size_t i = 2; i < np.size(); ++i) {
    std::vector<Q> row{Q(static_cast<long>(i) + 1, 2)};
    for (int j = 1; j <= np[i]; ++j) row.push_back(Q(j == 1 ? 3 : j - 4, j + static_cast<long>(i)));
    e.pairs.push_back(std::move(row));
  }
  return e;
}

}  // namespace

TEST_CASE("expand_even: partial fractions and parity") {
  EvenHurwitzData<Q> e;
  e.np = {2, 2, 1, 2};
  e.b0 = {Q(1, 3), Q(-2)};
  e.b1 = {Q(5), Q(16)};
  e.pairs = {{Q(4), Q(2), {Q(4)}, std::nullopt}, {Q(9, 4), Q(3, 2), {Q(1), Q(36)}, std::nullopt}};
  auto d = expand_even(e);
  d.validate();
  for (Q z : {Q(7), Q(-1, 3), Q(5, 2), Q(11, 7)}) CHECK(d.lambda().eval(z) == e.eval(z));
  CHECK(parity_defect(d) == 0);
  CHECK(even_constraint_defect(d) == 0);
  CHECK_NOTHROW(require_even(d));

  // the simplest pair: 1/(z^2-b) = (1/(2r)) [1/(z-r) - 1/(z+r)]
  EvenHurwitzData<Q> s;
  s.np = {1, 1, 1};
  s.b0 = {Q(0)};
  s.b1 = {Q(1)};
  s.pairs = {{Q(9), Q(3), {Q(1)}, Q(1, 6)}};
  auto ds = expand_even(s);
  CHECK(ds.pole(2).a.at(0) == Q(1, 6));
  CHECK(ds.pole(3).a.at(0) == Q(-1, 6));
}

TEST_CASE("asymmetric input is rejected") {
  FlatCoordsH<Q> v = expand_flat({1, 1, 1}, flat({1, 1, 1}));
  v.u0.at(0) += 1;  // still fine: v_{0,1} is free
  v.uk.at(2).at(1) += 2;
  CHECK_THROWS_AS(require_even(data_from_flat(full_profile({1, 1, 1}), v)), EvenConstraintError);
}

TEST_CASE("even points from flat coordinates") {
  for (const auto& np : std::vector<std::vector<int>>{{1, 1}, {2, 1}, {2, 2, 1}, {1, 1, 2, 1}}) {
    auto d = even_data_from_flat(np, flat(np));
    CHECK(parity_defect(d) == 0);
    CHECK(even_constraint_defect(d) == 0);
    CHECK(even_point_defect(embed(d, 10)) == 0);
    CHECK(even_point_defect(formal_point(flat_coords(d), 12)) == 0);
  }
}

TEST_CASE("Omega even: both evaluations agree") {
  for (const auto& np : std::vector<std::vector<int>>{{2, 1}, {2, 1, 2}, {1, 2, 1, 1}}) {
    auto d = even_data_from_flat(np, flat(np));
    auto idx = even_flat_indices(d);
    for (const auto& a : idx)
      for (const auto& b : idx) CHECK(OmegaValue<Q>::distance(omega_even(d, a, b), omega_even_reduced(d, a, b)) == 0);
  }
}

TEST_CASE("even stabilization and even open rows") {
  for (const auto& np : std::vector<std::vector<int>>{{2, 2}, {3, 2}, {2, 2, 2}, {2, 1, 1}}) {
    auto d = even_data_from_flat(np, flat(np));
    int hits = 0;
    for (const auto& r : even_stabilization_report(d, 5, 5)) {
      if (!r.threshold_ok) continue;
      ++hits;
      CHECK(r.deviation == 0);
    }
    for (const auto& r : even_open_report(d, 5)) {
      if (!r.threshold_ok) continue;
      ++hits;
      CHECK(r.max_coeff_dev == 0);
    }
    CHECK(hits > 0);
  }
}

TEST_CASE("formal even reduction rules") {
  auto d = even_data_from_flat({2, 1, 1}, flat({2, 1, 1}));
  auto pt = formal_point(flat_coords(d), 14);
  CHECK(OmegaValue<Q>::distance(omega_even_M(pt, SectorIndex::e(0), SectorIndex::h0(1, 2)),
                                omega(pt, SectorIndex::e(0), SectorIndex::h0(1, 2))) == 0);
  auto four = omega(pt, SectorIndex::h0(2, 1), SectorIndex::h0(2, 0)) - omega(pt, SectorIndex::h0(2, 1), SectorIndex::h0(3, 0)) -
              omega(pt, SectorIndex::h0(3, 1), SectorIndex::h0(2, 0)) + omega(pt, SectorIndex::h0(3, 1), SectorIndex::h0(3, 0));
  CHECK(OmegaValue<Q>::distance(omega_even_M(pt, SectorIndex::h0(2, 1), SectorIndex::h0(2, 0)), four) == 0);
  // entries the reduction discards cancel under z -> -z: the pair sum at
  // even e-level, the pair difference at odd e-level
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 2; ++q) {
      auto x = omega(pt, SectorIndex::e(p), SectorIndex::h0(2, q));
      auto y = omega(pt, SectorIndex::e(p), SectorIndex::h0(3, q));
      CHECK(OmegaValue<Q>::distance(p % 2 ? x - y : x + y, OmegaValue<Q>()) == 0);
    }
  CHECK_THROWS_AS(omega_even_M(pt, SectorIndex::e(1), SectorIndex::e(0)), UnsupportedSector);
}
