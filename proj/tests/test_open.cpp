#include <doctest.h>

#include "wtl/open.hpp"

using namespace wtl;
using Q = Rational;

namespace {

HurwitzData<Q> point(const std::vector<int>& n) {
  FlatCoordsH<Q> v;
  for (int j = 1; j < n[0]; ++j) v.u0.push_back(Q(2 * j - 3, 4 + j));
  for (std::size_t k = 1; k < n.size(); ++k) {
    std::vector<Q> row{Q(static_cast<long>(k) * 3 - 4, 2)};
    for (int j = 1; j <= n[k]; ++j) row.push_back(Q(j + 2, j + 1 + static_cast<long>(k)));
    v.uk.push_back(std::move(row));
  }
  return data_from_flat(n, v);
}

WhithamPoint<Q> z_plus(const Q& a1) {
  WhithamPoint<Q> pt;
  pt.lambda0 = LaurentSeries<Q>::exact_terms(Center<Q>::infinity(), -1, {Q(1), Q(0), a1});
  return pt;
}

}  // namespace

TEST_CASE("theta~M on simple points") {
  auto s0 = theta_tilde_M(z_plus(Q(0)), OpenIndex::s(0));
  CHECK(s0.series.at(-1) == 1);
  CHECK(s0.series.at(0) == 0);
  CHECK(s0.series.at(5) == 0);
  auto e0 = theta_tilde_M(z_plus(Q(3)), OpenIndex::e(0));
  CHECK(coeff(e0.series, Q(-1)) == -3);
  CHECK(coeff(e0.series, Q(-2)) == 0);
  CHECK(coeff(e0.series, Q(0)) == 0);
}

TEST_CASE("theta~M_s recursion and the projection identity") {
  auto pt = formal_point(flat_coords(point({3, 2})), 24);
  auto s0 = theta_tilde_M(pt, OpenIndex::s(0));
  for (int p = 0; p <= 5; ++p) {
    auto sp = theta_tilde_M(pt, OpenIndex::s(p));
    auto ep = theta_tilde_M(pt, OpenIndex::e(p));
    auto want = scale(truncate(pow_int(s0.series, p + 1), sp.series.order()), Q(1) / factorial(p + 1));
    CHECK(max_known_difference(sp.series, want) == 0);
    // s + e keeps only the polynomial part
    auto sum = sp.series + ep.series;
    for (long k = 1; k < sum.order(); ++k) CHECK(sum.at(k) == 0);
    for (long k = sum.low(); k < 1; ++k) CHECK(sum.at(k) == sp.series.at(k));
  }
}

TEST_CASE("theta~H families") {
  HurwitzData<Q> a1;
  a1.n = {2};
  a1.a0 = {Q(5)};
  auto t = theta_tilde_H(a1, VIndex{0, 1});
  CHECK(coeff(t.series, Q(1)) == 2);
  CHECK(coeff(t.series, Q(0)) == 0);
  auto d = point({2, 3});
  auto lg = theta_tilde_H(d, VIndex{1, 3});
  REQUIRE(lg.log);
  CHECK(lg.log->coef == 3);
  CHECK(lg.log->loc == d.pole(1).loc);
  CHECK(theta_tilde_H_s(d).eval(Q(7)) == d.lambda().eval(Q(7)));
}

TEST_CASE("open stabilization rows vanish past threshold") {
  for (const auto& n : std::vector<std::vector<int>>{{2}, {5}, {3, 2}, {4, 3, 1}}) {
    int hits = 0;
    for (const auto& row : open_stabilization_report(point(n), 6)) {
      if (!row.threshold_ok) continue;
      ++hits;
      INFO(to_string(row.family), " ", to_string(row.index));
      CHECK(row.max_coeff_dev == 0);
    }
    CHECK(hits > 0);
  }
}

TEST_CASE("open WDVV on small profiles") {
  for (const auto& n : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 1}, {2, 2}}) {
    auto r = open_wdvv_residual(point(n), Q(10));
    INFO(n.size(), " ", n[0]);
    CHECK(r.first == 0);
    CHECK(r.second == 0);
    CHECK(r.mixed == 0);
    CHECK(r.hessian_sym == 0);
  }
}
