#include <doctest.h>

#include "wtl/stabilize.hpp"

using namespace wtl;
using Q = Rational;

namespace {

HurwitzData<Q> sample(const std::vector<int>& n) {
  FlatCoordsH<Q> v;
  for (int j = 1; j < n[0]; ++j) v.u0.push_back(Q(j + 1, 3 + j) * (j % 2 ? 1 : -1));
  for (std::size_t k = 1; k < n.size(); ++k) {
    std::vector<Q> row{Q(static_cast<long>(2 * k) - 5, 2)};
    for (int j = 1; j <= n[k]; ++j) row.push_back(Q(j == 1 ? 2 : j - 3, static_cast<long>(k) + j));
    v.uk.push_back(std::move(row));
  }
  return data_from_flat(n, v);
}

}  // namespace

TEST_CASE("hat index mapping") {
  auto d = sample({3, 2});
  CHECK(to_vindex(d, HatIndex{0, 1}) == VIndex{0, 2});
  CHECK_FALSE(to_vindex(d, HatIndex{0, 0}));
  CHECK_FALSE(to_vindex(d, HatIndex{0, 3}));
  CHECK(to_vindex(d, HatIndex{1, 0}) == VIndex{1, 2});
  CHECK(to_vindex(d, HatIndex{1, 2}) == VIndex{1, 0});
  CHECK(family_of({1, 0}, {1, 2}) == StabFamily::HLogSame);
  CHECK(family_of({0, 1}, {1, 0}) == StabFamily::ELog);
}

TEST_CASE("rescaled entries match the formal structure past threshold") {
  for (const auto& n : std::vector<std::vector<int>>{{2}, {4}, {6}, {3, 2}, {4, 3}, {2, 2, 1}}) {
    auto d = sample(n);
    int hits = 0;
    for (const auto& row : stabilization_report(d, 6, 6)) {
      if (!row.threshold_ok) continue;
      ++hits;
      INFO(to_string(row.a), " ", to_string(row.b), " ", row.lhs.to_string(), " vs ", row.rhs.to_string());
      CHECK(row.deviation == 0);
    }
    CHECK(hits > 0);
  }
}
