#include <doctest.h>

#include "wtl/wdvv.hpp"

using namespace wtl;
using Q = Rational;

namespace {

HurwitzData<Q> point(const std::vector<int>& n, int seed) {
  FlatCoordsH<Q> v;
  for (int j = 1; j < n[0]; ++j) v.u0.push_back(Q(seed + 2 * j, 5 + j) - 1);
  for (std::size_t k = 1; k < n.size(); ++k) {
    std::vector<Q> row{Q(3 * static_cast<long>(k) - seed, 4)};
    for (int j = 1; j <= n[k]; ++j) row.push_back(Q(seed + j, 2 + j + static_cast<long>(k)));
    v.uk.push_back(std::move(row));
  }
  return data_from_flat(n, v);
}

}  // namespace

TEST_CASE("structure constants: jets agree with the residue formula") {
  for (const auto& n : std::vector<std::vector<int>>{{3}, {4}, {2, 2}, {1, 1}, {2, 1, 1}}) {
    auto d = point(n, 1);
    auto c = structure_constants(d);
    CHECK(max_difference(c, structure_constants_residue(d)) == 0);
    CHECK(symmetry_defect(c) == 0);
  }
}

TEST_CASE("WDVV holds exactly on rational points") {
  for (const auto& n : std::vector<std::vector<int>>{{3}, {4}, {2, 2}, {3, 1}, {2, 1, 1}})
    for (int seed = 1; seed <= 2; ++seed) {
      auto d = point(n, seed);
      auto eta = metric_matrix(d);
      CHECK(wdvv_residual(structure_constants(d), inverse(eta)) == 0);
    }
}

TEST_CASE("matrix inverse") {
  Matrix<Q> A{{Q(0), Q(2)}, {Q(3), Q(1)}};
  auto B = inverse(A);
  CHECK(B[0][0] == Q(-1, 6));
  CHECK(B[0][1] == Q(1, 3));
  CHECK(B[1][0] == Q(1, 2));
  CHECK(B[1][1] == 0);
  CHECK_THROWS(inverse(Matrix<Q>{{Q(1), Q(2)}, {Q(2), Q(4)}}));
}
