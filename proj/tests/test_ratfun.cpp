#include <doctest.h>

#include "wtl/ratfun.hpp"

using namespace wtl;
using Q = Rational;
using R = GlobalRational<Q>;
using S = LaurentSeries<Q>;

namespace {
const Center<Q> kInf = Center<Q>::infinity();
Center<Q> at(long v) { return Center<Q>::at(Q(v)); }
}  // namespace

TEST_CASE("geometric re-expansions") {
  R f = R::pole(Q(1), {Q(1)});
  S a = expand_at(f, kInf, 4);
  CHECK(coeff(a, Q(-1)) == 1);
  CHECK(coeff(a, Q(-2)) == 1);
  CHECK(coeff(a, Q(-3)) == 1);
  CHECK(coeff(a, Q(0)) == 0);
  S b = expand_at(f, at(0), 3);
  CHECK(b.at(0) == -1);
  CHECK(b.at(1) == -1);
  CHECK(b.at(2) == -1);
  S c = expand_at(R::pole(Q(2), {Q(1)}), at(3), 2);
  CHECK(c.at(0) == 1);
  CHECK(c.at(1) == -1);
}

TEST_CASE("partial fraction residues") {
  // 1/(z(z-1)) = -1/z + 1/(z-1)
  R f = R::pole(Q(0), {Q(-1)}) + R::pole(Q(1), {Q(1)});
  CHECK(residue_at(f, at(0)) == -1);
  CHECK(residue_at(f, at(1)) == 1);
  CHECK(residue_at(f, kInf) == 0);
  CHECK(residue_sum(R::pole(Q(1), {Q(1)})) == 0);
  CHECK(residue_at(R::pole(Q(1), {Q(1)}), kInf) == -1);
  CHECK(residue_sum(R::pole(Q(2), {Q(0), Q(1)})) == 0);
  CHECK(residue_at(R::polynomial({Q(1), Q(2)}), at(5)) == 0);
}

TEST_CASE("principal and polynomial projections") {
  S f = S::exact_terms(at(4), -2, {Q(1), Q(0), Q(3), Q(1)});
  R p = principal_part_at(f);
  REQUIRE(p.parts().size() == 1);
  CHECK(p.parts()[0].c == std::vector<Q>{Q(0), Q(1)});
  CHECK(principal_part_at(S::exact_terms(at(4), 0, {Q(2)})).parts().empty());

  S g = S::exact_terms(kInf, -2, {Q(1), Q(0), Q(2), Q(1)});  // z^2 + 2 + z^-1
  R q = polynomial_part(g);
  CHECK(q.poly() == std::vector<Q>{Q(2), Q(0), Q(1)});

  // lambda = z^2 + a, lambda^(1/2) at infinity has polynomial part z
  const Q a(7);
  S lam = S::exact_terms(kInf, -2, {Q(1), Q(0), a});
  S root = pow_rational(lam, Q(1, 2), std::nullopt, 6);
  CHECK(polynomial_part(root).poly() == std::vector<Q>{Q(0), Q(1)});
  CHECK(coeff(root, Q(-1)) == a / 2);
  CHECK(coeff(root, Q(-3)) == -a * a / 8);
}

TEST_CASE("expansion at own pole keeps the principal part") {
  R f = R::pole(Q(2), {Q(3), Q(5)}) + R::pole(Q(-1), {Q(1)}) + R::polynomial({Q(1), Q(1)});
  S e = expand_at(f, at(2), 4);
  R back = principal_part_at(e);
  REQUIRE(back.parts().size() == 1);
  CHECK(back.parts()[0].c == std::vector<Q>{Q(3), Q(5)});
  // regular part: 1/(z+1) + 1 + z at z = 2 is 1/3 + 3
  CHECK(e.at(0) == Q(1, 3) + 3);
  // the series agrees with direct evaluation of the derivative at a regular point
  S d = expand_at(f.derive(), at(5), 3);
  S e5 = expand_at(f, at(5), 4);
  CHECK(d.at(0) == derive(e5).at(0));
  CHECK(d.at(1) == derive(e5).at(1));
  CHECK(e5.at(0) == f.eval(Q(5)));
}
