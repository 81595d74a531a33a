#include <doctest.h>

#include "wtl/series.hpp"

using namespace wtl;
using Q = Rational;
using S = LaurentSeries<Q>;

namespace {

const Center<Q> kInf = Center<Q>::infinity();
const Center<Q> kZero = Center<Q>::at(Q(0));

}  // namespace

TEST_CASE("square root of 1 + 2w") {
  S f = S::exact_terms(kZero, 0, {Q(1), Q(2)});
  S r = pow_rational(f, Q(1, 2), std::nullopt, 4);
  CHECK(r.order() == 4);
  CHECK(r.at(0) == 1);
  CHECK(r.at(1) == 1);
  CHECK(r.at(2) == Q(-1, 2));
  CHECK(r.at(3) == Q(1, 2));
}

TEST_CASE("reversion at infinity gives the u-coordinates") {
  // lambda = z + a1 z^-1 + a2 z^-2, then z = a - a1 a^-1 - a2 a^-2 - a1^2 a^-3 + ...
  const Q a1(3), a2(-2, 5);
  S lam = S::exact_terms(kInf, -1, {Q(1), Q(0), a1, a2});
  S z = revert(lam, 6);
  CHECK(coeff(z, Q(1)) == 1);
  CHECK(coeff(z, Q(0)) == 0);
  CHECK(coeff(z, Q(-1)) == -a1);
  CHECK(coeff(z, Q(-2)) == -a2);
  CHECK(coeff(z, Q(-3)) == -a1 * a1);
  // composing back is the identity through the known order
  S id = compose(lam, z, 6);
  CHECK(coeff(id, Q(1)) == 1);
  for (int e = 0; e >= -3; --e) CHECK(coeff(id, Q(e)) == 0);
}

TEST_CASE("truncation is tracked through products") {
  S f(kZero, 1, -1, {Q(1), Q(2), Q(3)}, 2);  // t^-1 + 2 + 3t + O(t^2)
  S g = f * f;
  CHECK(g.low() == -2);
  CHECK(g.order() == 1);
  CHECK(g.at(0) == 4 + 6);
  CHECK_THROWS_AS(g.at(1), TruncationError);
  CHECK(residue(S(kZero, 1, 0, {}, 0)) == 0);
  CHECK_THROWS_AS(residue(S::unknown(kZero, -3)), TruncationError);
}

TEST_CASE("derivative and residue at infinity") {
  S f = S::exact_terms(kInf, -2, {Q(1), Q(0), Q(0), Q(5)});  // z^2 + 5 z^-1
  CHECK(residue(f) == -5);
  S d = derive(f);
  CHECK(coeff(d, Q(1)) == 2);
  CHECK(coeff(d, Q(-2)) == -5);
  CHECK(residue(d) == 0);
}

TEST_CASE("puiseux root and its power") {
  S f = S::exact_terms(kInf, -3, {Q(1), Q(0), Q(1), Q(2)});  // z^3 + z + 2
  S r = pow_rational(f, Q(1, 3), std::nullopt, 8);
  S back = pow_int(r, 3);
  CHECK(coeff(back, Q(3)) == 1);
  CHECK(coeff(back, Q(2)) == 0);
  CHECK(coeff(back, Q(1)) == 1);
  CHECK(coeff(back, Q(0)) == 2);
  CHECK(coeff(back, Q(-1)) == 0);
}

TEST_CASE("reversion at a finite pole lands at infinity") {
  // f = 2/(z-1) + 3 + 4(z-1)
  S f = S::exact_terms(Center<Q>::at(Q(1)), -1, {Q(2), Q(3), Q(4)});
  S z = revert(f, 5);
  CHECK(z.center().infinite);
  S back = compose(f, z, 5);
  CHECK(coeff(back, Q(1)) == 1);
  CHECK(coeff(back, Q(0)) == 0);
  CHECK(coeff(back, Q(-1)) == 0);
  CHECK(coeff(back, Q(-2)) == 0);
  // and the third shape inverts the second
  S w = revert(z, 5);
  CHECK(!w.center().infinite);
  CHECK(w.at(-1) == 2);
  CHECK(w.at(0) == 3);
  CHECK(w.at(1) == 4);
}
