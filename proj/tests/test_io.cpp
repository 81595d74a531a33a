#include <doctest.h>

#include "wtl/io.hpp"
#include "wtl/random.hpp"

using namespace wtl;
using Q = Rational;

TEST_CASE("series json round trip") {
  auto f = LaurentSeries<Q>(Center<Q>::at(Q(3, 2)), 1, -2, {Q(1), Q(-1, 3), Q(0), Q(5)}, 2);
  auto g = series_from_json<Q>(to_json(f));
  CHECK(g.center().loc == Q(3, 2));
  CHECK(g.low() == -2);
  CHECK(g.order() == 2);
  CHECK(max_known_difference(f, g) == 0);
  auto e = series_from_json<Q>(json::parse(R"({"center":"inf","low":-1,"order":"exact","coeffs":["1",2,"1/2"]})"));
  CHECK(e.exact());
  CHECK(e.at(1) == Q(1, 2));
}

TEST_CASE("malformed input raises InputError") {
  CHECK_THROWS_AS(series_from_json<Q>(json::parse(R"({"low":0,"order":1,"coeffs":["1"]})")), InputError);
  CHECK_THROWS_AS(series_from_json<Q>(json::parse(R"({"center":"inf","low":0,"order":1,"coeffs":[1.5]})")), InputError);
  CHECK_THROWS_AS(series_from_json<Q>(json::parse(R"({"center":"inf","low":0,"order":"x","coeffs":["1"]})")), InputError);
  CHECK_THROWS_AS(hurwitz_from_json<Q>(json::parse(R"({"n":[2,1],"a0":["1"],"poles":[{"loc":"0","coeffs":["0"]}]})")),
                  InputError);
  CHECK_THROWS_AS(point_from_json<Q>(json::parse(R"({"m":1,"phi":[],"series":[]})")), InputError);
}

TEST_CASE("point and hurwitz data survive a round trip") {
  Sampler s(3);
  auto pt = random_point<Q>(s, 2, 6);
  auto back = point_from_json<Q>(to_json(pt));
  REQUIRE(back.m() == 2);
  CHECK(max_known_difference(back.lambda0, pt.lambda0) == 0);
  for (int k = 0; k < 2; ++k) CHECK(max_known_difference(back.lambda[k], pt.lambda[k]) == 0);

  auto d = random_hurwitz<Q>(s, {3, 2});
  auto e = hurwitz_from_json<Q>(to_json(d));
  CHECK(e.n == d.n);
  CHECK(e.a0 == d.a0);
  CHECK(e.pole(1).a == d.pole(1).a);
  CHECK(e.pole(1).loc == d.pole(1).loc);

  json flat = {{"n", {3, 2}}, {"flat", to_json(flat_coords(d))}};
  auto f = hurwitz_from_json<Q>(flat);
  CHECK(f.a0 == d.a0);
}

TEST_CASE("even data from json") {
  json j = json::parse(R"({"np":[1,1,1],"flat":{"odd0":["1/2"],"odd1":["2"],"pairs":[["1","3/2"]]}})");
  auto d = even_from_json<Q>(j);
  CHECK(d.n == std::vector<int>{2, 2, 1, 1});
  CHECK(parity_defect(d) == 0);
}

TEST_CASE("sampler streams are reproducible") {
  Sampler a(11, 5), b(11, 5), c(11, 6);
  std::vector<Q> xa, xb, xc;
  for (int i = 0; i < 8; ++i) {
    xa.push_back(a.rational());
    xb.push_back(b.rational());
    xc.push_back(c.rational());
  }
  CHECK(xa == xb);
  CHECK(xa != xc);
  for (const auto& x : xa) {
    CHECK(abs(numerator(x)) <= 9);
    CHECK(denominator(x) <= 9);
  }
  auto v = Sampler(1).distinct(5, 4);
  std::sort(v.begin(), v.end());
  CHECK(std::adjacent_find(v.begin(), v.end()) == v.end());
}

TEST_CASE("random even flat gives symmetric data") {
  Sampler s(8);
  for (const auto& np : std::vector<std::vector<int>>{{1, 1}, {2, 2, 1}, {1, 2, 2, 1}}) {
    auto d = even_data_from_flat(np, random_even_flat<Q>(s, np));
    CHECK_NOTHROW(require_even(d));
  }
}
