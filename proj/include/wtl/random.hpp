#pragma once

// Seeded random inputs.  Coefficients are p/q with p in [-9, 9] and q in
// [1, 9]; pole locations are distinct small integers.

#include "wtl/even.hpp"
#include "wtl/hurwitz.hpp"
#include "wtl/jet.hpp"
#include "wtl/whitham.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace wtl {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  // independent stream per case, so a single case can be replayed
  Sampler(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq q{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    rng_.seed(q);
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational() { return Rational(uniform(-9, 9), uniform(1, 9)); }
  Rational nonzero() {
    Rational r;
    do r = rational();
    while (r == 0);
    return r;
  }

  // distinct integers in [-lim, lim]
  std::vector<int> distinct(int count, int lim) {
    std::vector<int> pool;
    for (int x = -lim; x <= lim; ++x) pool.push_back(x);
    std::shuffle(pool.begin(), pool.end(), rng_);
    pool.resize(static_cast<std::size_t>(count));
    return pool;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

template <class T>
T from_q(const Rational& r) {
  return FieldTraits<T>::from_rational(r);
}

// u-coordinates with `terms` entries for u0 and terms+1 per pole row.
template <class T>
UCoords<T> random_u(Sampler& s, int m, std::size_t terms) {
  UCoords<T> u;
  for (std::size_t j = 0; j < terms; ++j) u.u0.push_back(from_q<T>(s.rational()));
  const auto phis = s.distinct(m, 4);
  for (int k = 0; k < m; ++k) {
    std::vector<T> row{FieldTraits<T>::from_int(phis[static_cast<std::size_t>(k)]), from_q<T>(s.nonzero())};
    for (std::size_t j = 2; j <= terms; ++j) row.push_back(from_q<T>(s.rational()));
    u.uk.push_back(std::move(row));
  }
  return u;
}

template <class T>
WhithamPoint<T> random_point(Sampler& s, int m, std::size_t terms) {
  return point_of_u(random_u<T>(s, m, terms));
}

// Point whose coefficients carry one random x-derivative each.
template <class T>
WhithamPoint<Jet<T>> random_jet_point(Sampler& s, int m, long order) {
  auto xj = [&](const Rational& v) { return Jet<T>(from_q<T>(v), {from_q<T>(s.rational())}); };
  WhithamPoint<Jet<T>> pt;
  std::vector<Jet<T>> l0{Jet<T>(FieldTraits<T>::from_int(1), {FieldTraits<T>::from_int(0)}),
                         Jet<T>(FieldTraits<T>::from_int(0), {FieldTraits<T>::from_int(0)})};
  for (long j = 1; j < order; ++j) l0.push_back(xj(s.rational()));
  pt.lambda0 = LaurentSeries<Jet<T>>(Center<Jet<T>>::infinity(), 1, -1, std::move(l0), order);
  const auto phis = s.distinct(m, 4);
  for (int k = 0; k < m; ++k) {
    const Jet<T> phi = xj(Rational(phis[static_cast<std::size_t>(k)]));
    std::vector<Jet<T>> c{xj(s.nonzero())};
    for (long j = 0; j < order; ++j) c.push_back(xj(s.rational()));
    pt.phi.push_back(phi);
    pt.lambda.push_back(LaurentSeries<Jet<T>>(Center<Jet<T>>::at(phi), 1, -1, std::move(c), order));
  }
  return pt;
}

template <class T>
FlatCoordsH<T> random_flat(Sampler& s, const std::vector<int>& n) {
  FlatCoordsH<T> v;
  for (int j = 1; j < n.at(0); ++j) v.u0.push_back(from_q<T>(s.rational()));
  const auto locs = s.distinct(static_cast<int>(n.size()) - 1, 4);
  for (std::size_t k = 1; k < n.size(); ++k) {
    std::vector<T> row{FieldTraits<T>::from_int(locs[k - 1]), from_q<T>(s.nonzero())};
    for (int j = 2; j <= n[k]; ++j) row.push_back(from_q<T>(s.rational()));
    v.uk.push_back(std::move(row));
  }
  return v;
}

template <class T>
HurwitzData<T> random_hurwitz(Sampler& s, const std::vector<int>& n) {
  return data_from_flat(n, random_flat<T>(s, n));
}

template <class T>
EvenFlat<T> random_even_flat(Sampler& s, const std::vector<int>& np) {
  EvenFlat<T> e;
  for (int j = 0; j < np.at(0); ++j) e.odd0.push_back(from_q<T>(s.rational()));
  for (int j = 0; j < np.at(1); ++j) e.odd1.push_back(from_q<T>(j == 0 ? s.nonzero() : s.rational()));
  // pairs sit at +-r with r positive and distinct
  auto rs = s.distinct(static_cast<int>(np.size()) - 2, 4);
  for (auto& r : rs) r = std::abs(r) + 1;
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  for (int r = 1; rs.size() + 2 < np.size(); ++r)
    if (std::find(rs.begin(), rs.end(), r) == rs.end()) rs.push_back(r);
  for (std::size_t i = 2; i < np.size(); ++i) {
    std::vector<T> row{FieldTraits<T>::from_int(rs[i - 2]), from_q<T>(s.nonzero())};
    for (int j = 2; j <= np[i]; ++j) row.push_back(from_q<T>(s.rational()));
    e.pairs.push_back(std::move(row));
  }
  return e;
}

}  // namespace wtl
