#pragma once

// JSON forms.  Coefficients are strings: "p/q" on the rational backend,
// decimal strings on floats (a "p/q" string is accepted there too).
//
//   series        {center: "inf" | coef, denom, low, order: int | "exact", coeffs: [...]}
//                 at infinity index k is the coefficient of z^{-k/denom}
//   rational fn   {poly: [c0, c1, ...], parts: {"loc": [c_{-1}, c_{-2}, ...]}}
//   point         {m, phi: [...], series: [lambda0, lambda1, ...]}
//   hurwitz       {n: [...], a0: [...], poles: [{loc, coeffs, lead_root?}]}
//                 or {n: [...], flat: {v0: [...], vk: [[...], ...]}}
//   even          {np: [...], b0: [...], b1: [...], lead_root1?, pairs: [{b0, root?, b, lead_root?}]}
//                 or {np: [...], flat: {odd0: [...], odd1: [...], pairs: [[...], ...]}}

#include "wtl/even.hpp"
#include "wtl/hurwitz.hpp"
#include "wtl/ratfun.hpp"
#include "wtl/series.hpp"
#include "wtl/whitham.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace wtl {

using json = nlohmann::json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace io {

template <class T>
std::string str(const T& x) {
  return FieldTraits<T>::to_string(x);
}

template <class T>
T num(const json& j) {
  try {
    if (j.is_string()) return FieldTraits<T>::parse(j.get<std::string>());
    if (j.is_number_integer()) return FieldTraits<T>::from_int(j.get<long long>());
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(std::string("bad coefficient: ") + e.what());
  }
  throw InputError("coefficient must be a string or an integer, got " + j.dump());
}

template <class T>
std::vector<T> nums(const json& j) {
  if (!j.is_array()) throw InputError("expected an array of coefficients, got " + j.dump());
  std::vector<T> out;
  for (const auto& x : j) out.push_back(num<T>(x));
  return out;
}

template <class T>
json strs(const std::vector<T>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(str(x));
  return a;
}

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class I>
I integer(const json& j, const char* key) {
  const json& x = field(j, key);
  if (!x.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
  return x.get<I>();
}

}  // namespace io

template <class T>
json to_json(const LaurentSeries<T>& f) {
  json j;
  j["center"] = f.center().infinite ? json("inf") : json(io::str(f.center().loc));
  j["denom"] = f.denom();
  j["low"] = f.low();
  j["order"] = f.exact() ? json("exact") : json(f.order());
  j["coeffs"] = io::strs(f.coeffs());
  return j;
}

template <class T>
LaurentSeries<T> series_from_json(const json& j) {
  const json& c = io::field(j, "center");
  Center<T> center = c == "inf" ? Center<T>::infinity() : Center<T>::at(io::num<T>(c));
  const int denom = j.value("denom", 1);
  const long low = io::integer<long>(j, "low");
  const json& o = io::field(j, "order");
  long order = 0;
  if (o == "exact") order = kExact;
  else if (o.is_number_integer()) order = o.get<long>();
  else throw InputError("series order must be an integer or \"exact\"");
  try {
    return LaurentSeries<T>(center, denom, low, io::nums<T>(io::field(j, "coeffs")), order);
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(std::string("invalid series: ") + e.what());
  }
}

template <class T>
json to_json(const GlobalRational<T>& R) {
  json j;
  j["poly"] = io::strs(R.poly());
  j["parts"] = json::object();
  for (const auto& p : R.parts()) j["parts"][io::str(p.loc)] = io::strs(p.c);
  return j;
}

template <class T>
GlobalRational<T> rational_from_json(const json& j) {
  GlobalRational<T> R = GlobalRational<T>::polynomial(io::nums<T>(j.value("poly", json::array())));
  if (j.contains("parts"))
    for (const auto& [loc, c] : j.at("parts").items()) R.add_part(FieldTraits<T>::parse(loc), io::nums<T>(c));
  return R;
}

template <class T>
json to_json(const WhithamPoint<T>& pt) {
  json j;
  j["m"] = pt.m();
  j["phi"] = io::strs(pt.phi);
  j["series"] = json::array();
  j["series"].push_back(to_json(pt.lambda0));
  for (const auto& L : pt.lambda) j["series"].push_back(to_json(L));
  return j;
}

template <class T>
WhithamPoint<T> point_from_json(const json& j) {
  WhithamPoint<T> pt;
  const int m = io::integer<int>(j, "m");
  pt.phi = io::nums<T>(io::field(j, "phi"));
  const json& s = io::field(j, "series");
  if (!s.is_array() || static_cast<int>(s.size()) != m + 1 || static_cast<int>(pt.phi.size()) != m)
    throw InputError("point needs m phi's and m+1 series");
  pt.lambda0 = series_from_json<T>(s[0]);
  for (int k = 1; k <= m; ++k) pt.lambda.push_back(series_from_json<T>(s[static_cast<std::size_t>(k)]));
  try {
    pt.validate();
  } catch (const std::exception& e) {
    throw InputError(std::string("invalid point: ") + e.what());
  }
  return pt;
}

template <class T>
json to_json(const FlatCoordsH<T>& v) {
  json j;
  j["v0"] = io::strs(v.u0);
  j["vk"] = json::array();
  for (const auto& row : v.uk) j["vk"].push_back(io::strs(row));
  return j;
}

template <class T>
FlatCoordsH<T> flat_from_json(const json& j) {
  FlatCoordsH<T> v;
  v.u0 = io::nums<T>(j.value("v0", json::array()));
  for (const auto& row : j.value("vk", json::array())) v.uk.push_back(io::nums<T>(row));
  return v;
}

template <class T>
json to_json(const HurwitzData<T>& d) {
  json j;
  j["n"] = d.n;
  j["a0"] = io::strs(d.a0);
  j["poles"] = json::array();
  for (const auto& p : d.poles) {
    json q;
    q["loc"] = io::str(p.loc);
    q["coeffs"] = io::strs(p.a);
    if (p.lead_root) q["lead_root"] = io::str(*p.lead_root);
    j["poles"].push_back(q);
  }
  return j;
}

template <class T>
HurwitzData<T> hurwitz_from_json(const json& j) {
  const json& nj = io::field(j, "n");
  if (!nj.is_array() || nj.empty()) throw InputError("profile n must be a non-empty array");
  std::vector<int> n;
  for (const auto& x : nj) {
    if (!x.is_number_integer()) throw InputError("profile entries must be integers");
    n.push_back(x.get<int>());
  }
  try {
    if (j.contains("flat")) return data_from_flat(n, flat_from_json<T>(j.at("flat")));
    HurwitzData<T> d;
    d.n = n;
    d.a0 = io::nums<T>(j.value("a0", json::array()));
    for (const auto& q : j.value("poles", json::array())) {
      HurwitzPole<T> p;
      p.loc = io::num<T>(io::field(q, "loc"));
      p.a = io::nums<T>(io::field(q, "coeffs"));
      if (q.contains("lead_root")) p.lead_root = io::num<T>(q.at("lead_root"));
      else if (!p.a.empty()) p.lead_root = FieldTraits<T>::root(p.a.back(), n.at(d.poles.size() + 1));
      d.poles.push_back(std::move(p));
    }
    d.validate();
    return d;
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(std::string("invalid Hurwitz data: ") + e.what());
  }
}

template <class T>
HurwitzData<T> even_from_json(const json& j) {
  std::vector<int> np;
  for (const auto& x : io::field(j, "np")) {
    if (!x.is_number_integer()) throw InputError("even profile entries must be integers");
    np.push_back(x.get<int>());
  }
  try {
    if (j.contains("flat")) {
      const json& f = j.at("flat");
      EvenFlat<T> e;
      e.odd0 = io::nums<T>(f.value("odd0", json::array()));
      e.odd1 = io::nums<T>(f.value("odd1", json::array()));
      for (const auto& row : f.value("pairs", json::array())) e.pairs.push_back(io::nums<T>(row));
      return even_data_from_flat(np, e);
    }
    EvenHurwitzData<T> e;
    e.np = np;
    e.b0 = io::nums<T>(io::field(j, "b0"));
    e.b1 = io::nums<T>(io::field(j, "b1"));
    if (j.contains("lead_root1")) e.lead_root1 = io::num<T>(j.at("lead_root1"));
    for (const auto& q : j.value("pairs", json::array())) {
      EvenPair<T> p;
      p.b0 = io::num<T>(io::field(q, "b0"));
      if (q.contains("root")) p.root = io::num<T>(q.at("root"));
      p.b = io::nums<T>(io::field(q, "b"));
      if (q.contains("lead_root")) p.lead_root = io::num<T>(q.at("lead_root"));
      e.pairs.push_back(std::move(p));
    }
    HurwitzData<T> d = expand_even(e);
    d.validate();
    return d;
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(std::string("invalid even data: ") + e.what());
  }
}

}  // namespace wtl
