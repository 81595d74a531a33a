#include "verify_detail.hpp"
#include "wtl/lax.hpp"
#include "wtl/random.hpp"

namespace wtl {

using vdetail::Check;
using Q = Rational;

namespace {

std::vector<SectorIndex> sector_indices(int m, int pmax) {
  std::vector<SectorIndex> out;
  for (int p = 0; p <= pmax; ++p) out.push_back(SectorIndex::e(p));
  for (int k = 1; k <= m; ++k) {
    for (int p = 0; p <= pmax; ++p) out.push_back(SectorIndex::h0(k, p));
    out.push_back(SectorIndex::h1(k));
  }
  return out;
}

json u_json(const UCoords<Q>& u) {
  json j;
  j["u0"] = io::strs(u.u0);
  j["uk"] = json::array();
  for (const auto& r : u.uk) j["uk"].push_back(io::strs(r));
  return j;
}

}  // namespace

json to_json(const CheckResult& r) {
  json j;
  j["name"] = r.name;
  j["pass"] = r.pass;
  j["detail"] = r.detail;
  if (!r.failing_case.is_null()) j["failing_case"] = r.failing_case;
  return j;
}

std::string summary_line(const CheckResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail;
  return os.str();
}

std::vector<CheckResult> check_tau_symmetry(const VerifyOptions& o, int points) {
  Check sym("omega symmetry", o), transfer("omega pole side equals infinity side", o);
  for (int i = 0; i < points; ++i) {
    if (!vdetail::selected(o, i)) continue;
    Sampler s(o.seed, 100000 + static_cast<std::uint64_t>(i));
    const int m = i % 4;
    auto pt = random_point<Q>(s, m, 14);
    auto head = [&](const SectorIndex& a, const SectorIndex& b) {
      json j = vdetail::case_header("whitham", o, i);
      j["a"] = to_string(a);
      j["b"] = to_string(b);
      j["point"] = to_json(pt);
      return j;
    };
    for (const auto& a : sector_indices(m, 4))
      for (const auto& b : sector_indices(m, 4)) {
        try {
          auto ab = omega(pt, a, b);
          auto ba = omega(pt, b, a);
          auto tr = omega_transfer(pt, a, b);
          if (transfer.take_fault()) tr += OmegaValue<Q>(Q(1));
          sym.expect(OmegaValue<Q>::distance(ab, ba) == 0, [&] {
            auto j = head(a, b);
            j["ab"] = ab.to_string();
            j["ba"] = ba.to_string();
            return j;
          });
          transfer.expect(OmegaValue<Q>::distance(ab, tr) == 0, [&] {
            auto j = head(a, b);
            j["infinity_side"] = ab.to_string();
            j["pole_side"] = tr.to_string();
            return j;
          });
        } catch (const std::exception& e) {
          sym.error(e, head(a, b));
        }
      }
  }
  return {sym.finish(), transfer.finish()};
}

std::vector<CheckResult> check_independence(const VerifyOptions& o, int trials) {
  Check chk("omega independent of u outside the dependence table", o);
  for (int t = 0; t < trials; ++t) {
    if (!vdetail::selected(o, t)) continue;
    Sampler s(o.seed, 200000 + static_cast<std::uint64_t>(t));
    const int m = s.uniform(0, 2);
    const std::size_t terms = 10;
    UCoords<Q> u = random_u<Q>(s, m, terms);
    const auto idx = sector_indices(m, 3);
    const SectorIndex a = idx[static_cast<std::size_t>(s.uniform(0, static_cast<int>(idx.size()) - 1))];
    const SectorIndex b = idx[static_cast<std::size_t>(s.uniform(0, static_cast<int>(idx.size()) - 1))];
    const auto deps = dependence_indices(a, b);
    std::vector<std::pair<int, int>> free;
    for (int j = 1; j <= static_cast<int>(terms); ++j)
      if (!deps.count({0, j})) free.push_back({0, j});
    for (int k = 1; k <= m; ++k)
      for (int j = 0; j <= static_cast<int>(terms); ++j)
        if (!deps.count({k, j})) free.push_back({k, j});
    if (free.empty()) continue;
    const auto [ci, cj] = free[static_cast<std::size_t>(s.uniform(0, static_cast<int>(free.size()) - 1))];
    UCoords<Q> w = u;
    Q& x = ci == 0 ? w.u0[static_cast<std::size_t>(cj - 1)] : w.uk[static_cast<std::size_t>(ci - 1)][static_cast<std::size_t>(cj)];
    // keep u_{k,1} nonzero and the phi's distinct
    auto admissible = [&] {
      if (ci == 0) return true;
      if (cj == 1) return x != 0;
      if (cj == 0)
        for (int k = 1; k <= m; ++k)
          if (k != ci && w.uk[static_cast<std::size_t>(k - 1)][0] == x) return false;
      return true;
    };
    do x += s.nonzero();
    while (!admissible());
    json head = vdetail::case_header("whitham", o, t);
    head["a"] = to_string(a);
    head["b"] = to_string(b);
    head["perturbed"] = {ci, cj};
    head["u"] = u_json(u);
    try {
      auto before = omega(point_of_u(u), a, b);
      auto after = omega(point_of_u(w), a, b);
      if (chk.take_fault()) after += OmegaValue<Q>(Q(1));
      chk.expect(OmegaValue<Q>::distance(before, after) == 0, [&] {
        head["before"] = before.to_string();
        head["after"] = after.to_string();
        return head;
      });
    } catch (const std::exception& e) {
      chk.error(e, head);
    }
  }
  return {chk.finish()};
}

std::vector<CheckResult> check_flows(const VerifyOptions& o) {
  Check res("tau flow residual", o), xflow("first flow is d/dx", o);
  for (int m = 0; m <= 2; ++m) {
    if (!vdetail::selected(o, m)) continue;
    Sampler s(o.seed, 300000 + static_cast<std::uint64_t>(m));
    auto pt = random_jet_point<Q>(s, m, 22);
    auto head = [&] {
      json j = vdetail::case_header("whitham", o, m);
      j["point"] = to_json(pt.map([](const Jet<Q>& x) { return x.value(); }));
      j["x_derivatives"] = to_json(pt.map([](const Jet<Q>& x) { return x.part(0); }));
      return j;
    };
    try {
      auto rhs = lax_rhs(pt, Flow{0, 1});
      for (int k = 0; k <= m; ++k) {
        auto dx = x_derivative(k == 0 ? pt.lambda0 : pt.lambda[static_cast<std::size_t>(k - 1)]);
        if (xflow.take_fault()) dx = add_constant(dx, Q(1));
        xflow.expect(max_known_difference(rhs[static_cast<std::size_t>(k)], dx) == 0, [&] {
          auto j = head();
          j["series"] = k;
          return j;
        });
      }
    } catch (const std::exception& e) {
      xflow.error(e, head());
    }
    for (const auto& a : sector_indices(m, 3))
      for (const auto& b : sector_indices(m, 3)) {
        try {
          Q r = tau_flow_residual(pt, a, b);
          if (res.take_fault()) r += 1;
          res.expect(r == 0, [&] {
            auto j = head();
            j["a"] = to_string(a);
            j["b"] = to_string(b);
            j["residual"] = io::str(r);
            return j;
          });
        } catch (const std::exception& e) {
          auto j = head();
          j["a"] = to_string(a);
          j["b"] = to_string(b);
          res.error(e, j);
        }
      }
  }
  return {res.finish(), xflow.finish()};
}

}  // namespace wtl
