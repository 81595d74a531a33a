#include "verify_detail.hpp"
#include "wtl/even.hpp"
#include "wtl/open.hpp"
#include "wtl/random.hpp"
#include "wtl/stabilize.hpp"
#include "wtl/wdvv.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <map>
#include <tuple>

namespace wtl {

using vdetail::Check;
using vdetail::sci;
using Q = Rational;

namespace {

// Fixed coefficient family: every profile takes the prefix it needs, so
// larger profiles extend smaller ones.  The square roots keep the float
// run away from exactly representable data.
FlatCoordsH<Real> family_flat(const std::vector<int>& n) {
  FlatCoordsH<Real> v;
  for (int j = 1; j < n[0]; ++j) v.u0.push_back(Real(Q(j % 2 ? j + 1 : -j - 1, 3 + j)) + sqrt(Real(j + 1)) / 7);
  for (std::size_t k = 1; k < n.size(); ++k) {
    const long kk = static_cast<long>(k);
    std::vector<Real> row{Real(Q(2 * kk - 5, 2)) + sqrt(Real(2)) / 10};
    for (int j = 1; j <= n[k]; ++j)
      row.push_back(j == 1 ? Real(2) + sqrt(Real(kk)) / 3 : Real(Q(j - 3, kk + j)) + sqrt(Real(j)) / 11);
    v.uk.push_back(std::move(row));
  }
  return v;
}

json profile_json(const std::vector<int>& n) { return json(n); }

std::string hat_pair(const HatIndex& a, const HatIndex& b) { return to_string(a) + " " + to_string(b); }

}  // namespace

std::vector<CheckResult> check_stabilization(const VerifyOptions& o) {
  vdetail::PrecisionGuard guard(o.precision);
  const Real tol(kStabTol);
  Check dev("stabilized entries match the formal structure", o), mono("thresholds are monotone along sweeps", o);
  struct Sweep {
    std::vector<std::vector<int>> profiles;
    int pmax;
  };
  std::vector<Sweep> sweeps{{{}, 3}, {{{2, 1, 1}, {3, 2, 2}, {4, 3, 3}, {5, 4, 4}, {6, 5, 5}}, 5}};
  for (int n0 = 2; n0 <= 8; ++n0) sweeps[0].profiles.push_back({n0});
  int below = 0, below_differs = 0, sweep_no = 0;
  for (const auto& sw : sweeps) {
    std::map<std::tuple<int, int, int, int>, bool> seen;
    for (const auto& n : sw.profiles) {
      const int idx = sweep_no++;
      if (!vdetail::selected(o, idx)) continue;
      const auto v = family_flat(n);
      auto head = [&] {
        json j = vdetail::case_header("hurwitz", o, idx);
        j["n"] = profile_json(n);
        j["flat"] = to_json(v);
        return j;
      };
      try {
        for (auto& row : stabilization_report(data_from_flat(n, v), sw.pmax, sw.pmax, tol)) {
          const auto key = std::make_tuple(row.a.i, row.a.p, row.b.i, row.b.p);
          if (auto it = seen.find(key); it != seen.end() && it->second && !row.threshold_ok)
            mono.expect(false, [&] {
              auto j = head();
              j["row"] = hat_pair(row.a, row.b);
              return j;
            });
          else
            mono.expect(true, {});
          seen[key] = row.threshold_ok;
          if (!row.threshold_ok) {
            ++below;
            if (row.deviation >= tol) ++below_differs;
            continue;
          }
          if (dev.take_fault()) row.deviation += 1;
          dev.expect(row.deviation < tol, [&] {
            auto j = head();
            j["row"] = hat_pair(row.a, row.b);
            j["family"] = to_string(row.family);
            j["lhs"] = row.lhs.to_string();
            j["rhs"] = row.rhs.to_string();
            j["deviation"] = sci(row.deviation);
            return j;
          });
        }
      } catch (const std::exception& e) {
        dev.error(e, head());
      }
    }
  }
  dev.note("tolerance " + std::string(kStabTol) + " at " + std::to_string(o.precision) + " digits");
  dev.note(std::to_string(below_differs) + " of " + std::to_string(below) + " below-threshold rows differ");
  return {dev.finish(), mono.finish()};
}

std::vector<CheckResult> check_wdvv(const VerifyOptions& o, int points) {
  vdetail::PrecisionGuard guard(o.precision);
  const Real tol(kWdvvTol);
  Check assoc("WDVV associativity", o), sym("structure constants symmetric", o),
      agree("structure constants agree with the residue formula", o);
  Real worst = 0;
  const std::vector<std::vector<int>> profiles{{3}, {4}, {2, 2}};
  int idx = 0;
  for (const auto& n : profiles)
    for (int i = 0; i < points; ++i, ++idx) {
      if (!vdetail::selected(o, idx)) continue;
      Sampler s(o.seed, 500000 + static_cast<std::uint64_t>(idx));
      const auto v = random_flat<Real>(s, n);
      json head = vdetail::case_header("hurwitz", o, idx);
      head["n"] = profile_json(n);
      head["flat"] = to_json(v);
      try {
        const auto d = data_from_flat(n, v);
        const auto c = structure_constants(d);
        Real r = wdvv_residual(c, inverse(metric_matrix(d)));
        if (assoc.take_fault()) r += 1;
        worst = std::max(worst, r);
        assoc.expect(r < tol, [&] {
          head["residual"] = sci(r);
          return head;
        });
        const Real sd = symmetry_defect(c);
        sym.expect(sd < tol, [&] {
          head["symmetry_defect"] = sci(sd);
          return head;
        });
        const Real md = max_difference(c, structure_constants_residue(d));
        agree.expect(md < tol, [&] {
          head["difference"] = sci(md);
          return head;
        });
      } catch (const std::exception& e) {
        assoc.error(e, head);
      }
    }
  assoc.note("worst residual " + sci(worst) + ", tolerance " + kWdvvTol);
  return {assoc.finish(), sym.finish(), agree.finish()};
}

std::vector<CheckResult> check_open(const VerifyOptions& o) {
  Check flt("open rows match past threshold (float)", o), exact("open rows exact on rationals", o),
      logs("open log family exact", o), owdvv("open WDVV on A2", o);
  const std::vector<std::vector<int>> profiles{{2}, {3}, {4}, {5}, {6}, {3, 2}, {4, 3, 3}};
  {
    vdetail::PrecisionGuard guard(o.precision);
    const Real tol(kOpenTol);
    for (std::size_t i = 0; i < profiles.size(); ++i) {
      const auto& n = profiles[i];
      if (!vdetail::selected(o, static_cast<int>(i))) continue;
      const auto v = family_flat(n);
      json head = vdetail::case_header("open", o, static_cast<long long>(i));
      head["n"] = profile_json(n);
      head["flat"] = to_json(v);
      try {
        for (auto& row : open_stabilization_report(data_from_flat(n, v), 6, kDefaultSOrder)) {
          if (!row.threshold_ok) continue;
          if (flt.take_fault()) row.max_coeff_dev += 1;
          flt.expect(row.max_coeff_dev < tol, [&] {
            head["row"] = to_string(row.index);
            head["family"] = to_string(row.family);
            head["max_coeff_dev"] = sci(row.max_coeff_dev);
            return head;
          });
        }
      } catch (const std::exception& e) {
        flt.error(e, head);
      }
    }
    flt.note("s-truncation order " + std::to_string(kDefaultSOrder) + ", tolerance " + kOpenTol);
  }
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    const auto& n = profiles[i];
    const int idx = static_cast<int>(profiles.size() + i);
    if (!vdetail::selected(o, idx)) continue;
    Sampler s(o.seed, 600000 + static_cast<std::uint64_t>(idx));
    const auto v = random_flat<Q>(s, n);
    json head = vdetail::case_header("open", o, idx);
    head["n"] = profile_json(n);
    head["flat"] = to_json(v);
    try {
      for (auto& row : open_stabilization_report(data_from_flat(n, v), 6, kDefaultSOrder)) {
        if (!row.threshold_ok) continue;
        Check& c = row.family == OpenFamily::Log ? logs : exact;
        if (c.take_fault()) row.max_coeff_dev += 1;
        c.expect(row.max_coeff_dev == 0, [&] {
          head["row"] = to_string(row.index);
          head["family"] = to_string(row.family);
          head["max_coeff_dev"] = sci(row.max_coeff_dev);
          return head;
        });
      }
    } catch (const std::exception& e) {
      exact.error(e, head);
    }
  }
  // open WDVV: exact on rationals, below the bound on floats
  const int widx = static_cast<int>(2 * profiles.size());
  if (vdetail::selected(o, widx)) {
    Sampler s(o.seed, 600000 + static_cast<std::uint64_t>(widx));
    const std::vector<int> a2{3};
    const auto vq = random_flat<Q>(s, a2);
    json head = vdetail::case_header("open", o, widx);
    head["n"] = profile_json(a2);
    head["flat"] = to_json(vq);
    head["s"] = "10";
    auto parts = [](const OpenWdvvResult& r) {
      return std::vector<Real>{r.first, r.second, r.mixed, r.hessian_sym};
    };
    try {
      auto rq = open_wdvv_residual(data_from_flat(a2, vq), Q(10));
      if (owdvv.take_fault()) rq.first += 1;
      for (const Real& x : parts(rq))
        owdvv.expect(x == 0, [&] {
          head["backend"] = "rational";
          head["residual"] = sci(x);
          return head;
        });
      vdetail::PrecisionGuard guard(o.precision);
      const Real bound(kWdvvTol);
      FlatCoordsH<Real> vr;
      for (const auto& x : vq.u0) vr.u0.push_back(Real(x));
      for (const auto& row : vq.uk) {
        std::vector<Real> r;
        for (const auto& x : row) r.push_back(Real(x));
        vr.uk.push_back(std::move(r));
      }
      Real worst = 0;
      for (const Real& x : parts(open_wdvv_residual(data_from_flat(a2, vr), Real(10)))) {
        worst = std::max(worst, x);
        owdvv.expect(x < bound, [&] {
          head["backend"] = "float";
          head["residual"] = sci(x);
          return head;
        });
      }
      owdvv.note("truncation bound 0 (rational), " + std::string(kWdvvTol) + " (float); float residual " + sci(worst));
    } catch (const std::exception& e) {
      owdvv.error(e, head);
    }
  }
  exact.note("open_flows_incomplete: the d/dT~^{s,p} flows are not built");
  return {flt.finish(), exact.finish(), logs.finish(), owdvv.finish()};
}

std::vector<CheckResult> check_even(const VerifyOptions& o) {
  Check cons("even parity constraints", o), dual("even omega: both evaluations agree", o),
      stab("even stabilization rows", o), open("even open rows", o), reject("non-symmetric input rejected", o);
  const std::vector<std::vector<int>> families{{1, 1}, {2, 1}, {2, 2}, {3, 2},
                                               {1, 1, 1}, {2, 1, 2}, {2, 2, 2}, {3, 2, 2}};
  for (std::size_t i = 0; i < families.size(); ++i) {
    const int idx = static_cast<int>(i);
    if (!vdetail::selected(o, idx)) continue;
    const auto& np = families[i];
    Sampler s(o.seed, 700000 + static_cast<std::uint64_t>(idx));
    const auto e = random_even_flat<Q>(s, np);
    json head = vdetail::case_header("even", o, idx);
    head["np"] = profile_json(np);
    head["flat"] = {{"odd0", io::strs(e.odd0)}, {"odd1", io::strs(e.odd1)}, {"pairs", json::array()}};
    for (const auto& row : e.pairs) head["flat"]["pairs"].push_back(io::strs(row));
    try {
      const auto d = even_data_from_flat(np, e);
      Real pd = parity_defect(d), cd = even_constraint_defect(d);
      if (cons.take_fault()) pd += 1;
      cons.expect(pd == 0 && cd == 0, [&] {
        head["parity_defect"] = sci(pd);
        head["constraint_defect"] = sci(cd);
        return head;
      });
      for (const auto& a : even_flat_indices(d))
        for (const auto& b : even_flat_indices(d)) {
          auto x = omega_even(d, a, b);
          const auto y = omega_even_reduced(d, a, b);
          if (dual.take_fault()) x += OmegaValue<Q>(Q(1));
          dual.expect(OmegaValue<Q>::distance(x, y) == 0, [&] {
            head["a"] = {a.i, a.j};
            head["b"] = {b.i, b.j};
            head["combination"] = x.to_string();
            head["reduced"] = y.to_string();
            return head;
          });
        }
      for (auto& row : even_stabilization_report(d, 4, 4)) {
        if (!row.threshold_ok) continue;
        if (stab.take_fault()) row.deviation += 1;
        stab.expect(row.deviation == 0, [&] {
          head["row"] = hat_pair(row.a, row.b);
          head["lhs"] = row.lhs.to_string();
          head["rhs"] = row.rhs.to_string();
          return head;
        });
      }
      for (auto& row : even_open_report(d, 4)) {
        if (!row.threshold_ok) continue;
        if (open.take_fault()) row.max_coeff_dev += 1;
        open.expect(row.max_coeff_dev == 0, [&] {
          head["row"] = to_string(row.index);
          head["max_coeff_dev"] = sci(row.max_coeff_dev);
          return head;
        });
      }
      // move the central pole off 0, and break a pair when there is one
      std::vector<FlatCoordsH<Q>> bad(1, flat_coords(d));
      bad[0].uk[0][0] += Q(1, 1000);  // never lands on a pair at +-r
      if (np.size() > 2) {
        bad.push_back(flat_coords(d));
        bad[1].uk[2][1] += Q(1, 1000);
      }
      for (const auto& v : bad) {
        bool thrown = false;
        try {
          require_even(data_from_flat(full_profile(np), v));
        } catch (const EvenConstraintError&) {
          thrown = true;
        }
        if (reject.take_fault()) thrown = false;
        reject.expect(thrown, [&] {
          head["perturbed_flat"] = to_json(v);
          return head;
        });
      }
    } catch (const std::exception& ex) {
      cons.error(ex, head);
    }
  }
  stab.note("exact on rationals; families m'=1 and m'=2");
  return {cons.finish(), dual.finish(), stab.finish(), open.finish(), reject.finish()};
}

}  // namespace wtl
