#include "verify_detail.hpp"
#include "wtl/lax.hpp"
#include "wtl/random.hpp"

namespace wtl {

using vdetail::Check;
using Q = Rational;
using S = LaurentSeries<Q>;

namespace {

Center<Q> random_center(Sampler& s) {
  return s.uniform(0, 2) == 0 ? Center<Q>::infinity() : Center<Q>::at(Q(s.uniform(-3, 3)));
}

// low in [-2, 1], 3..6 coefficients, exact or truncated a few terms past the last one
S random_series(Sampler& s, const Center<Q>& c) {
  const long low = s.uniform(-2, 1);
  std::vector<Q> coeffs;
  const int len = s.uniform(3, 6);
  for (int i = 0; i < len; ++i) coeffs.push_back(i == 0 ? s.nonzero() : s.rational());
  const long order = s.uniform(0, 1) ? kExact : low + len + s.uniform(0, 3);
  if (order != kExact) coeffs.resize(static_cast<std::size_t>(order - low), Q(0));
  return S(c, 1, low, std::move(coeffs), order);
}

bool same(const S& a, const S& b) { return max_known_difference(a, b) == 0; }

// the known range must not be empty, otherwise the comparison is vacuous
bool same_nonvacuous(const S& a, const S& b) { return a.order() > a.low() && b.order() > b.low() && same(a, b); }

GlobalRational<Q> random_rational(Sampler& s) {
  std::vector<Q> poly;
  const int deg = s.uniform(-1, 3);
  for (int i = 0; i <= deg; ++i) poly.push_back(s.rational());
  auto R = GlobalRational<Q>::polynomial(std::move(poly));
  for (int loc : s.distinct(s.uniform(1, 3), 4)) {
    std::vector<Q> c;
    const int ord = s.uniform(1, 3);
    for (int j = 0; j < ord; ++j) c.push_back(j + 1 == ord ? s.nonzero() : s.rational());
    R.add_part(Q(loc), c);
  }
  return R;
}

std::vector<Center<Q>> centers_of(const std::vector<const GlobalRational<Q>*>& rs) {
  std::vector<Center<Q>> out{Center<Q>::infinity()};
  for (const auto* R : rs)
    for (const auto& p : R->parts()) {
      bool dup = false;
      for (const auto& c : out) dup = dup || (!c.infinite && c.loc == p.loc);
      if (!dup) out.push_back(Center<Q>::at(p.loc));
    }
  return out;
}

}  // namespace

std::vector<CheckResult> check_series(const VerifyOptions& o, int cases) {
  Check ring("series ring laws", o), inv("series inversion round trip", o), rev("series reversion round trip", o),
      root("series rational powers", o), leib("Leibniz rule (d/dz and jets)", o);
  for (int i = 0; i < cases; ++i) {
    if (!vdetail::selected(o, i)) continue;
    Sampler s(o.seed, 800000 + static_cast<std::uint64_t>(i));
    const auto c = random_center(s);
    const S a = random_series(s, c), b = random_series(s, c), d = random_series(s, c);
    json head = vdetail::case_header("series", o, i);
    head["a"] = to_json(a);
    head["b"] = to_json(b);
    head["c"] = to_json(d);
    try {
      S lhs = (a + b) * d;
      if (ring.take_fault()) lhs = add_constant(lhs, Q(1));
      const bool ok = same(lhs, a * d + b * d) && same(a * b, b * a) && same((a * b) * d, a * (b * d)) &&
                      same((a + b) + d, a + (b + d)) && same((a + b) - b, a);
      ring.expect(ok, [&] { return head; });

      const S ai = invert(a, 8);
      inv.expect(same_nonvacuous(a * ai, S::constant(c, Q(1))), [&] { return head; });

      leib.expect(same(derive(a * b), derive(a) * b + a * derive(b)), [&] { return head; });

      // reversion: shift a to a simple pole (z + ... at infinity, 1/(z-c) + ... at c)
      std::vector<Q> f{s.nonzero()};
      for (int j = 0; j < 5; ++j) f.push_back(s.rational());
      const S g = S::exact_terms(c, -1, f);
      const S z = revert(g, 7);
      const S id = compose(g, z, 7);
      const S ident = S::exact_terms(Center<Q>::infinity(), -1, {Q(1)});
      rev.expect(same_nonvacuous(id, ident), [&] {
        json j = head;
        j["reverted"] = to_json(g);
        return j;
      });

      // k-th root of a series with leading coefficient q^k
      const int k = s.uniform(2, 3);
      const Q q = s.nonzero();
      std::vector<Q> h{q * q * (k == 3 ? q : Q(1))};
      for (int j = 0; j < 4; ++j) h.push_back(s.rational());
      const S H = S::exact_terms(Center<Q>::infinity(), -k, h);
      const S r = pow_rational(H, Q(1, k), std::optional<Q>(q), 8);
      root.expect(same_nonvacuous(pow_int(r, k), H), [&] {
        json j = head;
        j["power_base"] = to_json(H);
        j["k"] = k;
        return j;
      });
    } catch (const std::exception& e) {
      ring.error(e, head);
    }
    // jets: products and quotients against hand-written derivatives, and the
    // coefficientwise rule on series of jets
    try {
      const Q x0 = s.rational(), dx = s.nonzero(), y0 = s.nonzero(), dy = s.rational();
      const Jet<Q> x(x0, {dx}), y(y0, {dy});
      Jet<Q> p = x * y;
      if (leib.take_fault()) p += Jet<Q>(Q(0), {Q(1)});
      const Jet<Q> qj = x / y;
      const bool ok = p.part(0) == dx * y0 + x0 * dy && qj.part(0) == (dx * y0 - x0 * dy) / (y0 * y0);
      // fixed center, random x-derivative on every coefficient
      auto lift = [&](const S& f) {
        std::vector<Jet<Q>> cs;
        for (const auto& v : f.coeffs()) cs.push_back(Jet<Q>(v, {s.rational()}));
        const auto jc = c.infinite ? Center<Jet<Q>>::infinity() : Center<Jet<Q>>::at(Jet<Q>(c.loc));
        return LaurentSeries<Jet<Q>>(jc, f.denom(), f.low(), std::move(cs), f.order());
      };
      const auto A = lift(a), B = lift(b);
      const bool ok2 = same(x_derivative(A * B), x_derivative(A) * value_series(B) + value_series(A) * x_derivative(B));
      leib.expect(ok && ok2, [&] {
        json j = head;
        j["x"] = {io::str(x0), io::str(dx)};
        j["y"] = {io::str(y0), io::str(dy)};
        return j;
      });
    } catch (const std::exception& e) {
      leib.error(e, head);
    }
  }
  return {ring.finish(), inv.finish(), rev.finish(), root.finish(), leib.finish()};
}

std::vector<CheckResult> check_ratfun(const VerifyOptions& o, int cases) {
  Check rsum("residues of products sum to zero", o), deriv("derivative commutes with expansion", o),
      resid("stored residues match expansions", o), jets("jet evaluation gives the derivative", o);
  for (int i = 0; i < cases; ++i) {
    if (!vdetail::selected(o, i)) continue;
    Sampler s(o.seed, 900000 + static_cast<std::uint64_t>(i));
    const auto R = random_rational(s), P = random_rational(s);
    json head = vdetail::case_header("ratfun", o, i);
    head["R"] = to_json(R);
    head["P"] = to_json(P);
    try {
      // R * P is not stored; multiply the local expansions instead
      Q total = 0;
      for (const auto& c : centers_of({&R, &P})) total += residue(expand_at(R, c, 10) * expand_at(P, c, 10));
      if (rsum.take_fault()) total += 1;
      rsum.expect(total == 0, [&] {
        json j = head;
        j["sum"] = io::str(total);
        return j;
      });
      rsum.expect(residue_sum(R) == 0, [&] { return head; });

      for (const auto& c : centers_of({&R})) {
        const S lhs = expand_at(R.derive(), c, 8), rhs = derive(expand_at(R, c, 9));
        deriv.expect(same_nonvacuous(lhs, rhs), [&] { return head; });
        resid.expect(residue_at(R, c) == residue(expand_at(R, c, 4)), [&] { return head; });
      }

      Q z0;
      do z0 = s.rational();
      while ([&] {
        for (const auto& p : R.parts())
          if (p.loc == z0) return true;
        return false;
      }());
      const auto Rj = R.map([](const Q& v) { return Jet<Q>(v); });
      const Jet<Q> val = Rj.eval(Jet<Q>(z0, {Q(1)}));
      jets.expect(val.value() == R.eval(z0) && val.part(0) == R.derive().eval(z0), [&] {
        json j = head;
        j["z0"] = io::str(z0);
        return j;
      });
    } catch (const std::exception& e) {
      rsum.error(e, head);
    }
  }
  return {rsum.finish(), deriv.finish(), resid.finish(), jets.finish()};
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& o) {
  std::vector<CheckResult> out;
  auto add = [&](std::vector<CheckResult> r) { out.insert(out.end(), r.begin(), r.end()); };
  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "series") add(check_series(o)), known = true;
  if (all || suite == "ratfun") add(check_ratfun(o)), known = true;
  if (all || suite == "whitham") {
    add(check_tau_symmetry(o));
    add(check_independence(o));
    add(check_flows(o));
    known = true;
  }
  if (all || suite == "hurwitz") {
    add(check_stabilization(o));
    add(check_wdvv(o));
    known = true;
  }
  if (all || suite == "open") add(check_open(o)), known = true;
  if (all || suite == "even") add(check_even(o)), known = true;
  if (!known) throw InputError("unknown suite '" + suite + "' (series, ratfun, whitham, hurwitz, open, even, all)");
  return out;
}

}  // namespace wtl
