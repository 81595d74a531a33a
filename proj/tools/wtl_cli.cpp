// wtl: tau-structure tables, stabilization sweeps and verification suites.
//
// Exit codes: 0 pass, 1 verification failure, 2 input error.

#include "wtl/even.hpp"
#include "wtl/io.hpp"
#include "wtl/open.hpp"
#include "wtl/random.hpp"
#include "wtl/stabilize.hpp"
#include "wtl/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace wtl;

namespace {

constexpr int kPass = 0, kFail = 1, kInput = 2;

struct RunConfig {
  std::string backend = "rational";
  std::optional<unsigned> precision;
  std::optional<long> trunc;
  std::uint64_t seed = 42;
  std::string tol = kStabTol;
  std::string out;
  std::string format = "json";
  bool even = false, open = false, fault = false;

  unsigned digits() const { return precision.value_or(kDefaultPrecision); }
  bool exact() const { return backend == "rational"; }
};

// precision: flag, then WTL_DEFAULT_PRECISION, then the library default
void resolve(RunConfig& c) {
  if (c.backend != "rational" && c.backend != "float") throw InputError("--backend must be rational or float");
  if (c.format != "json" && c.format != "csv") throw InputError("--format must be json or csv");
  if (!c.precision) {
    if (const char* env = std::getenv("WTL_DEFAULT_PRECISION")) {
      try {
        std::size_t used = 0;
        const long v = std::stol(env, &used);
        if (used != std::string(env).size() || v <= 0) throw std::invalid_argument(env);
        c.precision = static_cast<unsigned>(v);
      } catch (const std::exception&) {
        throw InputError(std::string("WTL_DEFAULT_PRECISION is not a positive integer: ") + env);
      }
    }
  }
  if (!c.exact() && c.digits() < 16) throw InputError("float backend needs --precision >= 16");
  set_precision(c.digits());
  Real t;
  try {
    t = Real(c.tol);
  } catch (const std::exception&) {
    throw InputError("--tol is not a number: " + c.tol);
  }
  if (!(t > 0)) throw InputError("--tol must be positive");
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

// CSV with a header row; fields holding commas or quotes are quoted
class Table {
 public:
  explicit Table(std::vector<std::string> cols) : cols_(std::move(cols)) {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string csv() const {
    std::ostringstream os;
    write_row(os, cols_);
    for (const auto& r : rows_) write_row(os, r);
    return os.str();
  }
  json to_json() const {
    json a = json::array();
    for (const auto& r : rows_) {
      json o;
      for (std::size_t i = 0; i < cols_.size(); ++i) {
        if (r[i] == "true" || r[i] == "false") o[cols_[i]] = r[i] == "true";
        else o[cols_[i]] = r[i];
      }
      a.push_back(o);
    }
    return a;
  }

 private:
  static void write_row(std::ostream& os, const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) os << ',';
      if (r[i].find_first_of(",\"\n") == std::string::npos) {
        os << r[i];
        continue;
      }
      os << '"';
      for (char ch : r[i]) os << (ch == '"' ? "\"\"" : std::string(1, ch));
      os << '"';
    }
    os << '\n';
  }
  std::vector<std::string> cols_;
  std::vector<std::vector<std::string>> rows_;
};

void emit(const RunConfig& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw InputError("cannot write " + c.out);
  f << text;
}

void emit(const RunConfig& c, const Table& t, json meta) {
  if (c.format == "csv") return emit(c, t.csv());
  meta["rows"] = t.to_json();
  emit(c, meta.dump(2) + "\n");
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string sci(const Real& x) { return x.str(6, std::ios_base::scientific); }

std::vector<std::string> sector_cols(const SectorIndex& s) {
  switch (s.kind) {
    case Sector::E: return {"e", std::to_string(s.p)};
    case Sector::H0: return {"h0:" + std::to_string(s.k), std::to_string(s.p)};
    case Sector::H1: return {"h1:" + std::to_string(s.k), "0"};
  }
  return {};
}

std::vector<SectorIndex> sector_indices(int m, int pmax) {
  std::vector<SectorIndex> out;
  for (int p = 0; p <= pmax; ++p) out.push_back(SectorIndex::e(p));
  for (int k = 1; k <= m; ++k) {
    for (int p = 0; p <= pmax; ++p) out.push_back(SectorIndex::h0(k, p));
    out.push_back(SectorIndex::h1(k));
  }
  return out;
}

// scalar part first, then one row per log term
template <class T>
void omega_rows(Table& t, std::vector<std::string> key, const OmegaValue<T>& v) {
  auto row = key;
  row.insert(row.end(), {"scalar", io::str(v.scalar()), ""});
  t.add(row);
  for (const auto& l : v.logs()) {
    row = key;
    row.insert(row.end(), {"log", io::str(l.coef), io::str(l.arg)});
    t.add(row);
  }
}

template <class T>
WhithamPoint<T> truncated(const WhithamPoint<T>& pt, std::optional<long> trunc) {
  if (!trunc) return pt;
  WhithamPoint<T> r = pt;
  r.lambda0 = truncate(r.lambda0, *trunc);
  for (auto& s : r.lambda) s = truncate(s, *trunc);
  return r;
}

template <class T>
int omega_cmd(const RunConfig& c, const json& in, int pmax, int qmax) {
  Table t({"alpha", "p", "beta", "q", "kind", "value", "log_arg"});
  std::vector<std::string> failures;
  json meta;
  if (in.contains("series")) {
    const auto pt = truncated(point_from_json<T>(in), c.trunc);
    meta["input"] = "point";
    for (const auto& a : sector_indices(pt.m(), pmax))
      for (const auto& b : sector_indices(pt.m(), qmax)) {
        auto key = sector_cols(a);
        const auto kb = sector_cols(b);
        key.insert(key.end(), kb.begin(), kb.end());
        try {
          omega_rows(t, key, omega(pt, a, b));
        } catch (const TruncationError&) {
          failures.push_back("(" + key[0] + "," + key[1] + "," + key[2] + "," + key[3] + ")");
        }
      }
  } else {
    const auto d = c.even ? even_from_json<T>(in) : hurwitz_from_json<T>(in);
    meta["input"] = "hurwitz";
    meta["n"] = d.n;
    for (const auto& a : flat_indices(d))
      for (const auto& b : flat_indices(d)) omega_rows(t, {to_string(a), "0", to_string(b), "0"}, omega_H(d, a, b));
  }
  emit(c, t, meta);
  if (failures.empty()) return kPass;
  std::cerr << "truncation too small for " << failures.size() << " entries:";
  for (const auto& f : failures) std::cerr << ' ' << f;
  std::cerr << '\n';
  return kFail;
}

template <class T>
int theta_cmd(const RunConfig& c, const json& in, int pmax) {
  const auto pt = truncated(point_from_json<T>(in), c.trunc);
  Table t({"alpha", "p", "value"});
  std::vector<std::string> failures;
  for (const auto& a : sector_indices(pt.m(), pmax)) {
    auto key = sector_cols(a);
    try {
      key.push_back(io::str(theta(pt, a)));
      t.add(key);
    } catch (const TruncationError&) {
      failures.push_back("(" + key[0] + "," + key[1] + ")");
    }
  }
  emit(c, t, json{{"input", "point"}});
  if (failures.empty()) return kPass;
  std::cerr << "truncation too small for";
  for (const auto& f : failures) std::cerr << ' ' << f;
  std::cerr << '\n';
  return kFail;
}

// ---- stabilization sweeps ----

std::vector<std::vector<int>> profiles_of(const json& spec) {
  const json& ps = io::field(spec, "profiles");
  if (!ps.is_array() || ps.empty()) throw InputError("'profiles' must be a non-empty array");
  std::vector<std::vector<int>> out;
  for (const auto& p : ps) {
    std::vector<int> n;
    if (!p.is_array() || p.empty()) throw InputError("each profile must be a non-empty array");
    for (const auto& x : p) {
      if (!x.is_number_integer() || x.get<int>() < 1) throw InputError("profile entries must be positive integers");
      n.push_back(x.get<int>());
    }
    out.push_back(std::move(n));
  }
  return out;
}

template <class T>
std::vector<T> prefix(const std::vector<T>& v, std::size_t len) {
  std::vector<T> r(v.begin(), v.begin() + static_cast<long>(std::min(len, v.size())));
  r.resize(len, FieldTraits<T>::from_int(0));
  return r;
}

// The family's prefix for profile n, zero-extended where the family is short.
template <class T>
HurwitzData<T> sweep_data(const json& flat, const std::vector<int>& n, bool even) {
  try {
    if (even && flat.contains("odd0")) {
      if (n.size() < 2) throw InputError("even profiles need at least (n0', n1')");
      EvenFlat<T> e;
      e.odd0 = prefix(io::nums<T>(flat.value("odd0", json::array())), static_cast<std::size_t>(n[0]));
      e.odd1 = prefix(io::nums<T>(flat.value("odd1", json::array())), static_cast<std::size_t>(n[1]));
      const json pairs = flat.value("pairs", json::array());
      if (pairs.size() < n.size() - 2) throw InputError("the family has fewer pairs than the profile");
      for (std::size_t i = 2; i < n.size(); ++i)
        e.pairs.push_back(prefix(io::nums<T>(pairs[i - 2]), static_cast<std::size_t>(n[i]) + 1));
      return even_data_from_flat(n, e);
    }
    const auto full = even ? full_profile(n) : n;
    FlatCoordsH<T> f = flat_from_json<T>(flat), v;
    v.u0 = prefix(f.u0, static_cast<std::size_t>(full[0] - 1));
    if (f.uk.size() < full.size() - 1) throw InputError("the family has fewer poles than the profile");
    for (std::size_t k = 1; k < full.size(); ++k) v.uk.push_back(prefix(f.uk[k - 1], static_cast<std::size_t>(full[k]) + 1));
    auto d = data_from_flat(full, v);
    if (even) require_even(d);
    return d;
  } catch (const InputError&) {
    throw;
  } catch (const EvenConstraintError& e) {
    throw InputError(std::string("even sweep: ") + e.what());
  } catch (const std::exception& e) {
    throw InputError(std::string("sweep data: ") + e.what());
  }
}

std::string profile_str(const std::vector<int>& n) {
  std::string s;
  for (std::size_t i = 0; i < n.size(); ++i) s += (i ? ";" : "") + std::to_string(n[i]);
  return s;
}

template <class T>
int stabilize_cmd(const RunConfig& c, const json& spec) {
  const auto profiles = profiles_of(spec);
  const json& flat = io::field(spec, "flat");
  const int pmax = spec.value("pmax", 3), qmax = spec.value("qmax", pmax);
  const long s_order = spec.value("s_order", static_cast<long>(kDefaultSOrder));
  if (pmax < 0 || qmax < 0 || s_order < 1) throw InputError("pmax, qmax must be >= 0 and s_order >= 1");
  const Real tol(c.tol);
  bool fault = c.fault;
  int failed = 0;
  auto judge = [&](bool threshold_ok, Real dev) {
    if (threshold_ok && fault) {
      dev += 1;
      fault = false;
    }
    if (threshold_ok && !(dev < tol)) ++failed;
    return dev;
  };

  // all data is built first so input errors surface before any output
  std::vector<HurwitzData<T>> data;
  for (const auto& n : profiles) data.push_back(sweep_data<T>(flat, n, c.even));

  json meta;
  meta["tolerance"] = c.tol;
  meta["backend"] = c.backend;
  if (!c.exact()) meta["precision"] = c.digits();
  if (c.open) {
    meta["open_flows_incomplete"] = true;
    meta["s_trunc_order"] = s_order;
    Table t({"n", "family", "index", "p", "threshold_ok", "max_coeff_dev", "s_trunc_order", "open_flows_incomplete"});
    for (std::size_t i = 0; i < data.size(); ++i) {
      const std::string ns = profile_str(profiles[i]);
      auto add = [&](const std::string& fam, const HatIndex& h, bool ok, const Real& dev) {
        t.add({ns, fam, std::to_string(h.i), std::to_string(h.p), bool_str(ok), sci(judge(ok, dev)),
               std::to_string(s_order), "true"});
      };
      if (c.even)
        for (const auto& r : even_open_report(data[i], pmax, s_order)) add("even", r.index, r.threshold_ok, r.max_coeff_dev);
      else
        for (const auto& r : open_stabilization_report(data[i], pmax, s_order))
          add(to_string(r.family), r.index, r.threshold_ok, r.max_coeff_dev);
    }
    emit(c, t, meta);
  } else {
    Table t({"n", "family", "i", "p", "j", "q", "threshold_ok", "deviation"});
    for (std::size_t i = 0; i < data.size(); ++i) {
      const std::string ns = profile_str(profiles[i]);
      auto add = [&](const std::string& fam, const HatIndex& a, const HatIndex& b, bool ok, const Real& dev) {
        t.add({ns, fam, std::to_string(a.i), std::to_string(a.p), std::to_string(b.i), std::to_string(b.p), bool_str(ok),
               sci(judge(ok, dev))});
      };
      if (c.even)
        for (const auto& r : even_stabilization_report(data[i], pmax, qmax, tol)) add("even", r.a, r.b, r.threshold_ok, r.deviation);
      else
        for (const auto& r : stabilization_report(data[i], pmax, qmax, tol))
          add(to_string(r.family), r.a, r.b, r.threshold_ok, r.deviation);
    }
    emit(c, t, meta);
  }
  if (failed) {
    std::cerr << failed << " threshold rows exceed tolerance " << c.tol << '\n';
    return kFail;
  }
  return kPass;
}

int verify_cmd(const RunConfig& c, const std::string& suite, std::optional<int> only) {
  VerifyOptions o;
  o.seed = c.seed;
  o.precision = c.precision.value_or(kVerifyDigits);
  o.only_case = only;
  o.fault = c.fault;
  const auto results = run_suite(suite, o);
  bool pass = true;
  json report = json::array();
  for (const auto& r : results) {
    pass = pass && r.pass;
    report.push_back(to_json(r));
    if (c.out.empty() || c.format == "csv") std::cout << summary_line(r) << '\n';
  }
  if (!c.out.empty()) {
    if (c.format == "csv") {
      Table t({"name", "pass", "detail"});
      for (const auto& r : results) t.add({r.name, bool_str(r.pass), r.detail});
      emit(c, t.csv());
    } else {
      emit(c, json{{"suite", suite}, {"seed", c.seed}, {"results", report}}.dump(2) + "\n");
    }
  }
  for (const auto& r : results)
    if (!r.pass) std::cerr << "failing case (" << r.name << "): " << r.failing_case.dump() << '\n';
  return pass ? kPass : kFail;
}

std::vector<int> parse_profile(const std::string& s) {
  std::vector<int> n;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, ',');) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(part, &used);
      if (used != part.size() || v < 1) throw std::invalid_argument(part);
      n.push_back(v);
    } catch (const std::exception&) {
      throw InputError("bad profile entry '" + part + "'");
    }
  }
  if (n.empty()) throw InputError("empty profile");
  return n;
}

template <class T>
int export_cmd(const RunConfig& c, const std::string& what, int m, const std::string& profile) {
  Sampler s(c.seed);
  json j;
  if (what == "point") {
    if (m < 0) throw InputError("--m must be >= 0");
    j = to_json(random_point<T>(s, m, static_cast<std::size_t>(c.trunc.value_or(12))));
  } else if (what == "hurwitz") {
    const auto n = parse_profile(profile);
    j = to_json(random_hurwitz<T>(s, n));
  } else if (what == "even") {
    const auto np = parse_profile(profile);
    if (np.size() < 2) throw InputError("even profiles need at least (n0', n1')");
    const auto e = random_even_flat<T>(s, np);
    j["np"] = np;
    j["flat"] = {{"odd0", io::strs(e.odd0)}, {"odd1", io::strs(e.odd1)}, {"pairs", json::array()}};
    for (const auto& row : e.pairs) j["flat"]["pairs"].push_back(io::strs(row));
  } else {
    throw InputError("export: unknown kind '" + what + "' (point, hurwitz, even)");
  }
  emit(c, j.dump(2) + "\n");
  return kPass;
}

template <class F>
int dispatch(const RunConfig& c, F&& f) {
  return c.exact() ? f(Rational()) : f(Real());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Whitham tau-structure and Hurwitz stabilization toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  RunConfig c;
  app.add_option("--backend", c.backend, "rational | float")->capture_default_str();
  app.add_option("--precision", c.precision, "decimal digits for the float backend (>= 16)");
  app.add_option("--trunc", c.trunc, "series truncation order");
  app.add_option("--seed", c.seed, "random seed")->capture_default_str();
  app.add_option("--tol", c.tol, "relative tolerance")->capture_default_str();
  app.add_option("--out", c.out, "output path (default stdout)");
  app.add_option("--format", c.format, "json | csv")->capture_default_str();
  app.add_flag("--even", c.even, "even (parity-symmetric) reduction");
  app.add_flag("--open", c.open, "open sector");
  app.add_flag("--inject-fault", c.fault)->group("");  // negative control

  std::string input, suite, kind, profile;
  int pmax = 2, qmax = 2, m = 1;
  std::optional<int> only;

  auto* om = app.add_subcommand("omega", "Omega table for a point or Hurwitz data file");
  om->add_option("input", input, "JSON file")->required();
  om->add_option("--pmax", pmax)->capture_default_str();
  om->add_option("--qmax", qmax)->capture_default_str();
  auto* th = app.add_subcommand("theta", "densities theta_{alpha,p} of a point");
  th->add_option("input", input, "JSON file")->required();
  th->add_option("--pmax", pmax)->capture_default_str();
  auto* st = app.add_subcommand("stabilize", "stabilization sweep over a list of profiles");
  st->add_option("spec", input, "sweep JSON: {profiles, flat, pmax?, qmax?, s_order?}")->required();
  auto* ve = app.add_subcommand("verify", "seeded invariant suite");
  ve->add_option("suite", suite, "series | ratfun | whitham | hurwitz | open | even | all")->required();
  ve->add_option("--case", only, "replay one case");
  auto* ex = app.add_subcommand("export", "write a random point or data file");
  ex->add_option("kind", kind, "point | hurwitz | even")->required();
  ex->add_option("--m", m, "number of poles for a point")->capture_default_str();
  ex->add_option("--n", profile, "profile, e.g. 3,2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kInput;
  }

  try {
    resolve(c);
    if (*om)
      return dispatch(c, [&](auto t) { return omega_cmd<decltype(t)>(c, read_json(input), pmax, qmax); });
    if (*th) return dispatch(c, [&](auto t) { return theta_cmd<decltype(t)>(c, read_json(input), pmax); });
    if (*st) return dispatch(c, [&](auto t) { return stabilize_cmd<decltype(t)>(c, read_json(input)); });
    if (*ve) return verify_cmd(c, suite, only);
    if (*ex) return dispatch(c, [&](auto t) { return export_cmd<decltype(t)>(c, kind, m, profile); });
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kInput;
}
