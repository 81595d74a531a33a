#include "wtl/whitham.hpp"

#include <sstream>

namespace wtl {

std::string to_string(const SectorIndex& s) {
  switch (s.kind) {
    case Sector::E:
      return "e:" + std::to_string(s.p);
    case Sector::H0:
      return "h0:" + std::to_string(s.k) + ":" + std::to_string(s.p);
    case Sector::H1:
      return "h1:" + std::to_string(s.k);
  }
  return "?";
}

SectorIndex parse_sector(const std::string& s) {
  std::vector<std::string> f;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, ':');) f.push_back(part);
  auto num = [&](std::size_t i) {
    std::size_t used = 0;
    const int v = std::stoi(f.at(i), &used);
    if (used != f[i].size()) throw std::invalid_argument("bad integer in sector '" + s + "'");
    return v;
  };
  try {
    if (f.size() == 2 && f[0] == "e") return SectorIndex::e(num(1));
    if (f.size() == 3 && f[0] == "h0") return SectorIndex::h0(num(1), num(2));
    if (f.size() == 2 && f[0] == "h1") return SectorIndex::h1(num(1));
  } catch (const std::logic_error&) {
  }
  throw std::invalid_argument("sector '" + s + "' is not of the form e:p, h0:k:p or h1:k");
}

std::set<std::pair<int, int>> dependence_indices(const SectorIndex& a0, const SectorIndex& b0) {
  // canonical order: e before h0, h1 before anything else
  SectorIndex a = a0, b = b0;
  auto rank = [](const SectorIndex& s) { return s.kind == Sector::H1 ? 0 : s.kind == Sector::E ? 1 : 2; };
  if (rank(b) < rank(a)) std::swap(a, b);

  std::set<std::pair<int, int>> out;
  auto range = [&](int k, int lo, int hi) {
    for (int j = lo; j <= hi; ++j) out.insert({k, j});
  };
  const int p = a.p, q = b.p;
  if (a.kind == Sector::H1) {
    switch (b.kind) {
      case Sector::H1:
        if (a.k == b.k) range(a.k, 1, 1);
        else out = {{a.k, 0}, {b.k, 0}};
        break;
      case Sector::E:
        // the entry is poly_q(phi_k) / (q+1)!, so u_{k,0} enters as well
        range(0, 1, q);
        out.insert({a.k, 0});
        break;
      case Sector::H0:
        if (a.k == b.k) {
          range(a.k, 0, q + 2);
        } else {
          out.insert({a.k, 0});
          range(b.k, 0, q + 1);
        }
        break;
    }
    return out;
  }
  if (a.kind == Sector::E && b.kind == Sector::E) {
    range(0, 1, p + q + 1);
  } else if (a.kind == Sector::E) {
    range(0, 1, p);
    range(b.k, 0, q + 1);
  } else if (a.k == b.k) {
    range(a.k, 0, p + q + 3);
  } else {
    range(a.k, 0, p + 1);
    range(b.k, 0, q + 1);
  }
  return out;
}

}  // namespace wtl
