#include "wtl/hurwitz.hpp"

#include <sstream>

namespace wtl {

std::string to_string(const VIndex& v) { return "v:" + std::to_string(v.i) + ":" + std::to_string(v.j); }

VIndex parse_vindex(const std::string& s) {
  std::vector<std::string> f;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, ':');) f.push_back(part);
  try {
    if (f.size() == 3 && f[0] == "v") {
      std::size_t u1 = 0, u2 = 0;
      VIndex v{std::stoi(f[1], &u1), std::stoi(f[2], &u2)};
      if (u1 == f[1].size() && u2 == f[2].size()) return v;
    }
  } catch (const std::logic_error&) {
  }
  throw std::invalid_argument("flat index '" + s + "' is not of the form v:i:j");
}

}  // namespace wtl
