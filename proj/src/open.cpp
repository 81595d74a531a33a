#include "wtl/open.hpp"

namespace wtl {

std::string to_string(const OpenIndex& a) {
  switch (a.kind) {
    case OpenKind::E: return "e:" + std::to_string(a.p);
    case OpenKind::H0: return "h0:" + std::to_string(a.k) + ":" + std::to_string(a.p);
    case OpenKind::H1: return "h1:" + std::to_string(a.k);
    case OpenKind::S: return "s:" + std::to_string(a.p);
  }
  return "?";
}

std::string to_string(OpenFamily f) {
  switch (f) {
    case OpenFamily::Infinity: return "infinity";
    case OpenFamily::Pole: return "pole";
    case OpenFamily::Log: return "log";
  }
  return "?";
}

}  // namespace wtl
