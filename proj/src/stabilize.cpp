#include "wtl/stabilize.hpp"

namespace wtl {

std::string to_string(const HatIndex& h) { return "vhat:" + std::to_string(h.i) + ":" + std::to_string(h.p); }

std::string to_string(StabFamily f) {
  switch (f) {
    case StabFamily::EE: return "EE";
    case StabFamily::HHSame: return "HH-same";
    case StabFamily::HHCross: return "HH-cross";
    case StabFamily::EH: return "EH";
    case StabFamily::ELog: return "E-log";
    case StabFamily::HLogCross: return "H-log-cross";
    case StabFamily::HLogSame: return "H-log-same";
    case StabFamily::LogLog: return "log-log";
  }
  return "?";
}

}  // namespace wtl
