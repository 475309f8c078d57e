#include "niep/classification.hpp"

namespace niep {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::NotRealizable: return "NotRealizable";
    case Verdict::RealizableNotIR: return "RealizableNotIR";
    case Verdict::IR: return "IR";
    case Verdict::PositiveR: return "PositiveR";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

}  // namespace niep
