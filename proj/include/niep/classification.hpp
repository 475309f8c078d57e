#pragma once

#include <optional>
#include <string>

#include "niep/certificate.hpp"

namespace niep {

enum class Verdict { NotRealizable, RealizableNotIR, IR, PositiveR, Unknown };

const char* to_string(Verdict v);

/// IR and PositiveR always carry a verified irreducible witness;
/// RealizableNotIR carries a reducible one.
struct Classification {
  Verdict verdict = Verdict::Unknown;
  std::string reason;
  std::string anchor;
  std::optional<RealizationCertificate> witness;
};

}  // namespace niep
