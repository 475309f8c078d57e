#pragma once

#include <optional>
#include <string>
#include <variant>

#include "niep/classification.hpp"
#include "niep/spectrum.hpp"
#include "niep/tolerance.hpp"
#include "niep/types.hpp"

namespace niep::cli {

enum class Mode { Classify, Realize, Verify, Dot };
enum class Format { Text, Structured };

using Input = std::variant<Spectrum, MonicPolynomial>;

struct Request {
  Input input;
  Mode mode = Mode::Classify;
  Tolerance tol;
  Format format = Format::Text;
  // verify mode: matrix to check instead of building a witness
  std::optional<Matrix> matrix;
};

struct Response {
  int exit_code = 0;
  std::string output;
};

inline constexpr int kExitDecided = 0;
inline constexpr int kExitUnknown = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitVerification = 3;

/// Routing: necessary conditions, n <= 4 solvers, real / Suleimanova /
/// negation-invariant constructions, trace-zero path, then Unknown.
Classification dispatch(const Input& input, const Tolerance& tol = {});

Response run(const Request& request);

/// Parses a command line (without the program name) and runs it.
Response run_command_line(int argc, const char* const* argv);

}  // namespace niep::cli
