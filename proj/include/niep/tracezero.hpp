#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "niep/classification.hpp"
#include "niep/spectrum.hpp"
#include "niep/tolerance.hpp"
#include "niep/types.hpp"

namespace niep {

/// Closing arc of an r-cycle in a simple EBL digraph (path 1 -> 2 -> ... -> n
/// with unit weights). Initial cycles close with arc (r, 1); final cycles
/// close with arc (n, n + 1 - r). Lengths are 1-based cycle lengths.
struct ClosingArc {
  Index length = 0;
  double weight = 0.0;
};

struct EblSpec {
  Index n = 0;
  std::vector<ClosingArc> initial;
  std::vector<ClosingArc> final;
};

/// Lower Hessenberg matrix with ones on the superdiagonal and the closing-arc
/// weights in column 1 and row n. Throws ArcCollision when two cycles write
/// different weights to the same entry.
Matrix ebl_to_matrix(const EblSpec& spec);

/// Realizability of x^n + k_p x^{n-p} + ... + k_n with 2 <= p <= n <= 2p + 1.
/// Throws BadShape on a coefficient pattern or (p, n) range violation.
bool torre_mayo_test(const MonicPolynomial& poly, Index p, const Tolerance& tol = {});

/// Index of the first nonzero coefficient, when it is a valid p for the shape
/// above (so k_1 = 0 and n <= 2p + 1).
std::optional<Index> tracezero_order(const MonicPolynomial& poly, const Tolerance& tol = {});

/// Strongly connected simple EBL digraph realizing x^n + k_q x^{n-q}, k_q < 0.
EblSpec build_single_term(Index n, Index q, double kq);

/// Full decision for the trace-zero shape: NotRealizable, the exceptional
/// RealizableNotIR families, or IR with a simple EBL witness.
Classification classify_tracezero(const MonicPolynomial& poly, Index p, const Tolerance& tol = {});

/// The explicit appendix matrices for n = 6 (k_3..k_6) and n = 7 (k_3..k_7).
/// Case labels: n = 6: a, b1, b2, c1, c2; n = 7: a1, a2, a3, b1, b3, b4, c1,
/// c2, c4, c5. Exceptional labels (no matrix) throw UnknownCase.
Matrix appendix_fixture(Index n, std::string_view case_label, const std::vector<double>& coeffs);

}  // namespace niep
