#pragma once

#include <vector>

#include "niep/certificate.hpp"
#include "niep/classification.hpp"
#include "niep/spectrum.hpp"
#include "niep/tolerance.hpp"

namespace niep {

Classification classify_n2(const Spectrum& s, const Tolerance& tol = {});
Classification classify_n3(const Spectrum& s, const Tolerance& tol = {});

/// Real 4-lists. Frobenius dichotomy when lambda_4 = -lambda_1, otherwise the
/// circulant-type A_2 realization or the two-block A_1 with a rank-one lift.
Classification classify_n4_real(const Spectrum& s, const Tolerance& tol = {});

/// 4-lists {a, b, c +- di}. Subcases are tried in a fixed order and the first
/// match decides; the reason string names the subcase.
Classification classify_n4_complex(const Spectrum& s, const Tolerance& tol = {});

/// Routes sizes 1 to 4 to the solvers above.
Classification classify_lowdim(const Spectrum& s, const Tolerance& tol = {});

/// Block-diagonal witness for the union of the parts' spectra. A single part
/// is returned unchanged.
RealizationCertificate assemble_reducible(const std::vector<RealizationCertificate>& parts);

}  // namespace niep
