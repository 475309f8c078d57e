#pragma once

#include <optional>

#include "niep/certificate.hpp"
#include "niep/spectrum.hpp"
#include "niep/tolerance.hpp"

namespace niep {

struct VerificationReport {
  bool nonnegative = false;
  bool positive = false;
  bool irreducible = false;
  double residual = 0.0;
  std::optional<double> row_sums_constant;
  bool symmetric = false;
  int perron_multiplicity = 0;
};

/// Recomputes every property of the certificate's matrix from scratch.
/// Throws DimensionMismatch when the degree differs from the matrix size.
VerificationReport verify(const RealizationCertificate& cert, const MonicPolynomial& target,
                          const Tolerance& tol = {});

/// Residual within tol, nonnegative, and the irreducible / positive claims
/// backed by the recomputed flags.
bool accepts(const RealizationCertificate& cert, const VerificationReport& report,
             const Tolerance& tol = {});

/// Both characteristic-polynomial routes agree with each other and the target.
/// Throws TooLarge above 12 vertices.
bool cross_check_small(const RealizationCertificate& cert, const MonicPolynomial& target,
                       const Tolerance& tol = {});

/// Algebraic multiplicity of the spectral radius of a nonnegative matrix:
/// the number of strongly connected diagonal blocks attaining it.
int perron_multiplicity(const Matrix& a, const Tolerance& tol = {});

}  // namespace niep
