#pragma once

#include <string>

#include "niep/spectrum.hpp"
#include "niep/types.hpp"

namespace niep {

/// What a construction asserts about its witness. Verification recomputes
/// every flag independently.
struct Claims {
  bool nonnegative = true;
  bool irreducible = false;
  bool positive = false;
};

/// A witness matrix together with the construction that produced it and the
/// polynomial it is meant to realize.
struct RealizationCertificate {
  Matrix matrix;
  std::string construction;
  Claims claims;
  MonicPolynomial target;
  // max |charpoly(matrix) - target| over coefficients
  double residual = 0.0;
};

RealizationCertificate make_certificate(Matrix matrix, std::string construction, Claims claims,
                                        MonicPolynomial target);

}  // namespace niep
