#pragma once

#include <cmath>

namespace niep {

// Two knobs: a relative one for equality of eigenvalues and coefficients, and
// an absolute one for sign tests on matrix entries.
struct Tolerance {
  double eq_rel = 1e-9;
  double sign = 1e-12;

  // Equality slack for quantities whose magnitude is around `scale`.
  double eq(double scale = 0.0) const { return eq_rel * (1.0 + std::abs(scale)); }
};

// Tolerant scalar comparisons bound to one slack value.
struct Compare {
  double slack;

  bool zero(double v) const { return std::abs(v) <= slack; }
  bool pos(double v) const { return v > slack; }
  bool neg(double v) const { return v < -slack; }
  bool nonneg(double v) const { return v >= -slack; }
  bool nonpos(double v) const { return v <= slack; }
  bool eq(double a, double b) const { return std::abs(a - b) <= slack; }
  bool lt(double a, double b) const { return a < b - slack; }
  bool le(double a, double b) const { return a <= b + slack; }
};

}  // namespace niep
