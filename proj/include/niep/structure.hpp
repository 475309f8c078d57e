#pragma once

#include <optional>

#include "niep/spectrum.hpp"

namespace niep {

/// Outcome of the classical necessary conditions plus the circle structure
/// around the Perron root.
struct StructureReport {
  bool trace_ok = false;
  bool self_conjugate = false;
  bool perron_ok = false;
  int perron_multiplicity = 0;
  bool spectrally_simple = false;
  std::optional<int> frobenius_h;
  int zero_count = 0;

  bool necessary_ok() const { return trace_ok && self_conjugate && perron_ok; }
};

StructureReport check_necessary(const Spectrum& s, const Tolerance& tol = {});

/// Number of eigenvalues (with repeats) on the spectral circle.
int spectral_circle_count(const Spectrum& s, const Tolerance& tol = {});

/// Largest h >= 2 such that exactly h eigenvalues lie on the spectral circle
/// and the nonzero part of s is invariant under rotation by 2*pi/h. Empty when
/// no such h exists or s is spectrally simple. Throws PerronMissing when s is
/// not self-conjugate or has no Perron root.
std::optional<int> frobenius_structure(const Spectrum& s, const Tolerance& tol = {});

Spectrum append(const Spectrum& s, double b);

/// Adds t to one occurrence of the Perron root.
Spectrum shift_perron(const Spectrum& s, double t, const Tolerance& tol = {});

}  // namespace niep
