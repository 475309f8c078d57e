#pragma once

#include <initializer_list>
#include <vector>

#include "niep/tolerance.hpp"
#include "niep/types.hpp"

namespace niep {

/// A multiset of complex eigenvalues kept in canonical order: decreasing
/// modulus, then decreasing real part, then decreasing imaginary part, so that
/// exact conjugate pairs sit next to each other.
class Spectrum {
 public:
  Spectrum() = default;
  Spectrum(std::vector<Complex> values);
  Spectrum(std::initializer_list<Complex> values);
  Spectrum(const std::vector<double>& values);

  Index size() const { return static_cast<Index>(values_.size()); }
  bool empty() const { return values_.empty(); }
  const Complex& operator[](Index i) const { return values_[static_cast<std::size_t>(i)]; }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }
  const std::vector<Complex>& values() const { return values_; }

  Complex trace() const;
  double spectral_radius() const;

  bool is_real(const Tolerance& tol = {}) const;
  bool is_self_conjugate(const Tolerance& tol = {}) const;

  // Real parts sorted in decreasing order of value (not modulus).
  std::vector<double> real_values() const;

  Spectrum negated() const;
  Spectrum squared() const;

 private:
  std::vector<Complex> values_;
};

/// Multiset equality: greedy nearest-neighbour matching where every element
/// must find a partner within tol.eq(scale).
bool approx_equal(const Spectrum& a, const Spectrum& b, const Tolerance& tol = {});

/// x^n + k_1 x^{n-1} + ... + k_n, stored as [k_1..k_n].
class MonicPolynomial {
 public:
  MonicPolynomial() = default;
  explicit MonicPolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}

  Index degree() const { return static_cast<Index>(coeffs_.size()); }

  // k_i with k_0 = 1 and k_i = 0 beyond the degree.
  double k(Index i) const;

  const std::vector<double>& coeffs() const { return coeffs_; }
  double max_abs_coeff() const;

  Complex operator()(Complex x) const;

  MonicPolynomial operator*(const MonicPolynomial& rhs) const;

  // Quotient of synthetic division by (x - root); the remainder is dropped.
  MonicPolynomial deflate(double root) const;

  // Roots via companion-matrix eigenvalues with Newton polishing; nearly
  // real roots are snapped to the real axis and pairs made exact conjugates.
  Spectrum roots(const Tolerance& tol = {}) const;

  friend bool operator==(const MonicPolynomial&, const MonicPolynomial&) = default;

 private:
  std::vector<double> coeffs_;
};

/// Largest coefficient-wise deviation. Throws DimensionMismatch on degree mismatch.
double max_coeff_deviation(const MonicPolynomial& a, const MonicPolynomial& b);

/// Expands prod (x - lambda_i). Throws NotSelfConjugate when an imaginary part
/// survives beyond tolerance.
MonicPolynomial poly_from_spectrum(const Spectrum& s, const Tolerance& tol = {});

}  // namespace niep
