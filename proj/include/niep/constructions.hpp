#pragma once

#include <span>
#include <vector>

#include "niep/certificate.hpp"
#include "niep/spectrum.hpp"
#include "niep/tolerance.hpp"
#include "niep/types.hpp"

namespace niep {

/// A + x y^T, where A x = lambda x. The eigenvalue lambda moves to
/// lambda + y^T x and the rest of the spectrum is kept. Throws NotEigenvector.
Matrix brauer_update(const Matrix& a, const Vector& x, const Vector& y, double lambda,
                     const Tolerance& tol = {});

/// Grows an irreducible nonnegative matrix by one row and column so that x
/// joins its spectrum, splitting the largest diagonal entry (ties go to the
/// largest index) through the orthogonal similarity (1/sqrt 2)[1 1; 1 -1].
/// The new vertex is appended last. Requires |x| <= max diagonal entry.
Matrix append_via_diagonal(const Matrix& a, double x, const Tolerance& tol = {});

/// Certificate for sigma + 0 built from an irreducible certificate for sigma.
RealizationCertificate append_zero(const RealizationCertificate& cert, const Tolerance& tol = {});

/// Symmetric rank-2 arrow matrix with spectrum {a, 0, ..., 0, -a}; the first
/// row and column carry a / sqrt(n - 1) each.
Matrix star_matrix(double a, Index n);

/// (1/2)[a+b a-b; a-b a+b], spectrum {a, b}.
Matrix doubly_stochastic_2x2(double a, double b);

/// (1/3) circulant realizing {a, c + di, c - di}; nonnegative iff
/// a + 2c >= 0 and a - c - sqrt(3) d >= 0.
Matrix circulant_3x3(double a, double c, double d);

/// Perfect's constant-row-sum matrix for a Suleimanova list sorted in
/// decreasing order. Row sums equal the first entry.
Matrix perfect_matrix(std::span<const double> lambda);

/// Paparella's permutative matrix for a Suleimanova list sorted in
/// decreasing order. Row sums equal the first entry.
Matrix paparella_matrix(std::span<const double> lambda);

struct PerronPair {
  double value = 0.0;
  Vector vector;  // positive, unit 2-norm
};

/// Perron root and right Perron vector of an irreducible nonnegative matrix by
/// power iteration on A + sI (s > 0 makes the iteration primitive). Throws
/// PerronVectorFailed on non-convergence or a non-positive limit.
PerronPair perron_vector(const Matrix& a, const Tolerance& tol = {});

/// Positive realization for real lists with a simple top entry and
/// lambda_n > (max(lambda_2, 0) - lambda_1) / (n - 1). Throws ConditionFailed.
RealizationCertificate realize_real_positive(const Spectrum& s, const Tolerance& tol = {});

/// Irreducible realization of a Suleimanova list (one positive entry, the rest
/// nonpositive, nonnegative trace). Throws NotSuleimanova or NotRealizable.
RealizationCertificate realize_suleimanova(const Spectrum& s, const Tolerance& tol = {});

/// Positive realization when lambda_1 > lambda_2 and
/// alpha = lambda_1 + (sum of the nonpositive entries) > 0.
/// Throws AlphaNotPositive or ConditionFailed.
RealizationCertificate realize_suleimanova_plus(const Spectrum& s, const Tolerance& tol = {});

/// Irreducible realization of a spectrum equal to its own negation, built as
/// [0 B; B 0] when every pair is real and [0 B; I 0] otherwise, with B
/// realizing the squared half-spectrum.
RealizationCertificate realize_negation_invariant(const Spectrum& s, const Tolerance& tol = {});

/// Positive realization of sigma with its Perron root raised by eps, from an
/// irreducible certificate: A + eps * x u^T / (u^T x) with x the Perron vector
/// and u = x.
RealizationCertificate positive_from_ir(const RealizationCertificate& cert, double eps,
                                        const Tolerance& tol = {});

}  // namespace niep
