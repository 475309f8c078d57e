#pragma once

#include <cmath>
#include <initializer_list>
#include <random>
#include <tuple>
#include <vector>

#include "niep/certificate.hpp"
#include "niep/digraph.hpp"
#include "niep/spectrum.hpp"
#include "niep/types.hpp"
#include "niep/verify.hpp"

namespace testing {

using niep::Index;
using niep::Matrix;
using niep::MonicPolynomial;

// Path 1 -> 2 -> ... -> n with unit weights plus the listed 1-based entries.
inline Matrix ebl(Index n, std::initializer_list<std::tuple<Index, Index, double>> entries) {
  Matrix m = Matrix::Zero(n, n);
  for (Index i = 0; i + 1 < n; ++i) m(i, i + 1) = 1.0;
  for (const auto& [i, j, w] : entries) m(i - 1, j - 1) = w;
  return m;
}

// x^n + k_1 x^{n-1} + ... from k_1..k_n.
inline MonicPolynomial poly(std::initializer_list<double> k) { return MonicPolynomial(std::vector<double>(k)); }

inline double deviation(const Matrix& m, const MonicPolynomial& p) {
  return niep::max_coeff_deviation(niep::charpoly_leverrier(m), p);
}

// Nonnegative, charpoly within `limit`, and strongly connected when asked.
inline bool witness_ok(const niep::RealizationCertificate& cert, const MonicPolynomial& target, double limit,
                       bool irreducible) {
  const auto report = niep::verify(cert, target);
  return report.nonnegative && report.residual <= limit && (!irreducible || report.irreducible);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(engine_); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace testing
