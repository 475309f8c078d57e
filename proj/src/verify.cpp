#include "niep/verify.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "niep/digraph.hpp"
#include "niep/error.hpp"

namespace niep {
namespace {

double block_radius(const Matrix& a, const std::vector<Index>& vertices) {
  const Index m = static_cast<Index>(vertices.size());
  Matrix sub(m, m);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) sub(i, j) = a(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)]);
  }
  if (m == 1) return std::max(0.0, sub(0, 0));
  Eigen::EigenSolver<Matrix> solver(sub, false);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

int perron_multiplicity(const Matrix& a, const Tolerance& tol) {
  if (a.rows() == 0) return 0;
  const Matrix clean = a.cwiseMax(0.0);
  const auto components = strongly_connected_components(from_matrix(clean, tol));
  std::vector<double> radii;
  radii.reserve(components.size());
  for (const auto& c : components) radii.push_back(block_radius(clean, c));
  const double rho = *std::max_element(radii.begin(), radii.end());
  return static_cast<int>(
      std::count_if(radii.begin(), radii.end(), [&](double r) { return std::abs(r - rho) <= tol.eq(rho); }));
}

VerificationReport verify(const RealizationCertificate& cert, const MonicPolynomial& target, const Tolerance& tol) {
  const Matrix& m = cert.matrix;
  if (m.rows() != m.cols()) throw Error(Errc::DimensionMismatch, "matrix is not square");
  if (m.rows() != target.degree()) {
    throw Error(Errc::DimensionMismatch, "matrix size " + std::to_string(m.rows()) + " vs degree " +
                                             std::to_string(target.degree()));
  }
  VerificationReport r;
  r.residual = m.rows() == 0 ? 0.0 : max_coeff_deviation(charpoly_leverrier(m), target);
  if (m.rows() == 0) return r;

  const double low = m.minCoeff();
  r.nonnegative = low >= -tol.sign;
  r.positive = low > tol.sign;
  r.irreducible = r.nonnegative && is_irreducible(m, tol);

  const double scale = m.cwiseAbs().maxCoeff();
  const Vector sums = m.rowwise().sum();
  if ((sums.array() - sums(0)).abs().maxCoeff() <= tol.eq(scale * static_cast<double>(m.cols()))) {
    r.row_sums_constant = sums(0);
  }
  r.symmetric = (m - m.transpose()).cwiseAbs().maxCoeff() <= tol.eq(scale);
  if (r.nonnegative) r.perron_multiplicity = perron_multiplicity(m, tol);
  return r;
}

bool accepts(const RealizationCertificate& cert, const VerificationReport& report, const Tolerance& tol) {
  if (!report.nonnegative) return false;
  if (report.residual > tol.eq(cert.target.max_abs_coeff())) return false;
  if (cert.claims.irreducible && !report.irreducible) return false;
  if (cert.claims.positive && !report.positive) return false;
  return true;
}

bool cross_check_small(const RealizationCertificate& cert, const MonicPolynomial& target, const Tolerance& tol) {
  if (cert.matrix.rows() > kMaxCycleEnumeration) {
    throw Error(Errc::TooLarge, "cycle enumeration is limited to " + std::to_string(kMaxCycleEnumeration) +
                                    " vertices");
  }
  const MonicPolynomial by_cycles = charpoly_by_cycles(from_matrix(cert.matrix.cwiseMax(0.0), tol));
  const MonicPolynomial by_traces = charpoly_leverrier(cert.matrix);
  if (by_cycles.degree() != target.degree()) return false;
  const double slack = tol.eq(target.max_abs_coeff());
  return max_coeff_deviation(by_cycles, by_traces) <= slack && max_coeff_deviation(by_cycles, target) <= slack;
}

}  // namespace niep
