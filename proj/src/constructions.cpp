#include "niep/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "niep/digraph.hpp"
#include "niep/error.hpp"
#include "niep/structure.hpp"

namespace niep {
namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kSqrt3 = 1.7320508075688772;

// Real entries in decreasing order; throws `code` when s has a nonreal entry.
std::vector<double> sorted_real(const Spectrum& s, const Tolerance& tol, Errc code) {
  if (!s.is_real(tol)) throw Error(code, "spectrum is not real");
  return s.real_values();
}

Matrix constant(Index n, double v) { return Matrix::Constant(n, n, v); }

}  // namespace

Matrix brauer_update(const Matrix& a, const Vector& x, const Vector& y, double lambda,
                     const Tolerance& tol) {
  if (a.rows() != a.cols() || x.size() != a.rows() || y.size() != a.rows()) {
    throw Error(Errc::DimensionMismatch, "matrix and vectors do not conform");
  }
  const double xnorm = x.cwiseAbs().maxCoeff();
  if (xnorm == 0.0) throw Error(Errc::InvalidArgument, "eigenvector is zero");
  const double scale = (a.cwiseAbs().rowwise().sum().maxCoeff() + std::abs(lambda)) * xnorm;
  const double res = (a * x - lambda * x).cwiseAbs().maxCoeff();
  if (res > tol.eq(scale)) {
    throw Error(Errc::NotEigenvector, "residual " + std::to_string(res) + " of A x = lambda x");
  }
  return a + x * y.transpose();
}

Matrix append_via_diagonal(const Matrix& a, double x, const Tolerance& tol) {
  if (a.rows() != a.cols()) throw Error(Errc::DimensionMismatch, "matrix is not square");
  const Index n = a.rows();
  if (n < 2) throw Error(Errc::InputTooSmall, "at least a 2x2 matrix is required");
  if (!is_irreducible(a, tol)) {
    throw Error(Errc::PreconditionFailed, "matrix is not irreducible and nonnegative");
  }
  Index p = 0;
  for (Index i = 1; i < n; ++i) {
    if (a(i, i) >= a(p, p)) p = i;
  }
  const double d = a(p, p);
  if (std::abs(x) > d + tol.sign) {
    throw Error(Errc::DiagonalTooSmall, "|x| = " + std::to_string(std::abs(x)) +
                                            " exceeds the largest diagonal entry " + std::to_string(d));
  }
  x = std::clamp(x, -d, d);

  Matrix b = Matrix::Zero(n + 1, n + 1);
  b.topLeftCorner(n, n) = a;
  for (Index i = 0; i < n; ++i) {
    if (i == p) continue;
    b(i, p) = b(i, n) = a(i, p) / kSqrt2;
    b(p, i) = b(n, i) = a(p, i) / kSqrt2;
  }
  b(p, p) = b(n, n) = (d + x) / 2.0;
  b(p, n) = b(n, p) = (d - x) / 2.0;
  return b;
}

RealizationCertificate append_zero(const RealizationCertificate& cert, const Tolerance& tol) {
  if (!cert.claims.irreducible) {
    throw Error(Errc::PreconditionFailed, "certificate does not claim irreducibility");
  }
  const MonicPolynomial target = cert.target * MonicPolynomial({0.0});
  Claims claims = cert.claims;
  claims.positive = false;
  if (cert.matrix.rows() == 1) {
    const double a = cert.matrix(0, 0);
    if (!(a > tol.sign)) throw Error(Errc::PreconditionFailed, "{0, 0} has no irreducible realization");
    return make_certificate(constant(2, a / 2.0), cert.construction + " + append-zero", claims, target);
  }
  return make_certificate(append_via_diagonal(cert.matrix, 0.0, tol), cert.construction + " + append-zero",
                          claims, target);
}

Matrix star_matrix(double a, Index n) {
  if (!(a > 0.0) || n < 2) throw Error(Errc::InvalidArgument, "star matrix needs a > 0 and n >= 2");
  const double w = a / std::sqrt(static_cast<double>(n - 1));
  Matrix m = Matrix::Zero(n, n);
  m.row(0).tail(n - 1).setConstant(w);
  m.col(0).tail(n - 1).setConstant(w);
  return m;
}

Matrix doubly_stochastic_2x2(double a, double b) {
  Matrix m(2, 2);
  m << a + b, a - b, a - b, a + b;
  return m / 2.0;
}

Matrix circulant_3x3(double a, double c, double d) {
  const double row[3] = {(a + 2.0 * c) / 3.0, (a - c - kSqrt3 * d) / 3.0, (a - c + kSqrt3 * d) / 3.0};
  Matrix m(3, 3);
  for (Index i = 0; i < 3; ++i) {
    for (Index j = 0; j < 3; ++j) m(i, j) = row[(j - i + 3) % 3];
  }
  return m;
}

Matrix perfect_matrix(std::span<const double> lambda) {
  const auto n = static_cast<Index>(lambda.size());
  if (n == 0) throw Error(Errc::InvalidArgument, "empty list");
  const double s1 = std::accumulate(lambda.begin(), lambda.end(), 0.0);
  Matrix m = Matrix::Zero(n, n);
  m(0, 0) = s1;
  for (Index j = 1; j < n; ++j) m(0, j) = -lambda[static_cast<std::size_t>(j)];
  for (Index i = 1; i < n; ++i) {
    m(i, 0) = s1 - lambda[static_cast<std::size_t>(i)];
    for (Index j = 1; j < n; ++j) {
      if (j != i) m(i, j) = -lambda[static_cast<std::size_t>(j)];
    }
  }
  return m;
}

Matrix paparella_matrix(std::span<const double> lambda) {
  const auto n = static_cast<Index>(lambda.size());
  if (n == 0) throw Error(Errc::InvalidArgument, "empty list");
  const double base = std::accumulate(lambda.begin(), lambda.end(), 0.0) / static_cast<double>(n);
  Matrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (i == j) {
        m(i, j) = base;
      } else if (j == 0) {
        m(i, j) = base - lambda[static_cast<std::size_t>(i)];
      } else {
        m(i, j) = base - lambda[static_cast<std::size_t>(j)];
      }
    }
  }
  return m;
}

PerronPair perron_vector(const Matrix& a, const Tolerance& tol) {
  const Index n = a.rows();
  if (n == 0 || a.cols() != n) throw Error(Errc::DimensionMismatch, "matrix is not square");
  // Eigen's Schur-based solver gives a starting vector; the eigenvalue of
  // largest real part is the Perron root for an irreducible matrix.
  Eigen::EigenSolver<Matrix> solver(a, true);
  if (solver.info() != Eigen::Success) throw Error(Errc::PerronVectorFailed, "eigensolver failed");
  Index best = 0;
  for (Index i = 1; i < n; ++i) {
    if (solver.eigenvalues()(i).real() > solver.eigenvalues()(best).real()) best = i;
  }
  Vector v = solver.eigenvectors().col(best).real();
  if (v.sum() < 0.0) v = -v;
  v.normalize();

  // A few shifted power steps on A + sI to polish; the shift keeps every
  // step positive and damps the other eigenvalues on the spectral circle.
  const double shift = std::max(a.cwiseAbs().rowwise().sum().maxCoeff(), 1.0);
  for (int it = 0; it < 20; ++it) {
    Vector next = a * v + shift * v;
    next.normalize();
    const double change = (next - v).cwiseAbs().maxCoeff();
    v = next;
    if (change <= 1e-15) break;
  }
  const double rho = (a * v).dot(v);
  const double res = (a * v - rho * v).cwiseAbs().maxCoeff();
  if (!(v.minCoeff() > 0.0) || res > tol.eq(rho) * 10.0) {
    throw Error(Errc::PerronVectorFailed, "no positive Perron vector (residual " + std::to_string(res) + ")");
  }
  return {rho, v};
}

RealizationCertificate realize_real_positive(const Spectrum& s, const Tolerance& tol) {
  const auto lambda = sorted_real(s, tol, Errc::ConditionFailed);
  const auto n = static_cast<Index>(lambda.size());
  if (n == 0) throw Error(Errc::ConditionFailed, "empty spectrum");
  const MonicPolynomial target = poly_from_spectrum(s, tol);
  const Compare cmp{tol.eq(s.spectral_radius())};
  if (n == 1) {
    if (!cmp.pos(lambda[0])) throw Error(Errc::ConditionFailed, "single entry must be positive");
    return make_certificate(constant(1, lambda[0]), "triangular-lift", {true, true, true}, target);
  }
  const double l1 = lambda[0];
  // The (1,1) entry of B is lambda_1 - eps, so a negative lambda_2 behaves
  // like lambda_2 = 0 in the bound below.
  const double l2 = std::max(lambda[1], 0.0);
  const double ln = lambda.back();
  const double nd = static_cast<double>(n);
  if (!cmp.lt(lambda[1], l1) || !cmp.lt((l2 - l1) / (nd - 1.0), ln)) {
    throw Error(Errc::ConditionFailed,
                "needs lambda_1 > lambda_2 and lambda_n > (max(lambda_2, 0) - lambda_1)/(n - 1)");
  }
  // A = B + (eps/n) J is positive exactly for eps in (max(0, -n lambda_n), n(lambda_1 - l2)/(n - 1)).
  const double lo = std::max(0.0, -nd * ln);
  const double hi = nd * (l1 - l2) / (nd - 1.0);
  const double eps = 0.5 * (lo + hi);

  Matrix b = Matrix::Zero(n, n);
  b(0, 0) = l1 - eps;
  for (Index i = 1; i < n; ++i) {
    b(i, 0) = l1 - eps - lambda[static_cast<std::size_t>(i)];
    b(i, i) = lambda[static_cast<std::size_t>(i)];
  }
  const Vector e = Vector::Ones(n);
  const Matrix a = brauer_update(b, e, Vector::Constant(n, eps / nd), l1 - eps, tol);
  return make_certificate(a, "triangular-lift", {true, true, true}, target);
}

RealizationCertificate realize_suleimanova(const Spectrum& s, const Tolerance& tol) {
  const auto lambda = sorted_real(s, tol, Errc::NotSuleimanova);
  if (lambda.empty()) throw Error(Errc::NotSuleimanova, "empty spectrum");
  const Compare cmp{tol.eq(s.spectral_radius())};
  if (!cmp.pos(lambda[0]) || std::any_of(lambda.begin() + 1, lambda.end(), [&](double v) { return cmp.pos(v); })) {
    throw Error(Errc::NotSuleimanova, "needs one positive entry and the rest nonpositive");
  }
  const double trace = std::accumulate(lambda.begin(), lambda.end(), 0.0);
  if (cmp.neg(trace)) throw Error(Errc::NotRealizable, "trace " + std::to_string(trace) + " is negative");

  std::vector<double> nonzero{lambda[0]};
  int zeros = 0;
  for (std::size_t i = 1; i < lambda.size(); ++i) {
    if (cmp.zero(lambda[i])) {
      ++zeros;
    } else {
      nonzero.push_back(lambda[i]);
    }
  }
  const MonicPolynomial target = poly_from_spectrum(s, tol);
  if (nonzero.size() == 1) {
    // Only the Perron root is nonzero, so the trace is positive.
    std::vector<double> list(lambda.size(), 0.0);
    list[0] = lambda[0];
    return make_certificate(paparella_matrix(list), "paparella", {true, true, false}, target);
  }
  RealizationCertificate cert =
      make_certificate(perfect_matrix(nonzero), "perfect", {true, true, false},
                       poly_from_spectrum(Spectrum(nonzero), tol));
  for (int i = 0; i < zeros; ++i) cert = append_zero(cert, tol);
  if (zeros > 0) cert.construction = "perfect + append-zero";
  cert.target = target;
  cert.residual = max_coeff_deviation(charpoly_leverrier(cert.matrix), target);
  return cert;
}

RealizationCertificate realize_suleimanova_plus(const Spectrum& s, const Tolerance& tol) {
  const auto lambda = sorted_real(s, tol, Errc::ConditionFailed);
  const auto n = static_cast<Index>(lambda.size());
  if (n < 2) throw Error(Errc::ConditionFailed, "needs at least two entries");
  const Compare cmp{tol.eq(s.spectral_radius())};
  const double l1 = lambda[0];
  if (!cmp.lt(lambda[1], l1)) throw Error(Errc::ConditionFailed, "needs lambda_1 > lambda_2");

  std::vector<double> middle;    // lambda_2..lambda_t, positive
  std::vector<double> negative;  // lambda_{t+1}..lambda_n, nonpositive
  for (std::size_t i = 1; i < lambda.size(); ++i) (cmp.pos(lambda[i]) ? middle : negative).push_back(lambda[i]);
  const double alpha = l1 + std::accumulate(negative.begin(), negative.end(), 0.0);
  if (!cmp.pos(alpha)) throw Error(Errc::AlphaNotPositive, "alpha = " + std::to_string(alpha));

  // A = B + (eps/n) J is positive exactly for eps below both bounds.
  const double nd = static_cast<double>(n);
  const double eps = 0.5 * std::min(nd * alpha / (nd - 1.0), nd * (l1 - lambda[1]) / (nd - 1.0));

  std::vector<double> head{l1 - eps};
  head.insert(head.end(), negative.begin(), negative.end());
  const auto m = static_cast<Index>(head.size());
  Matrix b = Matrix::Zero(n, n);
  b.topLeftCorner(m, m) = perfect_matrix(head);
  for (Index j = 0; j < static_cast<Index>(middle.size()); ++j) {
    const double v = middle[static_cast<std::size_t>(j)];
    b(m + j, 0) = l1 - eps - v;
    b(m + j, m + j) = v;
  }
  const Matrix a = brauer_update(b, Vector::Ones(n), Vector::Constant(n, eps / nd), l1 - eps, tol);
  return make_certificate(a, "block-suleimanova-lift", {true, true, true}, poly_from_spectrum(s, tol));
}

namespace {

// Irreducible (positive where possible) realization of a small list used as
// the block B in the negation-invariant constructions.
std::optional<Matrix> realize_block(const Spectrum& tau, const Tolerance& tol) {
  const Compare cmp{tol.eq(tau.spectral_radius())};
  if (tau.size() == 1) {
    if (!cmp.pos(tau[0].real())) return std::nullopt;
    return constant(1, tau[0].real());
  }
  if (tau.is_real(tol)) {
    const auto v = tau.real_values();
    if (tau.size() == 2 && cmp.lt(std::abs(v[1]), v[0])) return doubly_stochastic_2x2(v[0], v[1]);
    for (auto build : {realize_real_positive, realize_suleimanova_plus, realize_suleimanova}) {
      try {
        return build(tau, tol).matrix;
      } catch (const Error&) {
      }
    }
    return std::nullopt;
  }
  if (tau.size() == 3 && cmp.zero(tau[0].imag())) {
    const double a = tau[0].real();
    const double c = tau[1].real();
    const double d = std::abs(tau[1].imag());
    if (std::abs(tau[0]) >= std::abs(tau[1]) && cmp.nonneg(a + 2.0 * c) && cmp.nonneg(a - c - kSqrt3 * d)) {
      return circulant_3x3(a, c, d).cwiseMax(0.0);
    }
  }
  return std::nullopt;
}

}  // namespace

RealizationCertificate realize_negation_invariant(const Spectrum& s, const Tolerance& tol) {
  if (s.empty() || !approx_equal(s, s.negated(), tol)) {
    throw Error(Errc::NotNegationInvariant, "spectrum differs from its negation");
  }
  const Compare cmp{tol.eq(s.spectral_radius())};
  const MonicPolynomial target = poly_from_spectrum(s, tol);

  // One representative per +- pair: positive real part, or positive imaginary
  // part on the imaginary axis; zeros pair among themselves.
  std::vector<Complex> reps;
  int zeros = 0;
  for (const auto& z : s) {
    if (cmp.zero(std::abs(z))) {
      ++zeros;
    } else if (cmp.pos(z.real()) || (cmp.zero(z.real()) && z.imag() > 0.0)) {
      reps.push_back(z);
    }
  }
  const bool strip_zero = zeros % 2 == 1;
  for (int i = 0; i < zeros / 2; ++i) reps.emplace_back(0.0, 0.0);
  if (reps.empty()) throw Error(Errc::HalfSpectrumUnrealized, "nothing to realize");

  const auto m = static_cast<Index>(reps.size());
  const bool all_real = std::all_of(reps.begin(), reps.end(), [&](const Complex& z) { return cmp.zero(z.imag()); });
  Matrix a = Matrix::Zero(2 * m, 2 * m);
  std::string construction;
  if (all_real) {
    std::vector<double> half;
    for (const auto& z : reps) half.push_back(z.real());
    const auto b = realize_block(Spectrum(half), tol);
    if (!b) throw Error(Errc::HalfSpectrumUnrealized, "half spectrum has no positive realization");
    a.topRightCorner(m, m) = *b;
    a.bottomLeftCorner(m, m) = *b;
    construction = "negation-pair [0 B; B 0]";
  } else {
    std::vector<Complex> squares;
    for (const auto& z : reps) squares.push_back(z * z);
    const auto b = realize_block(Spectrum(squares), tol);
    if (!b) throw Error(Errc::HalfSpectrumUnrealized, "squared half spectrum is not covered");
    a.topRightCorner(m, m) = *b;
    a.bottomLeftCorner(m, m) = Matrix::Identity(m, m);
    construction = "negation-square [0 B; I 0]";
  }
  if (!is_irreducible(a, tol)) throw Error(Errc::HalfSpectrumUnrealized, "block witness is reducible");

  if (!strip_zero) return make_certificate(a, construction, {true, true, false}, target);
  RealizationCertificate cert = append_zero(
      make_certificate(a, construction, {true, true, false}, target.deflate(0.0)), tol);
  cert.target = target;
  cert.residual = max_coeff_deviation(charpoly_leverrier(cert.matrix), target);
  return cert;
}

RealizationCertificate positive_from_ir(const RealizationCertificate& cert, double eps, const Tolerance& tol) {
  if (!(eps > 0.0)) throw Error(Errc::InvalidArgument, "eps must be positive");
  if (!is_irreducible(cert.matrix, tol)) {
    throw Error(Errc::PreconditionFailed, "certificate matrix is not irreducible");
  }
  const PerronPair perron = perron_vector(cert.matrix, tol);
  const Vector& x = perron.vector;
  const Matrix a = brauer_update(cert.matrix, x, (eps / x.squaredNorm()) * x, perron.value, tol);
  const MonicPolynomial target =
      cert.target.deflate(perron.value) * MonicPolynomial({-(perron.value + eps)});
  return make_certificate(a, cert.construction + " + perron-shift", {true, true, true}, target);
}

}  // namespace niep
