#include "niep/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "niep/error.hpp"

namespace niep {
namespace {

bool canonical_less(const Complex& a, const Complex& b) {
  const double ma = std::abs(a);
  const double mb = std::abs(b);
  if (ma != mb) return ma > mb;
  if (a.real() != b.real()) return a.real() > b.real();
  return a.imag() > b.imag();
}

double max_modulus(const std::vector<Complex>& v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace

Spectrum::Spectrum(std::vector<Complex> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end(), canonical_less);
}

Spectrum::Spectrum(std::initializer_list<Complex> values)
    : Spectrum(std::vector<Complex>(values)) {}

Spectrum::Spectrum(const std::vector<double>& values)
    : Spectrum(std::vector<Complex>(values.begin(), values.end())) {}

Complex Spectrum::trace() const { return std::accumulate(begin(), end(), Complex{0.0, 0.0}); }

double Spectrum::spectral_radius() const { return max_modulus(values_); }

bool Spectrum::is_real(const Tolerance& tol) const {
  const double slack = tol.eq(spectral_radius());
  return std::all_of(begin(), end(), [&](const Complex& z) { return std::abs(z.imag()) <= slack; });
}

bool Spectrum::is_self_conjugate(const Tolerance& tol) const {
  std::vector<Complex> conj;
  conj.reserve(values_.size());
  for (const auto& z : values_) conj.push_back(std::conj(z));
  return approx_equal(*this, Spectrum(std::move(conj)), tol);
}

std::vector<double> Spectrum::real_values() const {
  std::vector<double> r;
  r.reserve(values_.size());
  for (const auto& z : values_) r.push_back(z.real());
  std::sort(r.begin(), r.end(), std::greater<>());
  return r;
}

Spectrum Spectrum::negated() const {
  std::vector<Complex> v;
  v.reserve(values_.size());
  for (const auto& z : values_) v.push_back(-z);
  return Spectrum(std::move(v));
}

Spectrum Spectrum::squared() const {
  std::vector<Complex> v;
  v.reserve(values_.size());
  for (const auto& z : values_) v.push_back(z * z);
  return Spectrum(std::move(v));
}

bool approx_equal(const Spectrum& a, const Spectrum& b, const Tolerance& tol) {
  if (a.size() != b.size()) return false;
  const double slack = tol.eq(std::max(a.spectral_radius(), b.spectral_radius()));
  std::vector<bool> used(static_cast<std::size_t>(b.size()), false);
  for (const auto& z : a) {
    std::size_t best = used.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < used.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(z - b[static_cast<Index>(j)]);
      if (d < best_dist) {
        best_dist = d;
        best = j;
      }
    }
    if (best == used.size() || best_dist > slack) return false;
    used[best] = true;
  }
  return true;
}

double MonicPolynomial::k(Index i) const {
  if (i == 0) return 1.0;
  if (i < 0 || i > degree()) return 0.0;
  return coeffs_[static_cast<std::size_t>(i - 1)];
}

double MonicPolynomial::max_abs_coeff() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Complex MonicPolynomial::operator()(Complex x) const {
  Complex acc{1.0, 0.0};
  for (double c : coeffs_) acc = acc * x + c;
  return acc;
}

MonicPolynomial MonicPolynomial::operator*(const MonicPolynomial& rhs) const {
  const Index n = degree() + rhs.degree();
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (Index i = 0; i <= degree(); ++i) {
    for (Index j = 0; j <= rhs.degree(); ++j) {
      if (i + j == 0) continue;
      out[static_cast<std::size_t>(i + j - 1)] += k(i) * rhs.k(j);
    }
  }
  return MonicPolynomial(std::move(out));
}

MonicPolynomial MonicPolynomial::deflate(double root) const {
  if (degree() == 0) throw Error(Errc::InvalidArgument, "cannot deflate a constant");
  std::vector<double> q(static_cast<std::size_t>(degree() - 1));
  double carry = 1.0;
  for (Index i = 1; i < degree(); ++i) {
    carry = k(i) + root * carry;
    q[static_cast<std::size_t>(i - 1)] = carry;
  }
  return MonicPolynomial(std::move(q));
}

Spectrum MonicPolynomial::roots(const Tolerance& tol) const {
  const Index n = degree();
  if (n == 0) return {};

  Matrix companion = Matrix::Zero(n, n);
  for (Index j = 0; j < n; ++j) companion(0, j) = -k(j + 1);
  for (Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  Eigen::EigenSolver<Matrix> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw Error(Errc::InvalidArgument, "eigenvalue iteration failed on the companion matrix");
  }
  std::vector<Complex> raw(solver.eigenvalues().begin(), solver.eigenvalues().end());

  // Newton polishing in extended precision, kept only when it helps.
  using Wide = std::complex<long double>;
  auto eval = [&](Wide x) {
    Wide p{1.0L, 0.0L};
    Wide dp{0.0L, 0.0L};
    for (double c : coeffs_) {
      dp = dp * x + p;
      p = p * x + static_cast<long double>(c);
    }
    return std::pair{p, dp};
  };
  for (auto& z : raw) {
    Wide x{z.real(), z.imag()};
    for (int it = 0; it < 8; ++it) {
      auto [p, dp] = eval(x);
      if (std::abs(dp) == 0.0L) break;
      Wide next = x - p / dp;
      if (std::abs(eval(next).first) >= std::abs(p)) break;
      x = next;
    }
    z = Complex(static_cast<double>(x.real()), static_cast<double>(x.imag()));
  }

  // Snap nearly real roots, then pair the rest as exact conjugates.
  const double scale = max_modulus(raw);
  const double slack = std::sqrt(tol.eq_rel) * (1.0 + scale) * 1e-2;
  std::vector<Complex> out;
  std::vector<Complex> upper;
  std::vector<Complex> lower;
  for (const auto& z : raw) {
    if (std::abs(z.imag()) <= slack) {
      out.emplace_back(z.real(), 0.0);
    } else if (z.imag() > 0) {
      upper.push_back(z);
    } else {
      lower.push_back(z);
    }
  }
  std::vector<bool> taken(lower.size(), false);
  for (const auto& z : upper) {
    std::size_t best = lower.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < lower.size(); ++j) {
      if (taken[j]) continue;
      const double d = std::abs(z - std::conj(lower[j]));
      if (d < best_dist) {
        best_dist = d;
        best = j;
      }
    }
    if (best == lower.size()) {
      out.push_back(z);
      continue;
    }
    taken[best] = true;
    const Complex mean = 0.5 * (z + std::conj(lower[best]));
    out.push_back(mean);
    out.push_back(std::conj(mean));
  }
  for (std::size_t j = 0; j < lower.size(); ++j) {
    if (!taken[j]) out.push_back(lower[j]);
  }
  return Spectrum(std::move(out));
}

double max_coeff_deviation(const MonicPolynomial& a, const MonicPolynomial& b) {
  if (a.degree() != b.degree()) {
    throw Error(Errc::DimensionMismatch, "degrees " + std::to_string(a.degree()) + " and " +
                                             std::to_string(b.degree()));
  }
  double m = 0.0;
  for (Index i = 1; i <= a.degree(); ++i) m = std::max(m, std::abs(a.k(i) - b.k(i)));
  return m;
}

MonicPolynomial poly_from_spectrum(const Spectrum& s, const Tolerance& tol) {
  using Wide = std::complex<long double>;
  std::vector<Wide> c(static_cast<std::size_t>(s.size()) + 1, Wide{0.0L, 0.0L});
  c[0] = 1.0L;
  Index deg = 0;
  for (const auto& z : s) {
    const Wide root{z.real(), z.imag()};
    for (Index i = deg + 1; i >= 1; --i) {
      c[static_cast<std::size_t>(i)] -= root * c[static_cast<std::size_t>(i - 1)];
    }
    ++deg;
  }
  double scale = 0.0;
  for (const auto& v : c) scale = std::max(scale, static_cast<double>(std::abs(v)));
  std::vector<double> k;
  k.reserve(static_cast<std::size_t>(s.size()));
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (std::abs(static_cast<double>(c[i].imag())) > tol.eq(scale)) {
      throw Error(Errc::NotSelfConjugate, "coefficient k_" + std::to_string(i) +
                                              " has imaginary part " +
                                              std::to_string(static_cast<double>(c[i].imag())));
    }
    k.push_back(static_cast<double>(c[i].real()));
  }
  return MonicPolynomial(std::move(k));
}

}  // namespace niep
