#include "niep/lowdim.hpp"

#include <algorithm>
#include <cmath>

#include "niep/constructions.hpp"
#include "niep/digraph.hpp"
#include "niep/error.hpp"
#include "niep/structure.hpp"
#include "niep/tracezero.hpp"

namespace niep {
namespace {

constexpr double kSqrt3 = 1.7320508075688772;

Classification verdict(Verdict v, std::string reason, std::string anchor,
                       std::optional<RealizationCertificate> witness = std::nullopt) {
  return {v, std::move(reason), std::move(anchor), std::move(witness)};
}

RealizationCertificate cert_of(const Matrix& m, const std::string& construction, Claims claims,
                               const Spectrum& s, const Tolerance& tol) {
  return make_certificate(m.cwiseMax(0.0), construction, claims, poly_from_spectrum(s, tol));
}

RealizationCertificate scalar_cert(double v, const Tolerance& tol) {
  return cert_of(Matrix::Constant(1, 1, v), "scalar", {true, true, v > tol.sign}, Spectrum({v}), tol);
}

RealizationCertificate pair_cert(double a, double b, const Tolerance& tol) {
  const Matrix m = doubly_stochastic_2x2(a, b);
  return cert_of(m, "doubly-stochastic-2x2", {true, is_irreducible(m, tol), false}, Spectrum({a, b}), tol);
}

// Shared rejection on the classical necessary conditions.
std::optional<Classification> reject_necessary(const Spectrum& s, const Tolerance& tol) {
  const StructureReport r = check_necessary(s, tol);
  if (!r.self_conjugate) return verdict(Verdict::NotRealizable, "list is not closed under conjugation", "necessary-conditions");
  if (!r.perron_ok) return verdict(Verdict::NotRealizable, "no nonnegative entry attains the spectral radius", "necessary-conditions");
  if (!r.trace_ok) return verdict(Verdict::NotRealizable, "trace is negative", "necessary-conditions");
  return std::nullopt;
}

// Positive, then irreducible, realizations of a simple real list in order
// of preference: triangular lift, block Suleimanova lift, Suleimanova.
std::optional<Classification> real_constructions(const Spectrum& s, const Tolerance& tol) {
  try {
    return verdict(Verdict::PositiveR, "simple top entry and lambda_n above (max(lambda_2, 0) - lambda_1)/(n - 1)",
                   "triangular-lift", realize_real_positive(s, tol));
  } catch (const Error&) {
  }
  try {
    return verdict(Verdict::PositiveR, "top entry plus the nonpositive entries is positive",
                   "block-suleimanova-lift", realize_suleimanova_plus(s, tol));
  } catch (const Error&) {
  }
  try {
    return verdict(Verdict::IR, "one positive entry, the rest nonpositive, nonnegative trace", "suleimanova",
                   realize_suleimanova(s, tol));
  } catch (const Error&) {
  }
  return std::nullopt;
}

Matrix block_pair(const Matrix& top_right, const Matrix& bottom_left) {
  const Index m = top_right.rows();
  Matrix a = Matrix::Zero(2 * m, 2 * m);
  a.topRightCorner(m, m) = top_right;
  a.bottomLeftCorner(m, m) = bottom_left;
  return a;
}

}  // namespace

RealizationCertificate assemble_reducible(const std::vector<RealizationCertificate>& parts) {
  if (parts.empty()) throw Error(Errc::InvalidArgument, "no parts to assemble");
  if (parts.size() == 1) return parts.front();
  Index n = 0;
  for (const auto& p : parts) n += p.matrix.rows();
  Matrix m = Matrix::Zero(n, n);
  MonicPolynomial target;
  std::string construction = "block-diagonal(";
  Index at = 0;
  bool nonnegative = true;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& p = parts[i];
    m.block(at, at, p.matrix.rows(), p.matrix.rows()) = p.matrix;
    at += p.matrix.rows();
    target = target * p.target;
    nonnegative = nonnegative && p.claims.nonnegative;
    construction += (i > 0 ? ", " : "") + p.construction;
  }
  construction += ")";
  return make_certificate(std::move(m), construction, {nonnegative, false, false}, std::move(target));
}

Classification classify_n2(const Spectrum& s, const Tolerance& tol) {
  if (s.size() != 2) throw Error(Errc::DimensionMismatch, "expected two entries");
  if (auto r = reject_necessary(s, tol)) return *r;
  if (!s.is_real(tol)) return verdict(Verdict::NotRealizable, "a 2-list with a nonreal entry has no Perron root", "necessary-conditions");
  const auto v = s.real_values();
  const double a = v[0];
  const double b = v[1];
  const Compare cmp{tol.eq(s.spectral_radius())};
  if (cmp.eq(a, b)) {
    return verdict(Verdict::RealizableNotIR, "Perron root has multiplicity 2", "perron-multiplicity",
                   assemble_reducible({scalar_cert(a, tol), scalar_cert(b, tol)}));
  }
  return verdict(Verdict::IR, "a >= |b| with b != a", "doubly-stochastic-2x2", pair_cert(a, b, tol));
}

Classification classify_n3(const Spectrum& s, const Tolerance& tol) {
  if (s.size() != 3) throw Error(Errc::DimensionMismatch, "expected three entries");
  if (auto r = reject_necessary(s, tol)) return *r;
  const Compare cmp{tol.eq(s.spectral_radius())};

  if (!s.is_real(tol)) {
    // Canonical order puts the Perron root first here.
    const double a = s[0].real();
    const double c = s[1].real();
    const double d = std::abs(s[1].imag());
    if (cmp.nonneg(a + 2.0 * c) && cmp.nonneg(a - c - kSqrt3 * d)) {
      return verdict(Verdict::IR, "a + 2c >= 0 and a - c - sqrt(3) d >= 0; one real entry so every realization is irreducible",
                     "single-nonnegative-entry",
                     cert_of(circulant_3x3(a, c, d), "circulant-3x3", {true, true, false}, s, tol));
    }
    return verdict(Verdict::NotRealizable, "a + 2c < 0 or a - c - sqrt(3) d < 0", "three-circulant-bounds");
  }

  const auto v = s.real_values();
  if (cmp.eq(v[0], v[1])) {
    return verdict(Verdict::RealizableNotIR, "Perron root is repeated", "perron-multiplicity",
                   assemble_reducible({scalar_cert(v[0], tol), pair_cert(v[1], v[2], tol)}));
  }
  if (cmp.eq(v[2], -v[0])) {
    if (cmp.zero(v[1])) {
      return verdict(Verdict::IR, "{a, 0, -a} is realized by a symmetric star", "star",
                     cert_of(star_matrix(v[0], 3), "star", {true, true, false}, s, tol));
    }
    return verdict(Verdict::RealizableNotIR,
                   "not spectrally simple and not invariant under rotation by the circle count",
                   "frobenius-necessity",
                   assemble_reducible({pair_cert(v[0], v[2], tol), scalar_cert(v[1], tol)}));
  }
  if (auto r = real_constructions(s, tol)) return *r;
  return verdict(Verdict::Unknown, "no covered construction applies", "none");
}

Classification classify_n4_real(const Spectrum& s, const Tolerance& tol) {
  if (s.size() != 4) throw Error(Errc::DimensionMismatch, "expected four entries");
  if (auto r = reject_necessary(s, tol)) return *r;
  if (!s.is_real(tol)) throw Error(Errc::InvalidArgument, "expected a real list");
  const Compare cmp{tol.eq(s.spectral_radius())};
  const auto v = s.real_values();
  const double l1 = v[0], l2 = v[1], l3 = v[2], l4 = v[3];

  const auto a1_parts = [&] { return std::vector{pair_cert(l1, l4, tol), pair_cert(l2, l3, tol)}; };
  if (cmp.eq(l1, l2)) {
    return verdict(Verdict::RealizableNotIR, "Perron root is repeated", "perron-multiplicity",
                   assemble_reducible(a1_parts()));
  }
  if (cmp.eq(l4, -l1)) {
    if (cmp.eq(l3, -l2)) {
      const double p = l1 * l1;
      const double q = l2 * l2;
      Matrix c(2, 2);
      c << p + q, p - q, p - q, p + q;
      const Matrix a = block_pair(c / 2.0, Matrix::Identity(2, 2));
      return verdict(Verdict::IR, "lambda_4 = -lambda_1 and lambda_3 = -lambda_2: rotation invariant",
                     "frobenius-block", cert_of(a, "negation-square [0 C; I 0]", {true, true, false}, s, tol));
    }
    // The trace check guarantees lambda_2 + lambda_3 >= 0 here.
    return verdict(Verdict::RealizableNotIR, "lambda_4 = -lambda_1 without rotation invariance",
                   "frobenius-necessity", assemble_reducible(a1_parts()));
  }

  const double sum = l1 + l2 + l3 + l4;
  const double s1 = l1 + l2 - l3 - l4;
  const double s2 = l1 - l2 - l3 + l4;
  const double s3 = l1 - l2 + l3 - l4;
  if (cmp.nonneg(s1) && cmp.nonneg(s2) && cmp.nonneg(s3) && cmp.nonneg(sum)) {
    Matrix a2(4, 4);
    a2 << sum, s1, s2, s3,
          s1, sum, s3, s2,
          s2, s3, sum, s1,
          s3, s2, s1, sum;
    a2 = (a2 / 4.0).cwiseMax(0.0);
    if (is_irreducible(a2, tol)) {
      return verdict(Verdict::IR, "the symmetric 4x4 Hadamard-type realization is nonnegative", "hadamard-4x4",
                     cert_of(a2, "hadamard-4x4", {true, true, false}, s, tol));
    }
  }
  if (cmp.nonneg(l2 + l3)) {
    // Two doubly stochastic blocks with the top entry lowered by eps, joined
    // so that e stays the Perron vector, then lifted back by (eps/4) J.
    const double eps = 0.5 * std::min(l1 - l2, l1 + l4);
    const double top = l1 - eps;
    Matrix b = Matrix::Zero(4, 4);
    b.topLeftCorner(2, 2) = doubly_stochastic_2x2(top, l4);
    b.bottomRightCorner(2, 2) = doubly_stochastic_2x2(l2, l3);
    b.bottomLeftCorner(2, 2).setConstant((top - l2) / 2.0);
    const Matrix a = brauer_update(b, Vector::Ones(4), Vector::Constant(4, eps / 4.0), top, tol);
    return verdict(Verdict::PositiveR, "two-block realization joined and lifted by a rank-one update",
                   "two-block-lift", cert_of(a, "two-block-lift", {true, true, true}, s, tol));
  }
  return verdict(Verdict::NotRealizable, "neither the two-block nor the Hadamard-type form is nonnegative",
                 "real-4-characterization");
}

Classification classify_n4_complex(const Spectrum& s, const Tolerance& tol) {
  if (s.size() != 4) throw Error(Errc::DimensionMismatch, "expected four entries");
  if (auto r = reject_necessary(s, tol)) return *r;
  const Compare cmp{tol.eq(s.spectral_radius())};

  std::vector<double> reals;
  Complex pair{0.0, 0.0};
  for (const auto& z : s) {
    if (cmp.zero(z.imag())) {
      reals.push_back(z.real());
    } else if (z.imag() > 0.0) {
      pair = z;
    }
  }
  if (reals.size() != 2) throw Error(Errc::InvalidArgument, "expected two real entries and one conjugate pair");
  std::sort(reals.begin(), reals.end(), std::greater<>());
  const double a = reals[0];
  const double b = reals[1];
  const double c = pair.real();
  const double d = pair.imag();
  const double u = a + 2.0 * c;
  const double v = a - c - kSqrt3 * d;
  const bool triple_ok = cmp.nonneg(u) && cmp.nonneg(v);
  const Spectrum triple{Complex(a, 0.0), pair, std::conj(pair)};
  const auto circulant = [&] {
    return cert_of(circulant_3x3(a, c, d), "circulant-3x3", {true, true, false}, triple, tol);
  };

  if (cmp.eq(a, b)) {
    if (triple_ok) {
      return verdict(Verdict::RealizableNotIR, "Perron root is repeated", "perron-multiplicity",
                     assemble_reducible({scalar_cert(b, tol), circulant()}));
    }
    return verdict(Verdict::NotRealizable, "repeated Perron root but {a, c +- di} is not realizable",
                   "three-circulant-bounds");
  }

  // Positive 4x4 built from the circulant with the top entry lowered by eps
  // and lifted back by (eps/4) J; usable for eps in (max(0, -4b), bound).
  const auto positive_lift = [&](double eps) {
    const double p = 4.0 * u - eps;
    const double q = 4.0 * (a - c + kSqrt3 * d) - eps;
    const double r = 4.0 * v - eps;
    Matrix m(4, 4);
    m << p, q, r, 3.0 * eps,
         r, p, q, 3.0 * eps,
         q, r, p, 3.0 * eps,
         12.0 * (a - b) - 9.0 * eps, 3.0 * eps, 3.0 * eps, 12.0 * b + 3.0 * eps;
    return cert_of(m / 12.0, "circulant-lift", {true, true, true}, s, tol);
  };
  const double hi = std::min({4.0 * u, 4.0 * v, 4.0 * (a - b) / 3.0});

  if (cmp.neg(b) || !triple_ok) {
    const double lo = std::max(0.0, -4.0 * b);
    if (cmp.lt(lo, hi)) {
      return verdict(Verdict::PositiveR, "not partitionable; the lifted circulant is positive", "circulant-lift",
                     positive_lift(0.5 * (lo + hi)));
    }
    if (triple_ok && cmp.le(std::abs(b), u / 3.0)) {
      return verdict(Verdict::IR, "not partitionable; b fits under the circulant diagonal", "append-via-diagonal",
                     cert_of(append_via_diagonal(circulant().matrix, b, tol), "circulant-3x3 + append-via-diagonal",
                             {true, true, false}, s, tol));
    }
    if (cmp.zero(s.trace().real())) {
      const MonicPolynomial poly = poly_from_spectrum(s, tol);
      if (const auto p = tracezero_order(poly, tol)) return classify_tracezero(poly, *p, tol);
    }
    return verdict(Verdict::Unknown, "not partitionable and no covered construction applies", "none");
  }

  if (cmp.pos(u) && cmp.pos(v)) {
    return verdict(Verdict::PositiveR, "a + 2c > 0 and a - c - sqrt(3) d > 0", "circulant-lift",
                   positive_lift(0.5 * hi));
  }
  if (cmp.zero(u) && cmp.zero(v)) {
    if (cmp.pos(b)) {
      return verdict(Verdict::RealizableNotIR, "scaled cube roots of unity plus b > 0: no rotation invariance",
                     "frobenius-necessity", assemble_reducible({circulant(), scalar_cert(b, tol)}));
    }
    RealizationCertificate cert = append_zero(circulant(), tol);
    return verdict(Verdict::IR, "scaled cube roots of unity plus a zero", "append-zero", std::move(cert));
  }
  if (cmp.le(b, u / 3.0)) {
    return verdict(Verdict::IR, "(a + 2c)(a - c - sqrt(3) d) = 0 and b <= (a + 2c)/3", "append-via-diagonal",
                   cert_of(append_via_diagonal(circulant().matrix, b, tol), "circulant-3x3 + append-via-diagonal",
                           {true, true, false}, s, tol));
  }
  if (cmp.zero(u)) {
    const double room = 0.75 * a * a - d * d;
    if (b * b < room - cmp.slack) {
      Matrix m(4, 4);
      m << 0, 1, 0, 0,
           b * b, 0, 1, 0,
           0.25 * (a + b) * ((a - 2.0 * b) * (a - 2.0 * b) + 4.0 * d * d), 0, 0, 1,
           0, 0, room - b * b, b;
      return verdict(Verdict::IR, "a + 2c = 0 and b^2 < 3a^2/4 - d^2", "hessenberg-4x4-small-b",
                     cert_of(m, "hessenberg-4x4-small-b", {true, true, false}, s, tol));
    }
    const double q = 3.0 * std::pow(b, 4) - 12.0 * a * (a * a + 4.0 * d * d) * b +
                     std::pow(3.0 * a * a - 4.0 * d * d, 2);
    if (cmp.nonneg(q / 64.0)) {
      const double e = 0.5 * room + 3.0 * b * b / 16.0;
      Matrix m(4, 4);
      m << b / 4, 1, 0, 0,
           e, b / 4, 1, 0,
           (2.0 * a + b) * ((a - b) * (a - b) + 4.0 * d * d) / 8.0, 0, b / 4, 1,
           q / 64.0, 0, e, b / 4;
      return verdict(Verdict::IR, "a + 2c = 0 and the quartic discriminant is nonnegative", "hessenberg-4x4-large-b",
                     cert_of(m, "hessenberg-4x4-large-b", {true, true, false}, s, tol));
    }
    return verdict(Verdict::Unknown, "a + 2c = 0, b^2 + d^2 >= 3a^2/4 and the quartic discriminant is negative: undecided region",
                   "open-region");
  }
  return verdict(Verdict::Unknown,
                 "a - c - sqrt(3) d = 0 and b > (a + 2c)/3: undecided; conjectured not irreducibly realizable",
                 "open-region");
}

Classification classify_lowdim(const Spectrum& s, const Tolerance& tol) {
  switch (s.size()) {
    case 1: {
      if (auto r = reject_necessary(s, tol)) return *r;
      return verdict(Verdict::IR, "a 1x1 nonnegative matrix is irreducible", "scalar",
                     scalar_cert(std::max(s[0].real(), 0.0), tol));
    }
    case 2: return classify_n2(s, tol);
    case 3: return classify_n3(s, tol);
    case 4: {
      if (auto r = reject_necessary(s, tol)) return *r;
      return s.is_real(tol) ? classify_n4_real(s, tol) : classify_n4_complex(s, tol);
    }
    default: throw Error(Errc::DimensionMismatch, "low-dimensional solvers cover sizes 1 to 4");
  }
}

}  // namespace niep
