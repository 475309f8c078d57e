#include "niep/tracezero.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "niep/certificate.hpp"
#include "niep/digraph.hpp"
#include "niep/error.hpp"
#include "niep/lowdim.hpp"

namespace niep {
namespace {

// Coefficients k_0..k_n with entries inside the tolerance snapped to zero.
struct Coeffs {
  std::vector<double> k;
  Compare cmp{0.0};

  double operator()(Index i) const {
    return i >= 0 && i < static_cast<Index>(k.size()) ? k[static_cast<std::size_t>(i)] : 0.0;
  }
  Index degree() const { return static_cast<Index>(k.size()) - 1; }
};

Coeffs snap(const MonicPolynomial& poly, const Tolerance& tol) {
  double scale = 0.0;
  for (double c : poly.coeffs()) scale = std::max({scale, std::abs(c), c * c});
  Coeffs out;
  out.cmp = Compare{tol.eq(scale)};
  out.k.push_back(1.0);
  for (double c : poly.coeffs()) out.k.push_back(out.cmp.zero(c) ? 0.0 : c);
  return out;
}

void check_shape(const Coeffs& k, Index p) {
  const Index n = k.degree();
  if (p < 2 || p > n || n > 2 * p + 1) {
    throw Error(Errc::BadShape, "need 2 <= p <= n <= 2p + 1, got p = " + std::to_string(p) +
                                    ", n = " + std::to_string(n));
  }
  for (Index i = 1; i < p; ++i) {
    if (k(i) != 0.0) throw Error(Errc::BadShape, "k_" + std::to_string(i) + " must vanish");
  }
}

bool realizable(const Coeffs& k, Index p) {
  const Index n = k.degree();
  const Compare& c = k.cmp;
  for (Index i = p; i <= std::min(n, 2 * p - 1); ++i) {
    if (!c.nonpos(k(i))) return false;
  }
  if (2 * p > n) return true;
  const double kp = k(p);
  const double k2p = k(2 * p);
  if (!c.le(k2p, kp * kp / 4.0)) return false;
  if (2 * p + 1 > n) return true;
  const double bound = k2p <= 0.0 ? kp * k(p + 1)
                                  : k(p + 1) * (kp / 2.0 - std::sqrt(std::max(0.0, kp * kp / 4.0 - k2p)));
  return c.le(k(2 * p + 1), bound);
}

// Collects closing arcs, dropping zero weights.
struct EblBuilder {
  EblSpec spec;

  explicit EblBuilder(Index n) { spec.n = n; }
  EblBuilder& initial(Index r, double w) {
    if (w > 0.0) spec.initial.push_back({r, w});
    return *this;
  }
  EblBuilder& final(Index r, double w) {
    if (w > 0.0) spec.final.push_back({r, w});
    return *this;
  }
};

Classification irreducible(const EblSpec& spec, const MonicPolynomial& poly, const std::string& label) {
  Classification c;
  c.verdict = Verdict::IR;
  c.reason = "strongly connected simple EBL digraph (" + label + ")";
  c.anchor = "trace-zero-ebl";
  c.witness = make_certificate(ebl_to_matrix(spec), "ebl " + label, {true, true, false}, poly);
  return c;
}

RealizationCertificate cycle_block(Index len, double w) {
  EblBuilder b(len);
  b.initial(len, w);
  std::vector<double> k(static_cast<std::size_t>(len), 0.0);
  k.back() = -w;
  return make_certificate(ebl_to_matrix(b.spec), "basic cycle", {true, w > 0.0 || len == 1, false},
                          MonicPolynomial(std::move(k)));
}

Classification reducible(std::vector<RealizationCertificate> parts, const MonicPolynomial& poly,
                         const std::string& reason, const std::string& anchor) {
  RealizationCertificate cert = assemble_reducible(parts);
  cert.target = poly;
  cert.residual = max_coeff_deviation(charpoly_leverrier(cert.matrix), poly);
  return {Verdict::RealizableNotIR, reason, anchor, std::move(cert)};
}

// p < n < 2p: any two cycles of length >= p on n vertices meet.
Classification build_short(const Coeffs& k, Index p, const MonicPolynomial& poly) {
  const Index n = k.degree();
  std::vector<Index> negative;
  for (Index r = p; r < n; ++r) {
    if (k(r) < 0.0) negative.push_back(r);
  }
  EblBuilder b(n);
  if (k(n) < 0.0) {
    b.initial(n, -k(n));
    for (Index r : negative) b.initial(r, -k(r));
    return irreducible(b.spec, poly, "basic cycle with initial cycles");
  }
  if (negative.size() >= 2) {
    const Index q2 = negative.back();
    b.final(q2, -k(q2));
    for (Index r : negative) {
      if (r != q2) b.initial(r, -k(r));
    }
    return irreducible(b.spec, poly, "initial and final cycles");
  }
  return irreducible(build_single_term(n, negative.front(), k(negative.front())), poly, "single term");
}

Classification build_even(const Coeffs& k, Index p, const MonicPolynomial& poly) {
  const Index n = 2 * p;
  const Compare& c = k.cmp;
  const double kp = k(p);
  const double k2p = k(n);
  std::vector<Index> middle;  // p+1..2p-1 with negative coefficient
  for (Index r = p + 1; r < n; ++r) {
    if (k(r) < 0.0) middle.push_back(r);
  }
  EblBuilder b(n);
  if (k2p < 0.0) {
    b.initial(n, -k2p);
    for (Index r = p; r < n; ++r) b.initial(r, -k(r));
    return irreducible(b.spec, poly, "a");
  }
  if (k2p == 0.0) {
    if (middle.empty()) return irreducible(build_single_term(n, p, kp), poly, "b2");
    const Index q2 = middle.back();
    b.final(q2, -k(q2));
    for (Index r = p; r < n; ++r) {
      if (r != q2) b.initial(r, -k(r));
    }
    return irreducible(b.spec, poly, "b1");
  }
  const double disc = std::max(0.0, kp * kp / 4.0 - k2p);
  const double s = std::sqrt(disc);
  if (!middle.empty()) {
    b.final(p, -kp / 2.0 + s).initial(p, -kp / 2.0 - s);
    for (Index r = p + 1; r < n; ++r) b.initial(r, -k(r));
    return irreducible(b.spec, poly, "c1");
  }
  if (c.lt(k2p, kp * kp / 4.0)) {
    b.initial(n, disc).initial(p, -kp / 2.0).final(p, -kp / 2.0);
    return irreducible(b.spec, poly, "c2");
  }
  // k_{p+1} .. k_{2p-1} = 0 (the index range ends at 2p - 1 since n = 2p).
  return reducible({cycle_block(p, -kp / 2.0), cycle_block(p, -kp / 2.0)}, poly,
                   "k_{p+1} .. k_{2p-1} vanish and k_{2p} = k_p^2/4, so P = (x^p + k_p/2)^2 has a repeated Perron root",
                   "perron-multiplicity");
}

Classification build_odd(const Coeffs& k, Index p, const MonicPolynomial& poly) {
  const Index n = 2 * p + 1;
  const Compare& c = k.cmp;
  const double kp = k(p);
  const double kp1 = k(p + 1);
  const double k2p = k(2 * p);
  const double last = k(n);
  std::vector<Index> middle;  // p+2..2p-1 with negative coefficient
  for (Index r = p + 2; r < 2 * p; ++r) {
    if (k(r) < 0.0) middle.push_back(r);
  }
  const auto add_initial_range = [&](EblBuilder& b, Index from, Index skip) {
    for (Index r = from; r < 2 * p; ++r) {
      if (r != skip) b.initial(r, -k(r));
    }
  };

  EblBuilder b(n);
  if (k2p < 0.0) {
    b.initial(2 * p, -k2p).final(p, -kp).initial(n, kp * kp1 - last);
    add_initial_range(b, p + 1, 0);
    return irreducible(b.spec, poly, "a1");
  }
  if (k2p == 0.0) {
    const double top = kp * kp1;
    if (c.lt(last, top)) {
      b.initial(n, top - last).final(p, -kp);
      add_initial_range(b, p + 1, 0);
      return irreducible(b.spec, poly, "b1");
    }
    if (!middle.empty()) {
      const Index q = middle.back();
      b.initial(p, -kp).final(q, -k(q)).final(p + 1, -kp1);
      add_initial_range(b, p + 2, q);
      return irreducible(b.spec, poly, "b3");
    }
    if (kp1 < 0.0) {
      return reducible({cycle_block(p, -kp), cycle_block(p + 1, -kp1)}, poly,
                       "(x^p + k_p)(x^{p+1} + k_{p+1}): not spectrally simple and no rotation invariance",
                       "frobenius-necessity");
    }
    return irreducible(build_single_term(n, p, kp), poly, "b4");
  }

  const double disc = std::max(0.0, kp * kp / 4.0 - k2p);
  const double s = std::sqrt(disc);
  const double m0 = -kp / 2.0 + s;
  const double small = -kp / 2.0 - s;
  const double top = -kp1 * m0;
  if (c.lt(last, top)) {
    b.initial(n, top - last).initial(p, small).final(p, m0);
    add_initial_range(b, p + 1, 0);
    return irreducible(b.spec, poly, "c1");
  }
  if (!middle.empty()) {
    const Index q = middle.back();
    b.initial(q, -k(q)).final(p, m0).initial(p, small);
    add_initial_range(b, p + 1, q);
    return irreducible(b.spec, poly, "c2");
  }
  const bool double_root = !c.lt(k2p, kp * kp / 4.0);
  if (kp1 < 0.0) {
    if (!double_root) {
      // The optimal realization splits into two p-cycles and a (p+1)-cycle
      // disjoint from the heavier one; it is never strongly connected.
      EblBuilder w(n);
      w.initial(p, small).final(p, m0).initial(p + 1, -kp1);
      RealizationCertificate cert =
          make_certificate(ebl_to_matrix(w.spec), "ebl (reducible)", {true, false, false}, poly);
      return {Verdict::RealizableNotIR,
              "k_{2p+1} attains its upper bound with k_{p+2..2p-1} = 0: no strongly connected realization",
              "trace-zero-extremal", std::move(cert)};
    }
    b.initial(p + 1, -kp1 / 2.0).final(p + 1, -kp1 / 2.0).initial(p, -kp / 2.0).final(p, -kp / 2.0);
    return irreducible(b.spec, poly, "c5");
  }
  if (!double_root) {
    b.initial(2 * p, disc).final(p, -kp / 2.0).initial(p, -kp / 2.0);
    return irreducible(b.spec, poly, "c4");
  }
  return reducible({cycle_block(p, -kp / 2.0), cycle_block(p, -kp / 2.0), cycle_block(1, 0.0)}, poly,
                   "x(x^p + k_p/2)^2: Perron root is repeated", "perron-multiplicity");
}

}  // namespace

Matrix ebl_to_matrix(const EblSpec& spec) {
  const Index n = spec.n;
  if (n < 1) throw Error(Errc::BadInput, "EBL digraph needs at least one vertex");
  Matrix m = Matrix::Zero(n, n);
  for (Index i = 0; i + 1 < n; ++i) m(i, i + 1) = 1.0;
  std::map<std::pair<Index, Index>, double> written;
  const auto put = [&](Index row, Index col, double w) {
    const auto [it, fresh] = written.emplace(std::pair{row, col}, w);
    if (!fresh && it->second != w) {
      throw Error(Errc::ArcCollision, "entry (" + std::to_string(row + 1) + "," + std::to_string(col + 1) +
                                          ") written with two weights");
    }
    m(row, col) = w;
  };
  for (const auto& arc : spec.initial) {
    if (arc.length < 1 || arc.length > n || !(arc.weight > 0.0)) throw Error(Errc::BadInput, "bad initial cycle");
    put(arc.length - 1, 0, arc.weight);
  }
  for (const auto& arc : spec.final) {
    if (arc.length < 1 || arc.length > n || !(arc.weight > 0.0)) throw Error(Errc::BadInput, "bad final cycle");
    put(n - 1, n - arc.length, arc.weight);
  }
  return m;
}

bool torre_mayo_test(const MonicPolynomial& poly, Index p, const Tolerance& tol) {
  const Coeffs k = snap(poly, tol);
  check_shape(k, p);
  return realizable(k, p);
}

std::optional<Index> tracezero_order(const MonicPolynomial& poly, const Tolerance& tol) {
  const Coeffs k = snap(poly, tol);
  const Index n = k.degree();
  for (Index i = 1; i <= n; ++i) {
    if (k(i) == 0.0) continue;
    if (i >= 2 && n <= 2 * i + 1) return i;
    return std::nullopt;
  }
  return std::nullopt;
}

EblSpec build_single_term(Index n, Index q, double kq) {
  if (n < 2 || q < 1 || q > n || !(kq < 0.0)) {
    throw Error(Errc::BadInput, "need n >= 2, 1 <= q <= n and k_q < 0");
  }
  EblBuilder b(n);
  if (q == n) {
    b.initial(n, -kq);
    return b.spec;
  }
  const double w = -kq / 2.0;
  b.initial(q, w).final(q, w);
  // Cancel the products of disjoint cycles until an initial cycle reaches
  // the final one.
  double power = w;
  for (Index r = 2; r * q <= n && (r - 1) * q < n + 1 - q; ++r) {
    power *= w;
    b.initial(r * q, power);
  }
  return b.spec;
}

Classification classify_tracezero(const MonicPolynomial& poly, Index p, const Tolerance& tol) {
  const Coeffs k = snap(poly, tol);
  check_shape(k, p);
  const Index n = k.degree();

  Index q = 0;
  for (Index i = p; i <= n; ++i) {
    if (k(i) != 0.0) {
      q = i;
      break;
    }
  }
  if (q == 0) {
    RealizationCertificate cert = make_certificate(Matrix::Zero(n, n), "zero matrix", {true, false, false}, poly);
    return {Verdict::RealizableNotIR, "x^n: Perron root 0 is repeated", "perron-multiplicity", std::move(cert)};
  }
  if (!realizable(k, p)) {
    return {Verdict::NotRealizable, "coefficient sign and bound conditions fail", "trace-zero-realizability", {}};
  }
  if (q == n) {
    EblBuilder b(n);
    b.initial(n, -k(n));
    return irreducible(b.spec, poly, "basic cycle");
  }
  if (n == 3) {
    EblBuilder b(3);
    b.initial(2, -k(2) / 2.0).final(2, -k(2) / 2.0).initial(3, -k(3));
    return irreducible(b.spec, poly, "two 2-cycles and the basic 3-cycle");
  }
  if (n < 2 * q) return build_short(k, q, poly);
  if (n == 2 * q) return build_even(k, q, poly);
  return build_odd(k, q, poly);
}

Matrix appendix_fixture(Index n, std::string_view label, const std::vector<double>& coeffs) {
  if (n != 6 && n != 7) throw Error(Errc::UnknownCase, "fixtures exist for n = 6 and n = 7");
  if (static_cast<Index>(coeffs.size()) != n - 2) {
    throw Error(Errc::DimensionMismatch, "expected k_3..k_" + std::to_string(n));
  }
  const auto kk = [&](Index i) { return coeffs[static_cast<std::size_t>(i - 3)]; };
  Matrix m = Matrix::Zero(n, n);
  for (Index i = 0; i + 1 < n; ++i) m(i, i + 1) = 1.0;
  // 1-based entry setter
  const auto set = [&](Index i, Index j, double v) { m(i - 1, j - 1) = v; };
  const double k3 = kk(3), k4 = kk(4), k5 = kk(5), k6 = kk(6);
  const double s = std::sqrt(std::max(0.0, k3 * k3 / 4.0 - k6));

  if (n == 6) {
    if (label == "a") {
      set(3, 1, -k3), set(4, 1, -k4), set(5, 1, -k5), set(6, 1, -k6);
    } else if (label == "b1") {
      if (k3 < 0.0 && k4 < 0.0) {
        set(3, 1, -k3), set(5, 1, -k5), set(6, 3, -k4);
      } else {
        set(3, 1, -k3), set(4, 1, -k4), set(6, 2, -k5);
      }
    } else if (label == "b2") {
      if (k3 < 0.0) {
        set(3, 1, -k3 / 2.0), set(6, 4, -k3 / 2.0), set(6, 1, k3 * k3 / 4.0);
      } else if (k4 < 0.0) {
        set(4, 1, -k4 / 2.0), set(6, 3, -k4 / 2.0);
      } else {
        set(5, 1, -k5 / 2.0), set(6, 2, -k5 / 2.0);
      }
    } else if (label == "c1") {
      set(3, 1, -k3 / 2.0 - s), set(4, 1, -k4), set(5, 1, -k5), set(6, 4, -k3 / 2.0 + s);
    } else if (label == "c2") {
      set(3, 1, -k3 / 2.0), set(6, 4, -k3 / 2.0), set(6, 1, k3 * k3 / 4.0 - k6);
    } else {
      throw Error(Errc::UnknownCase, "no n = 6 fixture for case '" + std::string(label) + "'");
    }
    return m;
  }

  const double k7 = kk(7);
  if (label == "a1") {
    set(4, 1, -k4), set(5, 1, -k5), set(6, 1, -k6), set(7, 1, k3 * k4 - k7), set(7, 5, -k3);
  } else if (label == "a2") {
    set(4, 1, -k4), set(5, 1, -k5), set(7, 2, -k6);
  } else if (label == "a3") {
    set(6, 1, -k6 / 2.0), set(7, 2, -k6 / 2.0);
  } else if (label == "b1") {
    set(4, 1, -k4), set(5, 1, -k5), set(7, 1, k3 * k4 - k7), set(7, 5, -k3);
  } else if (label == "b3") {
    if (k3 < 0.0) {
      set(3, 1, -k3), set(7, 3, -k5), set(7, 4, -k4);
    } else {
      set(4, 1, -k4), set(7, 3, -k5), set(7, 5, -k3);
    }
  } else if (label == "b4") {
    if (k3 < 0.0) {
      set(3, 1, -k3 / 2.0), set(6, 1, k3 * k3 / 4.0), set(7, 5, -k3 / 2.0);
    } else if (k4 < 0.0) {
      set(4, 1, -k4 / 2.0), set(7, 4, -k4 / 2.0);
    } else {
      set(5, 1, -k5 / 2.0), set(7, 3, -k5 / 2.0);
    }
  } else if (label == "c1") {
    set(3, 1, -k3 / 2.0 - s), set(4, 1, -k4), set(5, 1, -k5), set(7, 1, k4 * (k3 / 2.0 - s) - k7),
        set(7, 5, -k3 / 2.0 + s);
  } else if (label == "c2") {
    set(3, 1, -k3 / 2.0 - s), set(4, 1, -k4), set(5, 1, -k5), set(7, 5, -k3 / 2.0 + s);
  } else if (label == "c4") {
    set(3, 1, -k3 / 2.0), set(5, 1, -k5), set(6, 1, k3 * k3 / 4.0 - k6), set(7, 5, -k3 / 2.0);
  } else if (label == "c5") {
    set(3, 1, -k3 / 2.0), set(4, 1, -k4 / 2.0), set(7, 4, -k4 / 2.0), set(7, 5, -k3 / 2.0);
  } else {
    throw Error(Errc::UnknownCase, "no n = 7 fixture for case '" + std::string(label) + "'");
  }
  return m;
}

}  // namespace niep
