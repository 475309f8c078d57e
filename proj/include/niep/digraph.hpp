#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "niep/error.hpp"
#include "niep/spectrum.hpp"
#include "niep/tolerance.hpp"
#include "niep/types.hpp"

namespace niep {

/// Weighted digraph on vertices 0..n-1 with strictly positive arc weights.
/// Its adjacency matrix has a(i, j) = w(i, j) and zeros elsewhere.
class WeightedDigraph {
 public:
  using ArcMap = std::map<std::pair<Index, Index>, double>;

  explicit WeightedDigraph(Index n);

  Index size() const { return n_; }
  const ArcMap& arcs() const { return arcs_; }

  void add_arc(Index from, Index to, double weight);
  double weight(Index from, Index to) const;
  bool has_arc(Index from, Index to) const { return arcs_.count({from, to}) != 0; }

  Matrix adjacency() const;
  std::vector<std::vector<Index>> successors() const;

 private:
  Index n_;
  ArcMap arcs_;
};

/// Arcs exactly at entries above tol.sign; entries below -tol.sign are
/// rejected with NegativeEntry (reported 1-based).
template <typename Derived>
WeightedDigraph from_matrix(const Eigen::MatrixBase<Derived>& a, const Tolerance& tol = {}) {
  if (a.rows() != a.cols()) throw Error(Errc::DimensionMismatch, "matrix is not square");
  WeightedDigraph g(a.rows());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      const double v = static_cast<double>(a(i, j));
      if (v < -tol.sign) {
        throw Error(Errc::NegativeEntry,
                    "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
      if (v > tol.sign) g.add_arc(i, j, v);
    }
  }
  return g;
}

/// Strongly connected components, each listed in increasing vertex order;
/// components come out in reverse topological order.
std::vector<std::vector<Index>> strongly_connected_components(const WeightedDigraph& g);

bool is_strongly_connected(const WeightedDigraph& g);

/// Nonnegative within tol.sign and strongly connected pattern.
bool is_irreducible(const Matrix& a, const Tolerance& tol = {});

/// A vertex-disjoint union of cycles. Each cycle lists its vertices starting
/// from its smallest one.
struct LinearSubdigraph {
  std::vector<std::vector<Index>> cycles;
  Index vertex_count = 0;
  double weight_product = 1.0;
};

inline constexpr Index kMaxCycleEnumeration = 12;

/// Visits every nonempty linear subdigraph once. Throws TooLarge above
/// kMaxCycleEnumeration vertices.
void for_each_linear_subdigraph(const WeightedDigraph& g,
                                const std::function<void(const LinearSubdigraph&)>& visit);

/// k_i = sum over linear subdigraphs L on i vertices of (-1)^{#cycles(L)} * prod(L).
MonicPolynomial charpoly_by_cycles(const WeightedDigraph& g);

/// det(xI - A) by the Faddeev-LeVerrier trace recursion, carried out in
/// long double.
template <typename Derived>
MonicPolynomial charpoly_leverrier(const Eigen::MatrixBase<Derived>& a) {
  using Wide = long double;
  if (a.rows() != a.cols()) throw Error(Errc::DimensionMismatch, "matrix is not square");
  const Index n = a.rows();
  const MatrixX<Wide> aw = a.template cast<Wide>();
  MatrixX<Wide> m = MatrixX<Wide>::Zero(n, n);
  std::vector<double> coeffs(static_cast<std::size_t>(n));
  Wide previous = 1;
  for (Index k = 1; k <= n; ++k) {
    m = aw * m;
    m.diagonal().array() += previous;
    const Wide ck = -(aw * m).trace() / static_cast<Wide>(k);
    coeffs[static_cast<std::size_t>(k - 1)] = static_cast<double>(ck);
    previous = ck;
  }
  return MonicPolynomial(std::move(coeffs));
}

/// Graphviz text; vertices printed 1-based, arcs in row-major order, labels
/// with 6 significant digits.
std::string export_dot(const WeightedDigraph& g);

}  // namespace niep
