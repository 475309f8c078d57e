#include "niep/digraph.hpp"

#include <algorithm>
#include <cstdio>

namespace niep {

WeightedDigraph::WeightedDigraph(Index n) : n_(n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "negative vertex count");
}

void WeightedDigraph::add_arc(Index from, Index to, double weight) {
  if (from < 0 || from >= n_ || to < 0 || to >= n_) {
    throw Error(Errc::InvalidArgument, "arc endpoint out of range");
  }
  if (!(weight > 0.0)) throw Error(Errc::InvalidArgument, "arc weights must be positive");
  arcs_[{from, to}] = weight;
}

double WeightedDigraph::weight(Index from, Index to) const {
  const auto it = arcs_.find({from, to});
  return it == arcs_.end() ? 0.0 : it->second;
}

Matrix WeightedDigraph::adjacency() const {
  Matrix a = Matrix::Zero(n_, n_);
  for (const auto& [arc, w] : arcs_) a(arc.first, arc.second) = w;
  return a;
}

std::vector<std::vector<Index>> WeightedDigraph::successors() const {
  std::vector<std::vector<Index>> out(static_cast<std::size_t>(n_));
  for (const auto& [arc, w] : arcs_) out[static_cast<std::size_t>(arc.first)].push_back(arc.second);
  return out;
}

std::vector<std::vector<Index>> strongly_connected_components(const WeightedDigraph& g) {
  const auto succ = g.successors();
  const auto n = static_cast<std::size_t>(g.size());
  constexpr Index kUnvisited = -1;
  std::vector<Index> index(n, kUnvisited);
  std::vector<Index> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Index> stack;
  std::vector<std::vector<Index>> components;
  Index counter = 0;

  // Explicit call stack of (vertex, next successor position).
  std::vector<std::pair<Index, std::size_t>> frames;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.emplace_back(static_cast<Index>(root), 0);
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      const auto vi = static_cast<std::size_t>(v);
      if (pos == 0 && index[vi] == kUnvisited) {
        index[vi] = low[vi] = counter++;
        stack.push_back(v);
        on_stack[vi] = true;
      }
      if (pos < succ[vi].size()) {
        const auto w = static_cast<std::size_t>(succ[vi][pos++]);
        if (index[w] == kUnvisited) {
          frames.emplace_back(static_cast<Index>(w), 0);
        } else if (on_stack[w]) {
          low[vi] = std::min(low[vi], index[w]);
        }
        continue;
      }
      if (low[vi] == index[vi]) {
        std::vector<Index> comp;
        Index w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
      const Index finished = v;
      frames.pop_back();
      if (!frames.empty()) {
        const auto parent = static_cast<std::size_t>(frames.back().first);
        low[parent] = std::min(low[parent], low[static_cast<std::size_t>(finished)]);
      }
    }
  }
  return components;
}

bool is_strongly_connected(const WeightedDigraph& g) {
  if (g.size() == 0) return false;
  return strongly_connected_components(g).size() == 1;
}

bool is_irreducible(const Matrix& a, const Tolerance& tol) {
  try {
    return is_strongly_connected(from_matrix(a, tol));
  } catch (const Error&) {
    return false;
  }
}

namespace {

// Enumerates linear subdigraphs by walking vertices in increasing order: each
// vertex is either left uncovered or opens a cycle in which it is the
// smallest vertex.
class LinearEnumerator {
 public:
  LinearEnumerator(const WeightedDigraph& g, const std::function<void(const LinearSubdigraph&)>& visit)
      : g_(g), succ_(g.successors()), used_(static_cast<std::size_t>(g.size()), false), visit_(visit) {}

  void run() { next_vertex(0); }

 private:
  void next_vertex(Index v) {
    if (v == g_.size()) {
      if (!current_.cycles.empty()) visit_(current_);
      return;
    }
    next_vertex(v + 1);
    if (used_[static_cast<std::size_t>(v)]) return;
    path_.assign(1, v);
    used_[static_cast<std::size_t>(v)] = true;
    extend(v, 1.0);
    used_[static_cast<std::size_t>(v)] = false;
  }

  void extend(Index start, double weight) {
    const Index tail = path_.back();
    for (Index w : succ_[static_cast<std::size_t>(tail)]) {
      const double arc = g_.weight(tail, w);
      if (w == start) {
        current_.cycles.push_back(path_);
        current_.vertex_count += static_cast<Index>(path_.size());
        const double saved = current_.weight_product;
        current_.weight_product *= weight * arc;
        const std::vector<Index> held = path_;
        next_vertex(start + 1);
        path_ = held;
        current_.weight_product = saved;
        current_.vertex_count -= static_cast<Index>(path_.size());
        current_.cycles.pop_back();
      } else if (w > start && !used_[static_cast<std::size_t>(w)]) {
        used_[static_cast<std::size_t>(w)] = true;
        path_.push_back(w);
        extend(start, weight * arc);
        path_.pop_back();
        used_[static_cast<std::size_t>(w)] = false;
      }
    }
  }

  const WeightedDigraph& g_;
  std::vector<std::vector<Index>> succ_;
  std::vector<bool> used_;
  std::vector<Index> path_;
  LinearSubdigraph current_;
  const std::function<void(const LinearSubdigraph&)>& visit_;
};

}  // namespace

void for_each_linear_subdigraph(const WeightedDigraph& g,
                                const std::function<void(const LinearSubdigraph&)>& visit) {
  if (g.size() > kMaxCycleEnumeration) {
    throw Error(Errc::TooLarge, std::to_string(g.size()) + " vertices exceeds the enumeration limit of " +
                                    std::to_string(kMaxCycleEnumeration));
  }
  LinearEnumerator(g, visit).run();
}

MonicPolynomial charpoly_by_cycles(const WeightedDigraph& g) {
  std::vector<long double> k(static_cast<std::size_t>(g.size()), 0.0L);
  for_each_linear_subdigraph(g, [&](const LinearSubdigraph& l) {
    const long double sign = l.cycles.size() % 2 == 0 ? 1.0L : -1.0L;
    k[static_cast<std::size_t>(l.vertex_count - 1)] += sign * l.weight_product;
  });
  return MonicPolynomial(std::vector<double>(k.begin(), k.end()));
}

std::string export_dot(const WeightedDigraph& g) {
  std::string out = "digraph G {\n";
  for (Index v = 0; v < g.size(); ++v) out += "  " + std::to_string(v + 1) + ";\n";
  char label[64];
  for (const auto& [arc, w] : g.arcs()) {
    std::snprintf(label, sizeof label, "%.6g", w);
    out += "  " + std::to_string(arc.first + 1) + " -> " + std::to_string(arc.second + 1) +
           " [label=\"" + label + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace niep
