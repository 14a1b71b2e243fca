#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace racg {

/// Unordered vertex pair stored with a < b (0-based).
struct Edge {
  int a;
  int b;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Right-angled Coxeter diagram: n ≥ 3 ordered vertices and the bold edges,
/// i.e. the generator pairs that satisfy NO relation. Generators of
/// non-adjacent vertices commute. Vertices are 0-based in the API and
/// 1-based in files and printed output.
class CoxeterDiagram {
 public:
  /// Throws TooFewVertices, IndexOutOfRange, DuplicateEdge, or SyntaxError
  /// (self-loop). Edge order is kept as given; endpoints are sorted.
  CoxeterDiagram(int n, const std::vector<Edge>& edges);

  int size() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool adjacent(int i, int j) const { return adj_[index(i, j)]; }
  /// γ_i and γ_j commute exactly when v_i, v_j are NOT joined by an edge.
  /// Every consumer of the commutation relation goes through here.
  bool commutes(int i, int j) const { return i == j || !adjacent(i, j); }

  std::vector<int> neighbors(int i) const;
  bool is_connected() const;

  friend bool operator==(const CoxeterDiagram& x, const CoxeterDiagram& y) {
    return x.n_ == y.n_ && x.adj_ == y.adj_;
  }

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

  int n_;
  std::vector<Edge> edges_;
  std::vector<bool> adj_;
};

/// Reads the text format:
///   # comment
///   n <INT>
///   edge <i> <j>      (1-based, i < j)
CoxeterDiagram parse_diagram(std::string_view text);

/// Inverse of parse_diagram; emits edges in stored order.
std::string serialize_diagram(const CoxeterDiagram& g);

/// Diagram whose complement is the cycle v1 v2 ... vn; requires n ≥ 5.
CoxeterDiagram cycle_complement(int n);

bool is_connected(const CoxeterDiagram& g);

}  // namespace racg
