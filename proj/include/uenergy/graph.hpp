#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace uenergy {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
  Graph() = default;

  // Throws invalid_parameters on self-loops, duplicate edges or endpoints >= n.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  // Edges with first < second, sorted.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  bool adjacent(int u, int v) const;

  std::vector<int> degrees() const;

  // Vertex sets of connected components, each sorted, ordered by least vertex.
  std::vector<std::vector<int>> components() const;
  bool connected() const;
  bool is_forest() const;
  bool is_unicyclic() const { return n_ >= 3 && connected() && size() == static_cast<std::size_t>(n_); }

  Graph without_edge(int u, int v) const;

  // Induced subgraph on the remaining vertices, relabeled in increasing order.
  Graph without_vertices(std::span<const int> removed) const;
  Graph induced(std::span<const int> kept) const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  int n_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<Edge> edges_;
};

Graph make_cycle(int n);
Graph make_path(int n);

// P_n^l: cycle on 0..l-1, tail l..n-1 hanging from vertex 0. l == n gives C_n.
Graph make_lollipop(int n, int l);

// C_l with attachment[i] pendant vertices on cycle vertex i. Pendants are
// numbered from l upward, grouped by cycle vertex.
Graph make_cycle_with_pendants(int n, int l, std::span<const int> attachment);

// The unique cycle in traversal order, starting at its least vertex and
// stepping to the smaller of its two cycle neighbours. Empty unless the
// graph is connected and unicyclic.
std::optional<std::vector<int>> unique_cycle(const Graph& g);

// graph6, restricted to the single-byte order prefix (n <= 62).
Graph parse_graph6(std::string_view text);
std::string format_graph6(const Graph& g);

inline constexpr int graph6_max_order = 62;

} // namespace uenergy
