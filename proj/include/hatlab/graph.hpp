#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hatlab/rational.hpp"

namespace hatlab {

using NamePair = std::pair<std::string, std::string>;

/// Simple undirected graph with named vertices. Immutable once built;
/// vertex indices follow insertion order and every algorithm in the library
/// iterates in that order, so outputs are reproducible.
class Graph {
 public:
  Graph() = default;

  /// Validates and builds. Throws ValidationError naming the offender on a
  /// duplicate vertex, an unknown endpoint or a self-loop. Duplicate edges
  /// are merged.
  static Graph make(std::vector<std::string> vertices, const std::vector<NamePair>& edges);
  static Graph from_indices(std::vector<std::string> vertices, const std::vector<std::pair<int, int>>& edges);
  /// K_n on the given names.
  static Graph complete(std::vector<std::string> vertices);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int v) const { return names_[static_cast<std::size_t>(v)]; }
  std::optional<int> find(std::string_view name) const;
  /// Index of a vertex; throws ValidationError when absent.
  int index(std::string_view name) const;

  /// Sorted ascending.
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(int u, int v) const;
  std::size_t edge_count() const { return edge_count_; }
  /// Pairs (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  bool is_clique(std::span<const int> vs) const;
  bool is_complete() const;

  Graph without_edge(int u, int v) const;
  Graph without_vertex(int v) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.names_ == b.names_ && a.adj_ == b.adj_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> adj_;
  std::size_t edge_count_ = 0;
};

/// Result of gluing two graphs together, with the position of every operand
/// vertex in the result. right_map[v] is -1 for the vertex consumed by the
/// join.
struct Composition {
  Graph graph;
  std::vector<int> left_map;
  std::vector<int> right_map;
};

/// (S,v)-sum of graphs: V = V1 + (V2 - v); every vertex of the clique S
/// becomes adjacent to every neighbor of v. Left names are kept; right names
/// that collide get an "R/" prefix.
Composition clique_join(const Graph& g1, std::span<const int> clique, const Graph& g2, int v);
Graph clique_join(const Graph& g1, const std::vector<std::string>& clique, const Graph& g2, const std::string& v);

/// Identifies a1 in g1 with a2 in g2; same as clique_join with S = {a1}.
Graph vertex_glue(const Graph& g1, const std::string& a1, const Graph& g2, const std::string& a2);

/// Replaces `at` in outer by a copy of inner joined to all former neighbors
/// of `at`. Inner vertices come first and keep their names.
Composition substitute(const Graph& inner, const Graph& outer, int at);
Graph substitute(const Graph& inner, const Graph& outer, const std::string& at);

struct GraphStats {
  std::vector<int> degree;
  int max_degree = 0;
  bool connected = true;
  std::optional<int> diameter;  // only when connected
};

GraphStats stats(const Graph& g);
/// BFS diameter; throws ValidationError on a disconnected graph.
int diameter(const Graph& g);

/// Perfect elimination ordering from maximum cardinality search, verified
/// vertex by vertex; nullopt when the graph is not chordal.
std::optional<std::vector<int>> perfect_elimination_ordering(const Graph& g);
inline bool is_chordal(const Graph& g) { return perfect_elimination_ordering(g).has_value(); }

/// Every independent set including the empty one, as sorted index lists.
/// Throws GuardError when |V| > max_n.
std::vector<std::vector<int>> independent_sets(const Graph& g, std::size_t max_n = 20);

}  // namespace hatlab
