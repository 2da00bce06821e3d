#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hatlab/graph.hpp"
#include "hatlab/rational.hpp"

namespace hatlab {

using Count = std::int64_t;
using VertexMap = std::map<std::string, Count>;

/// Generalized hat guessing game <G, h, g>. Sage v receives one of h(v)
/// colors 0..h(v)-1 and names up to g(v) guesses. The classic game has
/// g == 1 everywhere; it is stored the same way.
class HatGame {
 public:
  HatGame() = default;
  /// Validates h(v) >= 1 and g(v) >= 1 on every vertex; an empty guess
  /// vector means g == 1. Guesses above h(v) are clamped to h(v).
  HatGame(Graph graph, std::vector<Count> hatness, std::vector<Count> guesses = {});

  const Graph& graph() const { return graph_; }
  std::size_t size() const { return graph_.size(); }
  Count h(int v) const { return hatness_[static_cast<std::size_t>(v)]; }
  Count g(int v) const { return guesses_[static_cast<std::size_t>(v)]; }
  const std::vector<Count>& hatness() const { return hatness_; }
  const std::vector<Count>& guesses() const { return guesses_; }

  bool is_classic() const;
  std::optional<Count> constant_hatness() const;
  /// h/g when it does not depend on the vertex.
  std::optional<Rational> constant_ratio() const;

  friend bool operator==(const HatGame&, const HatGame&) = default;

 private:
  Graph graph_;
  std::vector<Count> hatness_;
  std::vector<Count> guesses_;
};

/// Name-keyed construction; missing guesses default to 1. Throws
/// ValidationError on missing or invalid hatness or on keys that are not
/// vertices.
HatGame make_game(Graph graph, const VertexMap& hatness, const VertexMap& guesses = {});
HatGame uniform_game(Graph graph, Count h);

/// Gluing of vectors: on S the product x1(u)*x2(v), on V1 - S the value x1,
/// on V2 - {v} the value x2. Domains other than at the glue must be
/// disjoint.
VertexMap glue_hatness(const VertexMap& x1, const std::vector<std::string>& clique, const VertexMap& x2,
                       const std::string& v);

/// Index-level gluing along an existing composition.
std::vector<Count> glue_vectors(const std::vector<Count>& x1, std::span<const int> clique,
                                const std::vector<Count>& x2, int v, const Composition& comp);

/// (S,v)-sum of games: graphs joined, h and g glued multiplicatively.
HatGame sum_games(const HatGame& g1, std::span<const int> clique, const HatGame& g2, int v);
/// Product at a single vertex.
HatGame product_games(const HatGame& g1, int a1, const HatGame& g2, int a2);
/// Substitution of a game on a complete graph in place of `at`:
/// h(u) = h_inner(u) * h_outer(at) on inner vertices.
HatGame substitute_games(const HatGame& inner, const HatGame& outer, int at);

struct CliqueVerdict {
  bool winning = false;
  bool precise = false;
  Rational sum;  // sum of g(v)/h(v)
};

/// Exact winning criterion on a complete graph: winning iff the sum of
/// g(v)/h(v) is at least 1, precise when it equals 1. Throws
/// ValidationError on non-complete graphs.
CliqueVerdict clique_criterion(const HatGame& game);

/// r(v) = g(v)/h(v).
std::vector<Rational> fraction_vector(const HatGame& game);

}  // namespace hatlab
