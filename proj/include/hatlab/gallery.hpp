#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hatlab/expr.hpp"
#include "hatlab/extensions.hpp"
#include "hatlab/game.hpp"
#include "hatlab/graph.hpp"
#include "hatlab/polynomial.hpp"

namespace hatlab {

/// A named construction: its expression and the game it evaluates to.
struct GalleryGame {
  GameExpr expr;
  HatGame game;
};

/// K5(A:2, rest 8) x_A K3(A:4, B:4, C:2) x_B K5(B:2, rest 8), three copies
/// glued at C. 31 vertices, h == 8, max degree 6.
GalleryGame build_delta6_hg8();

/// T_k = K_{2^(n-k)+1} with tops of hatness 2^(n-k+1) and a bottom of
/// hatness 2. A level-k vertex is a top of one T_{k+1} and the bottom of k
/// copies of T_k; the root is the bottom of one T_{n-1}. n copies are glued
/// at the root. Requires 3 <= n <= 6.
GalleryGame build_scary(int n);

struct DeltaPlusK {
  GalleryGame built;
  /// Clique size substituted into every vertex of the delta6 graph; 0 when
  /// k = 1 and the result is K2(2,2).
  int m = 0;
  /// HG and max degree predicted by the construction.
  Count hg = 0;
  int max_degree = 0;
};

/// HG = max degree + k. k = 1 gives K2(2,2); otherwise <K_m, m> with
/// m = k - 1 replaces every vertex of build_delta6_hg8().
DeltaPlusK build_delta_plus_k(int k);
/// 8m / (7m - 1), the HG / max degree ratio of the substituted family.
Rational delta_plus_k_ratio(int m);

enum class ChainVariant { Standard, Tilde, Minus };
ChainVariant parse_chain_variant(const std::string& s);
std::string chain_variant_name(ChainVariant v);

/// Chain of n cliques joined by bridges. Clique i has vertices "Q<i>a" (left
/// bridge end), "Q<i>b" (right bridge end) and "Q<i>_<j>"; the first clique
/// has no "a", the last no "b". For a single-vertex inner clique "a" serves
/// both bridges.
struct ChainBuild {
  Graph graph;
  /// Constant hatness the construction is about: l.
  Count h = 0;
  /// Even l: sums of precise bricks giving the winning game <graph, l>.
  std::optional<GalleryGame> winning;
  /// Odd l: losing-rule expression for <graph, l>.
  std::optional<GalleryGame> losing;
  /// Odd l: generalized game with h/g == l everywhere (bridge ends carry
  /// h = 2l, g = 2). Absent for l = 3, n >= 3 where the inner K1 cannot
  /// hold two bridge ends.
  std::optional<GalleryGame> generalized;
};

/// Standard: ends K_{l-1}, inner K_{l-2}. Tilde: the last clique is
/// K_{l-2}. Minus: the edge between the bridge ends of the second clique is
/// removed (needs n >= 3 and l >= 4). Expressions only for Standard.
ChainBuild build_chain(int n, int l, ChainVariant variant);

/// The clique-extension families: 1 -> first kind with sizes (k+1, ..., k+1),
/// 2 -> first kind with (k+3, k+1, ..., k+1, k+3), 3 -> second kind with
/// (k+1, k, ..., k, k+1), all over the path on n vertices.
struct ExtensionExample {
  int which = 0;
  int n = 0;
  int k = 0;
  Graph base;
  ExtensionKind kind = ExtensionKind::First;
  std::vector<Rational> sizes;
  /// Absent when some size is below what the construction needs.
  std::optional<Graph> graph;
  Poly U;
  std::optional<int> diameter;
};

ExtensionExample build_extension_example(int which, int n, int k);

/// Path v1 - ... - vn.
Graph path_graph(int n);

/// Parameters for the name-driven builder used by the CLI.
struct GalleryParams {
  std::optional<int> n, k, l;
  ChainVariant variant = ChainVariant::Standard;
};

/// Result of build_by_name: whatever the construction provides.
struct GalleryBuild {
  std::string name;
  Graph graph;
  std::optional<HatGame> game;
  GameExpr expr;
  GameExpr generalized;
  /// Extra exact values, e.g. "U", "ratio", "diameter".
  std::map<std::string, std::string> info;
};

/// Names: delta6-hg8, scary, delta-plus-k, chain, example1, example2,
/// example3.
GalleryBuild build_by_name(const std::string& name, const GalleryParams& p);
std::vector<std::string> gallery_names();

}  // namespace hatlab
