#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hatlab/game.hpp"
#include "hatlab/graph.hpp"
#include "hatlab/polynomial.hpp"

namespace hatlab {

enum class ExtensionKind { First, Second };

/// First kind: a clique K_{a_i} glued at every base vertex v_i. The base
/// vertex keeps its name; the other clique vertices are "<v>#1" .. "<v>#(a-1)".
/// cliques[i] lists the result indices of K_{a_i}, marked vertex first.
struct FirstKindExtension {
  Graph graph;
  std::vector<std::vector<int>> cliques;
};

/// Second kind: every base vertex v_j becomes K_{a_j} on "<v>#0" ..
/// "<v>#(a-1)"; every base edge becomes a bridge between the lowest unused
/// marked vertices of the two cliques.
struct SecondKindExtension {
  Graph graph;
  std::vector<std::vector<int>> cliques;
  std::vector<std::pair<int, int>> bridges;
};

FirstKindExtension build_first_kind(const Graph& base, std::span<const Count> sizes);
/// Throws ValidationError when a_j < deg v_j.
SecondKindExtension build_second_kind(const Graph& base, std::span<const Count> sizes);

/// True when, for every m, the neighbors of v_m among v_1..v_{m-1} are
/// exactly the block v_{m-d}..v_{m-1}. Paths satisfy it in natural order.
bool has_consecutive_back_neighbors(const Graph& base);

/// Reduced independence polynomial: every variable of clique i set to x_i.
/// Uses the clique-size recurrence when the ordering allows it (always for
/// the second kind), else evaluates the built graph directly.
Rational reduced_P(const Graph& base, std::span<const Count> sizes, std::span<const Rational> x, ExtensionKind kind);

/// Leading coefficient f_n of the reduced polynomial, i.e. the number of
/// independent n-sets when all a_i >= 1. Multilinear in the sizes, so any
/// ring values are accepted.
Rational leading_f(const Graph& base, std::span<const Rational> sizes, ExtensionKind kind);
/// Symbolic version, e.g. sizes that are polynomials in a family parameter.
/// Needs the recurrence form (consecutive back-neighbors for the first
/// kind); throws ValidationError otherwise.
Poly leading_f(const Graph& base, std::span<const Poly> sizes, ExtensionKind kind);

/// U of the extension via U(x) = (-x)^n f_n(a_1 - 1/x, ..., a_n - 1/x).
Poly U_from_f(const Graph& base, std::span<const Rational> sizes, ExtensionKind kind);

}  // namespace hatlab
