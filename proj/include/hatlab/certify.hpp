#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hatlab/expr.hpp"
#include "hatlab/game.hpp"
#include "hatlab/polynomial.hpp"
#include "hatlab/roots.hpp"

namespace hatlab {

/// Largest game for the corner sweep; HATLAB_CORNER_CUTOFF overrides 22.
int corner_cutoff();

enum class MaximalityMethod { CornerCheck, Compositional };

struct MaximalityCertificate {
  /// False when the method's hypothesis does not hold (size cutoff,
  /// non-precise leaf, losing-rule node); `reason` says why.
  bool applicable = true;
  bool maximal = false;
  MaximalityMethod method = MaximalityMethod::CornerCheck;
  Rational z_at_r;
  /// Corners evaluated (2^n for a complete sweep).
  std::uint64_t corner_count = 0;
  /// First corner with a non-positive value, as the set of vertices at r_v.
  std::vector<std::string> failing_corner;
  std::optional<Rational> failing_value;
  std::string reason;
  std::string text;
  Derivation composition;
};

/// Z(r) = 0 and Z > 0 at every corner of [0, r] except r. The corner at
/// support T equals Z_{G[T]}(r), so the sweep is a subset recurrence over
/// scaled integers.
MaximalityCertificate check_maximal_direct(const HatGame& game, std::optional<int> cutoff = std::nullopt);
/// Maximality propagated from precise clique leaves through sums, then
/// Z(r) = 0 re-evaluated on the composite.
MaximalityCertificate check_maximal_compositional(const GameExpr& e);

struct LosingCertificate {
  bool losing = false;
  Rational z_at_r;
  std::string text;
};

/// Losing when Z(r) > 0; inconclusive otherwise.
LosingCertificate losing_by_Z_positive(const HatGame& game);

struct MuHatResult {
  std::vector<int> elimination_order;
  Poly U;
  SmallestRoot root;
  /// 1/r when r is rational.
  std::optional<Rational> value;
  /// mu-hat lies in [lower, upper]; equal to value when exact.
  Rational lower;
  Rational upper;
  std::string note;
};

/// mu-hat = 1/r for chordal G, r the smallest positive root of U_G.
/// Throws ValidationError on a non-chordal or empty graph.
MuHatResult mu_hat_chordal(const Graph& g, const std::optional<Rational>& root_candidate = std::nullopt);

}  // namespace hatlab
