#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hatlab/game.hpp"

namespace hatlab {

struct SolverLimits {
  std::uint64_t max_colorings = 10'000'000;
  std::uint64_t max_configurations = 100'000;
  /// nullopt reads HATLAB_SOLVER_TIMEOUT_MS; no limit when unset.
  std::optional<std::chrono::milliseconds> timeout;
  /// Deterministic alternative to the timeout: Unknown after this many
  /// conflicts.
  std::optional<std::uint64_t> max_conflicts;
};

/// Clauses over variables 1..num_vars; literal -x is the negation of x.
struct Cnf {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
  std::size_t coloring_clauses = 0;
  std::size_t cardinality_clauses = 0;
};

/// Variable layout of the game encoding: y[v][sigma][c] is true when sage v
/// names color c on seeing configuration sigma. sigma is the mixed-radix
/// index of the neighbor colors, neighbors in ascending vertex order with
/// the first neighbor least significant.
class GameEncoding {
 public:
  GameEncoding(const HatGame& game, const SolverLimits& limits = {});

  const Cnf& cnf() const { return cnf_; }
  std::uint64_t colorings() const { return colorings_; }
  std::uint64_t configurations(int v) const { return configs_[static_cast<std::size_t>(v)]; }
  int var(int v, std::uint64_t sigma, Count color) const;
  /// Configuration index seen by v under a full coloring.
  std::uint64_t config_of(int v, const std::vector<Count>& coloring) const;

 private:
  const HatGame* game_;
  std::vector<std::uint64_t> configs_;
  std::vector<int> offset_;
  std::uint64_t colorings_ = 1;
  Cnf cnf_;
};

/// Throws GuardError when the coloring or configuration guard is exceeded.
Cnf encode(const HatGame& game, const SolverLimits& limits = {});

enum class SatStatus { Sat, Unsat, Unknown };

struct SatStats {
  std::uint64_t decisions = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t propagations = 0;
  std::uint64_t learned = 0;
};

struct SatResult {
  SatStatus status = SatStatus::Unknown;
  /// model[x] for x in 1..num_vars when Sat.
  std::vector<bool> model;
  SatStats stats;
};

/// Conflict-driven search with unit propagation, first-UIP learning and
/// backjumping. Branches on the most active variable with ties to the lowest
/// index, false first until a saved phase exists, and restarts on the Luby
/// schedule. No randomness, so runs are reproducible.
SatResult solve_cnf(const Cnf& cnf, std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt,
                    std::optional<std::uint64_t> max_conflicts = std::nullopt);

struct Strategy {
  /// guesses[v][sigma]: colors named by v on configuration sigma.
  std::vector<std::vector<std::vector<Count>>> guesses;
};

/// Neighbor colors encoded by configuration sigma of v.
std::vector<Count> decode_configuration(const HatGame& game, int v, std::uint64_t sigma);
std::uint64_t configuration_count(const HatGame& game, int v);

enum class Verdict { Winning, Losing, Unknown };
std::string verdict_name(Verdict v);

struct GameVerdict {
  Verdict status = Verdict::Unknown;
  std::optional<Strategy> strategy;
  int variables = 0;
  std::size_t clauses = 0;
  SatStats stats;
};

GameVerdict decide_game(const HatGame& game, const SolverLimits& limits = {});

struct StrategyCheck {
  bool ok = false;
  /// First coloring on which every sage misses.
  std::optional<std::vector<Count>> counterexample;
};

/// Enumerates every coloring. Throws ValidationError for a partial or
/// ill-formed strategy, listing what is missing.
StrategyCheck verify_strategy(const HatGame& game, const Strategy& s);

struct HgResult {
  /// Largest constant hatness decided winning.
  Count hg = 0;
  /// False when some level could not be decided; hg is then a lower bound
  /// and undecided_level the first open level.
  bool exact = true;
  std::optional<Count> undecided_level;
  /// Verdict per level 1..levels.size().
  std::vector<Verdict> levels;
  /// Winning at h implied winning at every lower level.
  bool monotone = true;
};

/// Decides <G, h> for h = 1, 2, ... up to h_max and stops at the first
/// losing level; the next level is decided too, as a monotonicity check.
HgResult hg_search(const Graph& g, Count h_max, const SolverLimits& limits = {});

}  // namespace hatlab
