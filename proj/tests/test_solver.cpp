#include <random>

#include "doctest.h"
#include "hatlab/certify.hpp"
#include "hatlab/solver.hpp"
#include "oracles.hpp"

using hatlab::Count;
using hatlab::Graph;
using hatlab::HatGame;
using hatlab::Verdict;

namespace {

// Exhaustive truth-table check, independent of the search.
bool brute_sat(const hatlab::Cnf& cnf) {
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << cnf.num_vars); ++m) {
    bool all = true;
    for (const auto& c : cnf.clauses) {
      bool any = false;
      for (int l : c) {
        bool val = m >> (std::abs(l) - 1) & 1U;
        any = any || (l > 0 ? val : !val);
      }
      if (!any) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

bool satisfies(const hatlab::Cnf& cnf, const std::vector<bool>& model) {
  for (const auto& c : cnf.clauses) {
    bool any = false;
    for (int l : c) any = any || (l > 0 ? model[l] : !model[-l]);
    if (!any) return false;
  }
  return true;
}

hatlab::Cnf pigeonhole(int holes) {
  hatlab::Cnf cnf;
  const int pigeons = holes + 1;
  cnf.num_vars = pigeons * holes;
  auto x = [&](int p, int h) { return p * holes + h + 1; };
  for (int p = 0; p < pigeons; ++p) {
    std::vector<int> c;
    for (int h = 0; h < holes; ++h) c.push_back(x(p, h));
    cnf.clauses.push_back(c);
  }
  for (int h = 0; h < holes; ++h)
    for (int p = 0; p < pigeons; ++p)
      for (int q = p + 1; q < pigeons; ++q) cnf.clauses.push_back({-x(p, h), -x(q, h)});
  return cnf;
}

}  // namespace

TEST_CASE("cdcl agrees with truth tables on random formulas") {
  std::mt19937 rng(12);
  int sat = 0, unsat = 0;
  for (int trial = 0; trial < 300; ++trial) {
    hatlab::Cnf cnf;
    cnf.num_vars = 4 + trial % 9;
    std::uniform_int_distribution<int> var(1, cnf.num_vars), len(2, 3), sign(0, 1);
    int m = cnf.num_vars * (2 + trial % 4);
    for (int i = 0; i < m; ++i) {
      std::vector<int> c;
      int l = len(rng);
      for (int k = 0; k < l; ++k) c.push_back(sign(rng) ? var(rng) : -var(rng));
      cnf.clauses.push_back(c);
    }
    auto res = hatlab::solve_cnf(cnf);
    bool expect = brute_sat(cnf);
    CHECK((res.status == hatlab::SatStatus::Sat) == expect);
    if (res.status == hatlab::SatStatus::Sat) {
      CHECK(satisfies(cnf, res.model));
      ++sat;
    } else {
      ++unsat;
    }
  }
  CHECK(sat > 20);
  CHECK(unsat > 20);
}

TEST_CASE("cdcl on pigeonhole and edge cases") {
  for (int h = 1; h <= 5; ++h) CHECK(hatlab::solve_cnf(pigeonhole(h)).status == hatlab::SatStatus::Unsat);
  hatlab::Cnf empty_clause;
  empty_clause.num_vars = 1;
  empty_clause.clauses = {{}};
  CHECK(hatlab::solve_cnf(empty_clause).status == hatlab::SatStatus::Unsat);
  hatlab::Cnf none;
  none.num_vars = 3;
  CHECK(hatlab::solve_cnf(none).status == hatlab::SatStatus::Sat);
  auto past = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  CHECK(hatlab::solve_cnf(pigeonhole(7), past).status == hatlab::SatStatus::Unknown);
}

TEST_CASE("encoding sizes") {
  auto k2 = hatlab::encode(HatGame(oracle::complete(2), {2, 2}));
  CHECK(k2.num_vars == 8);
  CHECK(k2.coloring_clauses == 4);
  CHECK(k2.cardinality_clauses == 4);

  auto p4 = hatlab::encode(hatlab::uniform_game(oracle::path(4), 3));
  CHECK(p4.num_vars == 72);
  CHECK(p4.coloring_clauses == 81);

  auto k1 = hatlab::encode(HatGame(oracle::complete(1), {2}));
  CHECK(k1.num_vars == 2);
  CHECK(k1.coloring_clauses == 2);

  hatlab::SolverLimits tight;
  tight.max_colorings = 10;
  CHECK_THROWS_AS(hatlab::encode(hatlab::uniform_game(oracle::path(4), 3), tight), hatlab::GuardError);
  tight.max_colorings = 1000;
  tight.max_configurations = 5;
  CHECK_THROWS_AS(hatlab::encode(hatlab::uniform_game(oracle::path(4), 3), tight), hatlab::GuardError);
}

TEST_CASE("cardinality encodings") {
  // At-most-g over h colors: count satisfying assignments by brute force.
  for (Count h = 2; h <= 6; ++h)
    for (Count g = 1; g <= h; ++g) {
      HatGame game(oracle::complete(1), {h}, {g});
      auto cnf = hatlab::encode(game);
      // Drop the coloring clauses, keep the cardinality part.
      hatlab::Cnf card = cnf;
      card.clauses.erase(card.clauses.begin(), card.clauses.begin() + static_cast<long>(cnf.coloring_clauses));
      for (std::uint64_t m = 0; m < (1u << h); ++m) {
        // Fix the y variables to m and ask whether the auxiliaries extend it.
        hatlab::Cnf fixed = card;
        for (int i = 0; i < h; ++i) fixed.clauses.push_back({(m >> i & 1U) ? i + 1 : -(i + 1)});
        bool ok = hatlab::solve_cnf(fixed).status == hatlab::SatStatus::Sat;
        CHECK(ok == (__builtin_popcountll(m) <= g));
      }
    }
}

TEST_CASE("decide_game examples") {
  auto k2 = hatlab::decide_game(HatGame(oracle::complete(2), {2, 2}));
  CHECK(k2.status == Verdict::Winning);
  REQUIRE(k2.strategy);
  CHECK(hatlab::verify_strategy(HatGame(oracle::complete(2), {2, 2}), *k2.strategy).ok);

  CHECK(hatlab::decide_game(hatlab::uniform_game(oracle::path(4), 3)).status == Verdict::Losing);
  CHECK(hatlab::decide_game(HatGame(oracle::path(2), {2, 3})).status == Verdict::Losing);
  CHECK(hatlab::decide_game(HatGame(oracle::complete(1), {2})).status == Verdict::Losing);
  CHECK(hatlab::decide_game(HatGame(oracle::complete(1), {1})).status == Verdict::Winning);
  CHECK(hatlab::decide_game(HatGame(oracle::complete(1), {3}, {3})).status == Verdict::Winning);
  CHECK(hatlab::decide_game(HatGame(oracle::complete(2), {3, 3}, {2, 1})).status == Verdict::Winning);
}

TEST_CASE("solver is deterministic") {
  auto game = hatlab::uniform_game(oracle::path(3), 2);
  auto a = hatlab::decide_game(game), b = hatlab::decide_game(game);
  CHECK(a.stats.decisions == b.stats.decisions);
  CHECK(a.strategy->guesses == b.strategy->guesses);
}

TEST_CASE("verify_strategy") {
  HatGame k2(oracle::complete(2), {2, 2});
  // Textbook: one sage repeats what he sees, the other names the opposite.
  hatlab::Strategy good{{{{0}, {1}}, {{1}, {0}}}};
  CHECK(hatlab::verify_strategy(k2, good).ok);
  hatlab::Strategy copy{{{{0}, {1}}, {{0}, {1}}}};
  auto bad = hatlab::verify_strategy(k2, copy);
  CHECK_FALSE(bad.ok);
  CHECK(*bad.counterexample == std::vector<Count>{1, 0});
  // Colorings are enumerated with the first vertex fastest: (0,0), (1,0), ...
  // (1,0): sage 0 sees 0 and says 0, sage 1 sees 1 and says 1; both miss.

  HatGame k1(oracle::complete(1), {2});
  CHECK_FALSE(hatlab::verify_strategy(k1, hatlab::Strategy{{{{0}}}}).ok);
  CHECK_FALSE(hatlab::verify_strategy(k1, hatlab::Strategy{{{{1}}}}).ok);

  hatlab::Strategy partial{{{{0}, {1}}}};
  CHECK_THROWS_AS(hatlab::verify_strategy(k2, partial), hatlab::ValidationError);
  hatlab::Strategy too_many{{{{0, 1}, {1}}, {{1}, {0}}}};
  CHECK_THROWS_AS(hatlab::verify_strategy(k2, too_many), hatlab::ValidationError);
}

TEST_CASE("hg_search examples") {
  auto k3 = hatlab::hg_search(oracle::complete(3), 5);
  CHECK(k3.hg == 3);
  CHECK(k3.exact);
  CHECK(k3.monotone);
  auto p4 = hatlab::hg_search(oracle::path(4), 4);
  CHECK(p4.hg == 2);
  CHECK(p4.exact);
  auto k1 = hatlab::hg_search(oracle::complete(1), 3);
  CHECK(k1.hg == 1);
  auto capped = hatlab::hg_search(oracle::complete(3), 2);
  CHECK(capped.hg == 2);
  CHECK_FALSE(capped.exact);
}

TEST_CASE("solver matches the clique criterion") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<Count> h(static_cast<std::size_t>(n), 1);
    do {
      std::vector<Count> g(static_cast<std::size_t>(n), 1);
      do {
        HatGame game(oracle::complete(n), h, g);
        auto verdict = hatlab::decide_game(game);
        CHECK((verdict.status == Verdict::Winning) == hatlab::clique_criterion(game).winning);
        if (verdict.strategy) CHECK(hatlab::verify_strategy(game, *verdict.strategy).ok);
        if (verdict.status == Verdict::Winning) CHECK_FALSE(hatlab::losing_by_Z_positive(game).losing);
        std::size_t i = 0;
        while (i < g.size() && ++g[i] > 2) g[i++] = 1;
        if (i == g.size()) break;
      } while (true);
      std::size_t i = 0;
      while (i < h.size() && ++h[i] > 4) h[i++] = 1;
      if (i == h.size()) break;
    } while (true);
  }
}

TEST_CASE("monotonicity and subgraph spot checks on small graphs") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 2 + trial % 3;
    auto g = oracle::random_graph(rng, n, 0.6);
    auto host = hatlab::hg_search(g, 3);
    CHECK(host.monotone);
    for (auto [u, v] : g.edges()) {
      auto sub = hatlab::hg_search(g.without_edge(u, v), 3);
      CHECK(sub.hg <= host.hg);
    }
    if (hatlab::is_chordal(g) && host.exact) {
      auto mu = hatlab::mu_hat_chordal(g);
      CHECK(hatlab::Rational(host.hg) <= mu.upper);
    }
  }
}
