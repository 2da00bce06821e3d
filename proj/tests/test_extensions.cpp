#include <random>

#include "doctest.h"
#include "hatlab/extensions.hpp"
#include "hatlab/indpoly.hpp"
#include "oracles.hpp"

using hatlab::Count;
using hatlab::ExtensionKind;
using hatlab::Poly;
using hatlab::Rational;

namespace {

std::vector<Rational> as_rationals(const std::vector<Count>& a) {
  return {a.begin(), a.end()};
}

// Every vertex of clique i gets x_i.
std::vector<Rational> spread(const std::vector<std::vector<int>>& cliques, std::size_t n, const std::vector<Rational>& x) {
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < cliques.size(); ++i)
    for (int v : cliques[i]) out[static_cast<std::size_t>(v)] = x[i];
  return out;
}

// All size vectors in {lo..hi}^n.
std::vector<std::vector<Count>> size_vectors(int n, Count lo, Count hi) {
  std::vector<std::vector<Count>> out{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<Count>> next;
    for (auto& v : out)
      for (Count a = lo; a <= hi; ++a) {
        auto w = v;
        w.push_back(a);
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("building extensions") {
  auto p2 = oracle::path(2);
  std::vector<Count> two{2, 2};
  auto first = hatlab::build_first_kind(p2, two);
  CHECK(first.graph.size() == 4);
  CHECK(first.graph.edges().size() == 3);
  CHECK(hatlab::stats(first.graph).max_degree == 2);
  CHECK(hatlab::diameter(first.graph) == 3);

  auto second = hatlab::build_second_kind(p2, two);
  CHECK(second.graph.size() == 4);
  CHECK(second.graph.edges().size() == 3);
  CHECK(hatlab::diameter(second.graph) == 3);
  CHECK(second.bridges.size() == 1);

  auto p3 = oracle::path(3);
  std::vector<Count> bad{1, 1, 1};
  CHECK_THROWS_AS(hatlab::build_second_kind(p3, bad), hatlab::ValidationError);
  // Every marked vertex carries one bridge only.
  std::vector<Count> ok{1, 2, 1};
  auto s = hatlab::build_second_kind(p3, ok);
  CHECK(s.graph.degree(s.cliques[1][0]) == 2);
  CHECK(s.graph.degree(s.cliques[1][1]) == 2);
}

TEST_CASE("reduced polynomial examples") {
  auto p2 = oracle::path(2);
  std::vector<Count> two{2, 2};
  std::vector<Rational> ones{1, 1}, zeros{0, 0};
  CHECK(hatlab::reduced_P(p2, two, ones, ExtensionKind::First) == 8);
  CHECK(hatlab::reduced_P(p2, two, zeros, ExtensionKind::First) == 1);

  auto k1 = oracle::complete(1);
  std::vector<Count> m{5};
  std::vector<Rational> x{Rational(2, 3)};
  CHECK(hatlab::reduced_P(k1, m, x, ExtensionKind::First) == 1 + 5 * x[0]);

  Rational t(3, 5);
  std::vector<Rational> tt{t, t};
  CHECK(hatlab::reduced_P(p2, two, tt, ExtensionKind::Second) == 1 + 4 * t + 3 * t * t);
  CHECK(hatlab::reduced_P(p2, two, zeros, ExtensionKind::Second) == 1);
}

TEST_CASE("leading coefficient examples") {
  auto p2 = oracle::path(2);
  auto p3 = oracle::path(3);
  std::vector<Rational> a33{3, 3}, a333{3, 3, 3}, a424{4, 2, 4};
  CHECK(hatlab::leading_f(p2, a33, ExtensionKind::First) == 8);
  CHECK(hatlab::leading_f(p3, a333, ExtensionKind::First) == 22);
  CHECK(oracle::count_sets(hatlab::build_first_kind(p3, std::vector<Count>{3, 3, 3}).graph, 3) == 22);
  CHECK(hatlab::leading_f(p3, a424, ExtensionKind::First) == 25);
  CHECK(hatlab::leading_f(p2, a33, ExtensionKind::Second) == 8);
  std::vector<Rational> none;
  CHECK(hatlab::leading_f(oracle::empty_graph(0), none, ExtensionKind::First) == 1);
}

TEST_CASE("U from f examples") {
  auto p2 = oracle::path(2);
  std::vector<Rational> a11{1, 1}, a33{3, 3};
  CHECK(hatlab::U_from_f(p2, a11, ExtensionKind::First) == Poly{1, -2});
  CHECK(hatlab::U_from_f(p2, a33, ExtensionKind::First) == Poly{1, -6, 8});
  CHECK(hatlab::U_from_f(p2, a33, ExtensionKind::Second) == Poly{1, -6, 8});
}

TEST_CASE("first kind on paths agrees with the built graph") {
  std::mt19937 rng(314);
  for (int n = 1; n <= 5; ++n) {
    auto base = oracle::path(n);
    const Count hi = n <= 3 ? 4 : 3;
    for (const auto& a : size_vectors(n, 1, hi)) {
      auto ext = hatlab::build_first_kind(base, a);
      const auto& g = ext.graph;
      auto ra = as_rationals(a);
      CHECK(hatlab::leading_f(base, ra, ExtensionKind::First) ==
            oracle::count_sets(g, static_cast<std::size_t>(n)));
      CHECK(hatlab::U_from_f(base, ra, ExtensionKind::First) == oracle::brute_U(g));
      for (int trial = 0; trial < 2; ++trial) {
        std::vector<Rational> x;
        for (int i = 0; i < n; ++i) x.push_back(oracle::random_rational(rng));
        CHECK(hatlab::reduced_P(base, a, x, ExtensionKind::First) ==
              oracle::brute_P(g, spread(ext.cliques, g.size(), x)));
      }
    }
  }
  // Some of the corpus at a_i = 4 with n = 5, against the engine instead of enumeration.
  auto base = oracle::path(5);
  std::vector<Count> a{4, 4, 4, 4, 4};
  auto ext = hatlab::build_first_kind(base, a);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> x;
    for (int i = 0; i < 5; ++i) x.push_back(oracle::random_rational(rng));
    CHECK(hatlab::reduced_P(base, a, x, ExtensionKind::First) ==
          hatlab::eval_P(ext.graph, spread(ext.cliques, ext.graph.size(), x)));
  }
}

TEST_CASE("second kind on paths agrees with the built graph") {
  std::mt19937 rng(2718);
  for (int n = 1; n <= 4; ++n) {
    auto base = oracle::path(n);
    for (const auto& a : size_vectors(n, 1, 4)) {
      bool valid = true;
      for (int i = 0; i < n; ++i) valid = valid && a[static_cast<std::size_t>(i)] >= base.degree(i);
      if (!valid) continue;
      auto ext = hatlab::build_second_kind(base, a);
      const auto& g = ext.graph;
      if (g.size() > 14) continue;
      auto ra = as_rationals(a);
      CHECK(hatlab::leading_f(base, ra, ExtensionKind::Second) ==
            oracle::count_sets(g, static_cast<std::size_t>(n)));
      CHECK(hatlab::U_from_f(base, ra, ExtensionKind::Second) == oracle::brute_U(g));
      std::vector<Rational> x;
      for (int i = 0; i < n; ++i) x.push_back(oracle::random_rational(rng));
      CHECK(hatlab::reduced_P(base, a, x, ExtensionKind::Second) ==
            oracle::brute_P(g, spread(ext.cliques, g.size(), x)));
    }
  }
}

TEST_CASE("non-path bases") {
  // Center first: v2's only back-neighbor is v0, so the first kind falls
  // back to direct evaluation.
  auto star = hatlab::Graph::from_indices(oracle::names(4), {{0, 1}, {0, 2}, {0, 3}});
  auto star_last = hatlab::Graph::from_indices(oracle::names(4), {{0, 3}, {1, 3}, {2, 3}});
  CHECK(hatlab::has_consecutive_back_neighbors(star_last));
  CHECK_FALSE(hatlab::has_consecutive_back_neighbors(star));
  std::vector<Count> a{2, 3, 2, 2};
  auto ext = hatlab::build_first_kind(star, a);
  std::vector<Rational> x{Rational(1, 2), Rational(-1, 3), 2, Rational(1, 7)};
  CHECK(hatlab::reduced_P(star, a, x, ExtensionKind::First) ==
        oracle::brute_P(ext.graph, spread(ext.cliques, ext.graph.size(), x)));
  CHECK(hatlab::leading_f(star, as_rationals(a), ExtensionKind::First) == oracle::count_sets(ext.graph, 4));
  CHECK_THROWS_AS(hatlab::U_from_f(star, as_rationals(a), ExtensionKind::First), hatlab::ValidationError);

  // The second-kind recurrence handles any ordering.
  std::vector<Count> b{3, 1, 1, 1};
  auto sec = hatlab::build_second_kind(star, b);
  CHECK(hatlab::leading_f(star, as_rationals(b), ExtensionKind::Second) == oracle::count_sets(sec.graph, 4));
  CHECK(hatlab::U_from_f(star, as_rationals(b), ExtensionKind::Second) == oracle::brute_U(sec.graph));
  auto tri = oracle::complete(3);
  std::vector<Count> c{2, 3, 2};
  auto t = hatlab::build_second_kind(tri, c);
  CHECK(hatlab::U_from_f(tri, as_rationals(c), ExtensionKind::Second) == oracle::brute_U(t.graph));
}
