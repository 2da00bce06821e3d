#include <random>

#include "doctest.h"
#include "hatlab/indpoly.hpp"
#include "oracles.hpp"

using hatlab::Graph;
using hatlab::Poly;
using hatlab::Rational;

TEST_CASE("eval_P examples") {
  CHECK(hatlab::eval_P(oracle::complete(2), {1, 1}) == 3);
  // Path on four vertices: 1 + 4t + 3t^2.
  Rational t(2, 7);
  CHECK(hatlab::eval_P(oracle::path(4), std::vector<Rational>(4, t)) == 1 + 4 * t + 3 * t * t);
  std::mt19937 rng(1);
  for (int n = 0; n < 8; ++n) {
    auto g = oracle::random_graph(rng, n, 0.4);
    CHECK(hatlab::eval_P(g, std::vector<Rational>(g.size(), 0)) == 1);
  }
}

TEST_CASE("eval_Z examples") {
  CHECK(hatlab::eval_Z(oracle::complete(3), {Rational(1, 2), Rational(1, 4), Rational(1, 4)}) == 0);
  CHECK(hatlab::eval_Z_uniform(oracle::path(4), Rational(1, 3)) == 0);
}

TEST_CASE("univariate U") {
  CHECK(hatlab::univariate_U(oracle::complete(5)) == Poly{1, -5});
  CHECK(hatlab::univariate_U(oracle::path(4)) == Poly{1, -4, 3});
  CHECK(hatlab::univariate_U(oracle::path(3)) == Poly{1, -3, 1});
  CHECK(hatlab::univariate_P(oracle::path(4)) == Poly{1, 4, 3});
}

TEST_CASE("recurrence matches enumeration on random graphs") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + trial % 15;
    auto g = oracle::random_graph(rng, n, trial % 3 == 0 ? 0.2 : 0.45);
    for (int k = 0; k < 5; ++k) {
      std::vector<Rational> x;
      for (int i = 0; i < n; ++i) x.push_back(oracle::random_rational(rng));
      CHECK(hatlab::eval_P(g, x) == oracle::brute_P(g, x));
      CHECK(hatlab::eval_Z(g, x) == oracle::brute_Z(g, x));
    }
    CHECK(hatlab::univariate_U(g) == oracle::brute_U(g));
  }
}

TEST_CASE("Z of a disjoint union factorizes") {
  auto a = oracle::cycle(5);
  auto b = oracle::path(4);
  std::vector<std::string> names = a.names();
  for (const auto& n : b.names()) names.push_back("b" + n);
  auto edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + 5, v + 5);
  auto both = Graph::from_indices(names, edges);
  std::mt19937 rng(5);
  std::vector<Rational> x;
  for (int i = 0; i < 9; ++i) x.push_back(oracle::random_rational(rng));
  std::vector<Rational> xa(x.begin(), x.begin() + 5), xb(x.begin() + 5, x.end());
  CHECK(hatlab::eval_Z(both, x) == hatlab::eval_Z(a, xa) * hatlab::eval_Z(b, xb));
}

TEST_CASE("Z is affine in every variable") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = oracle::random_graph(rng, 7, 0.4);
    std::vector<Rational> x;
    for (int i = 0; i < 7; ++i) x.push_back(oracle::random_rational(rng));
    for (int v = 0; v < 7; ++v) {
      auto at = [&](const Rational& t) {
        auto y = x;
        y[v] = t;
        return hatlab::eval_Z(g, y);
      };
      Rational z0 = at(0), z1 = at(1), z3 = at(3);
      CHECK(z3 - z0 == 3 * (z1 - z0));
    }
  }
}

TEST_CASE("deleting vertices equals zeroing their variables") {
  std::mt19937 rng(23);
  auto g = oracle::random_graph(rng, 9, 0.35);
  std::vector<Rational> x;
  for (int i = 0; i < 9; ++i) x.push_back(oracle::random_rational(rng));
  auto zeroed = x;
  zeroed[2] = 0;
  zeroed[6] = 0;
  auto smaller = g.without_vertex(6).without_vertex(2);
  std::vector<Rational> xs;
  for (int i = 0; i < 9; ++i)
    if (i != 2 && i != 6) xs.push_back(x[i]);
  CHECK(hatlab::eval_Z(smaller, xs) == hatlab::eval_Z(g, zeroed));
}

TEST_CASE("memo budget is enforced") {
  auto g = oracle::cycle(12);
  hatlab::IndependenceRecurrence<Rational> rec(g, std::vector<Rational>(12, 1), 3);
  CHECK_THROWS_AS(rec.evaluate(), hatlab::GuardError);
}
