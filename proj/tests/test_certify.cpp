#include <random>

#include "doctest.h"
#include "hatlab/certify.hpp"
#include "hatlab/indpoly.hpp"
#include "oracles.hpp"

using hatlab::Graph;
using hatlab::HatGame;
using hatlab::Rational;

namespace {

// Two triangles {a,b,c} and {d,e,f} joined by the bridge c-d.
Graph h24() {
  return Graph::make({"a", "b", "c", "d", "e", "f"},
                     {{"a", "b"}, {"a", "c"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"d", "f"}, {"e", "f"}});
}

hatlab::GameExpr h24_expr() {
  auto left = hatlab::clique_leaf({"a", "b", "c"}, {4, 4, 2});
  auto bridge = hatlab::clique_leaf({"c", "d"}, {2, 2});
  auto right = hatlab::clique_leaf({"d", "e", "f"}, {2, 4, 4});
  return hatlab::product_expr(hatlab::product_expr(left, "c", bridge, "c"), "d", right, "d");
}

}  // namespace

TEST_CASE("direct maximality examples") {
  auto k3 = hatlab::check_maximal_direct(HatGame(oracle::complete(3), {2, 4, 4}));
  CHECK(k3.maximal);
  CHECK(k3.z_at_r == 0);
  CHECK(k3.corner_count == 8);

  auto k2 = hatlab::check_maximal_direct(HatGame(oracle::complete(2), {2, 3}));
  CHECK_FALSE(k2.maximal);
  CHECK(k2.z_at_r == Rational(1, 6));
  CHECK(k2.reason.find("1/6") != std::string::npos);

  auto chain = hatlab::check_maximal_direct(hatlab::uniform_game(h24(), 4));
  CHECK(chain.maximal);
  CHECK(chain.corner_count == 64);
  CHECK(chain.text.find("multilinear") != std::string::npos);
}

TEST_CASE("direct check finds a non-positive corner") {
  auto g = Graph::make({"a", "b", "c"}, {{"b", "c"}});
  auto cert = hatlab::check_maximal_direct(HatGame(g, {1, 2, 2}));
  CHECK(cert.z_at_r == 0);
  CHECK_FALSE(cert.maximal);
  CHECK(cert.failing_corner == std::vector<std::string>{"a"});
  CHECK(*cert.failing_value == 0);
}

TEST_CASE("corner cutoff") {
  auto cert = hatlab::check_maximal_direct(HatGame(oracle::complete(3), {3, 3, 3}), 2);
  CHECK_FALSE(cert.applicable);
  CHECK(cert.reason.find("compositional") != std::string::npos);
  CHECK(hatlab::corner_cutoff() >= 0);
}

TEST_CASE("corner values agree with direct evaluation") {
  // Sweep a random game and compare the refutation value with eval_Z on
  // the induced subgraph.
  std::mt19937 rng(4);
  int refuted = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto g = oracle::random_graph(rng, 6, 0.5);
    std::vector<hatlab::Count> h;
    std::uniform_int_distribution<int> hd(1, 4);
    for (int i = 0; i < 6; ++i) h.push_back(hd(rng));
    HatGame game(g, h);
    auto cert = hatlab::check_maximal_direct(game);
    if (cert.z_at_r != 0 || cert.maximal) continue;
    ++refuted;
    std::vector<Rational> x(6, 0);
    for (const auto& name : cert.failing_corner) {
      int v = g.index(name);
      x[v] = Rational(1, h[v]);
    }
    CHECK(oracle::brute_Z(g, x) == *cert.failing_value);
    CHECK(*cert.failing_value <= 0);
  }
  CHECK(refuted > 0);
}

TEST_CASE("wide hatness uses the big-integer sweep") {
  // prod h exceeds 2^120 with 9 vertices of hatness 2^14.
  std::vector<hatlab::Count> h(9, 1 << 14);
  h[0] = 2;
  std::vector<hatlab::Count> guesses(9, 1 << 13);
  guesses[0] = 1;
  // Sum of g/h = 1/2 + 8 * 1/2 > 1, still a winning clique but not precise.
  auto cert = hatlab::check_maximal_direct(HatGame(oracle::complete(9), h, guesses));
  CHECK_FALSE(cert.maximal);
  std::vector<hatlab::Count> hp(9, 1 << 14), gp(9, 1 << 10);
  hp[0] = 1 << 20;
  gp[0] = 1 << 19;
  // 1/2 + 8 * 1/16 = 1.
  auto ok = hatlab::check_maximal_direct(HatGame(oracle::complete(9), hp, gp));
  CHECK(ok.maximal);
  CHECK(ok.corner_count == 512);
}

TEST_CASE("compositional maximality") {
  auto cert = hatlab::check_maximal_compositional(h24_expr());
  CHECK(cert.applicable);
  CHECK(cert.maximal);
  CHECK(cert.z_at_r == 0);

  auto bad = hatlab::product_expr(hatlab::clique_leaf({"a", "A"}, {2, 3}), "A", hatlab::clique_leaf({"A", "b"}, {2, 2}), "A");
  auto no = hatlab::check_maximal_compositional(bad);
  CHECK_FALSE(no.applicable);
  CHECK(no.reason.find("{a,A}") != std::string::npos);

  auto lose = hatlab::pendant_lose_expr(hatlab::clique_leaf({"B"}, {2}), "B", "A");
  CHECK_FALSE(hatlab::check_maximal_compositional(lose).applicable);
}

TEST_CASE("direct and compositional routes agree on random sums of precise cliques") {
  std::mt19937 rng(77);
  const std::vector<std::vector<hatlab::Count>> precise = {{2, 2}, {3, 3, 3}, {2, 4, 4}, {2, 3, 6}, {1}, {4, 4, 4, 4}};
  for (int trial = 0; trial < 25; ++trial) {
    int counter = 0;
    auto leaf = [&] {
      const auto& h = precise[rng() % precise.size()];
      std::vector<std::string> names;
      for (std::size_t i = 0; i < h.size(); ++i) names.push_back("w" + std::to_string(counter++));
      return hatlab::clique_leaf(names, h);
    };
    auto e = leaf();
    int vertices = static_cast<int>(hatlab::eval_expr(e).game.size());
    for (int step = 0; step < 4; ++step) {
      auto cur = hatlab::eval_expr(e).game;
      auto next = leaf();
      auto next_game = hatlab::eval_expr(next).game;
      const auto& names = cur.graph().names();
      auto a = names[rng() % names.size()];
      auto b = next_game.graph().names()[rng() % next_game.size()];
      if (vertices + static_cast<int>(next_game.size()) - 1 > 14) break;
      if (step % 2 == 0) {
        e = hatlab::product_expr(e, a, next, b);
      } else {
        // S = a and one neighbor when available.
        std::vector<std::string> S{a};
        int ai = cur.graph().index(a);
        if (!cur.graph().neighbors(ai).empty()) S.push_back(names[cur.graph().neighbors(ai).front()]);
        e = hatlab::sum_expr(e, S, next, b);
      }
      vertices = static_cast<int>(hatlab::eval_expr(e).game.size());
    }
    auto comp = hatlab::check_maximal_compositional(e);
    auto direct = hatlab::check_maximal_direct(hatlab::eval_expr(e).game);
    CHECK(comp.maximal);
    CHECK(direct.maximal == comp.maximal);
  }
}

TEST_CASE("multilinear functions positive at corners are positive inside") {
  std::mt19937 rng(50);
  std::uniform_int_distribution<int> val(1, 20), pick(0, 100);
  for (int poly = 0; poly < 50; ++poly) {
    const int n = 2 + poly % 4;
    // Corner values c_T > 0 define the multilinear interpolant on the box
    // prod [0, b_i]; coefficients come from Moebius inversion.
    std::vector<Rational> corner(1u << n), coeff(1u << n), box(n);
    for (auto& c : corner) c = val(rng);
    for (auto& b : box) b = Rational(val(rng), 7);
    for (unsigned T = 0; T < corner.size(); ++T) {
      Rational s = 0;
      for (unsigned U = T;; U = (U - 1) & T) {
        s += (__builtin_popcount(T ^ U) % 2 ? -1 : 1) * corner[U];
        if (U == 0) break;
      }
      Rational scale = 1;
      for (int i = 0; i < n; ++i)
        if (T >> i & 1U) scale *= box[i];
      coeff[T] = s / scale;
    }
    for (int pt = 0; pt < 100; ++pt) {
      std::vector<Rational> x(n);
      for (int i = 0; i < n; ++i) x[i] = box[i] * Rational(pick(rng), 100);
      Rational f = 0;
      for (unsigned T = 0; T < coeff.size(); ++T) {
        Rational m = coeff[T];
        for (int i = 0; i < n; ++i)
          if (T >> i & 1U) m *= x[i];
        f += m;
      }
      CHECK(f > 0);
    }
  }
}

TEST_CASE("losing by Z positivity") {
  auto l = hatlab::losing_by_Z_positive(HatGame(oracle::complete(2), {2, 3}));
  CHECK(l.losing);
  CHECK(l.z_at_r == Rational(1, 6));
  auto w = hatlab::losing_by_Z_positive(HatGame(oracle::complete(2), {2, 2}));
  CHECK_FALSE(w.losing);
  CHECK(w.z_at_r == 0);
  // Every single-edge deletion of the maximal chain game is losing.
  auto g = h24();
  for (auto [u, v] : g.edges()) {
    auto cert = hatlab::losing_by_Z_positive(hatlab::uniform_game(g.without_edge(u, v), 4));
    CHECK(cert.losing);
  }
}

TEST_CASE("mu-hat on chordal graphs") {
  for (int n = 1; n <= 6; ++n) {
    auto r = hatlab::mu_hat_chordal(oracle::complete(n));
    CHECK(r.value == Rational(n));
  }
  auto p4 = hatlab::mu_hat_chordal(oracle::path(4), Rational(1, 3));
  CHECK(p4.value == Rational(3));
  CHECK(p4.root.candidate_confirmed);
  CHECK(p4.U == hatlab::Poly{1, -4, 3});
  CHECK_THROWS_AS(hatlab::mu_hat_chordal(oracle::cycle(4)), hatlab::ValidationError);

  // P3: mu-hat = (3 + sqrt 5)/2, irrational.
  auto p3 = hatlab::mu_hat_chordal(oracle::path(3));
  CHECK_FALSE(p3.value);
  // lower <= m <= upper with m^2 = 3m - 1 and m > 3/2.
  auto f = [](const Rational& m) -> Rational { return m * m - 3 * m + 1; };
  CHECK(f(p3.lower) <= 0);
  CHECK(f(p3.upper) >= 0);
  CHECK(p3.lower > Rational(3, 2));
  CHECK(p3.upper - p3.lower < Rational(1, 100000000));

  auto chain = hatlab::mu_hat_chordal(h24(), Rational(1, 4));
  CHECK(chain.value == Rational(4));
}
