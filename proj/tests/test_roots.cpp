#include <random>

#include "doctest.h"
#include "hatlab/extensions.hpp"
#include "hatlab/indpoly.hpp"
#include "hatlab/roots.hpp"
#include "oracles.hpp"

using hatlab::FamilyTag;
using hatlab::Poly;
using hatlab::Rational;
using std::nullopt;

namespace {

Poly linear(const Rational& root) { return Poly{-root, 1}; }

Poly product_of_roots(const std::vector<Rational>& roots) {
  Poly p = 1;
  for (const auto& r : roots) p *= linear(r);
  return p;
}

const Poly k = Poly::x();

}  // namespace

TEST_CASE("sturm examples") {
  CHECK(hatlab::sturm_count(Poly{1, -2}, Rational(0), Rational(1)) == 1);
  Poly q{1, -6, 8};
  CHECK(hatlab::sturm_count(q, Rational(0), Rational(1, 4)) == 1);
  CHECK(hatlab::sturm_count(q, Rational(0), Rational(1, 5)) == 0);
  CHECK(hatlab::sturm_count(Poly{1, 0, 1}, Rational(-10), Rational(10)) == 0);
  CHECK_THROWS_AS(hatlab::sturm_count(Poly{}, nullopt, nullopt), hatlab::ValidationError);
  CHECK(hatlab::sturm_count(Poly{5}, nullopt, nullopt) == 0);
}

TEST_CASE("sturm counts distinct roots of factored polynomials") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> roots;
    std::uniform_int_distribution<int> count(0, 6), mult(1, 3);
    int m = count(rng);
    for (int i = 0; i < m; ++i) roots.push_back(oracle::random_rational(rng, 9, 4));
    Poly p = Rational(trial % 2 ? 3 : -2);
    std::vector<Rational> distinct;
    for (const auto& r : roots) {
      p *= hatlab::pow(linear(r), static_cast<unsigned>(mult(rng)));
      if (std::find(distinct.begin(), distinct.end(), r) == distinct.end()) distinct.push_back(r);
    }
    // Irreducible quadratic factors add no real roots.
    if (trial % 3 == 0) p *= Poly{2, 1, 1};
    CHECK(hatlab::sturm_count(p, nullopt, nullopt) == static_cast<int>(distinct.size()));
    Rational lo = oracle::random_rational(rng, 9, 3), hi = lo + 2;
    int inside = 0;
    for (const auto& r : distinct) inside += r > lo && r <= hi;
    CHECK(hatlab::sturm_count(p, lo, hi) == inside);
  }
}

TEST_CASE("simplest rational") {
  CHECK(hatlab::simplest_between(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
  CHECK(hatlab::simplest_between(Rational(3, 10), Rational(7, 20)) == Rational(1, 3));
  CHECK(hatlab::simplest_between(Rational(2), Rational(5, 2)) == 2);
  CHECK(hatlab::simplest_between(Rational(21, 10), Rational(29, 10)) == Rational(5, 2));
}

TEST_CASE("smallest positive root examples") {
  auto k8 = hatlab::univariate_U(oracle::complete(8));
  auto r = hatlab::smallest_positive_root(k8, Rational(1, 8));
  CHECK(r.candidate_confirmed);
  CHECK(r.root->exact_root == Rational(1, 8));

  // Second-kind example with k = 1, n = 3: sizes (4, 2, 4).
  auto p3 = oracle::path(3);
  std::vector<Rational> a{4, 2, 4};
  auto u = hatlab::U_from_f(p3, a, hatlab::ExtensionKind::First);
  CHECK(hatlab::smallest_positive_root(u, Rational(1, 5)).candidate_confirmed);
  std::vector<Rational> shifted{-1, -3, -1};
  CHECK(hatlab::leading_f(p3, shifted, hatlab::ExtensionKind::First) == 0);

  // 1 - 3x + x^2 has the irrational root (3 - sqrt 5)/2.
  auto s = hatlab::smallest_positive_root(Poly{1, -3, 1});
  REQUIRE(s.root);
  CHECK_FALSE(s.root->exact_root);
  const auto& iv = *s.root;
  CHECK(iv.upper - iv.lower <= hatlab::root_tolerance());
  // lower < (3 - sqrt5)/2 <= upper  <=>  (3 - 2 lower)^2 > 5 >= (3 - 2 upper)^2
  Rational a_lo = 3 - 2 * iv.lower, a_hi = 3 - 2 * iv.upper;
  CHECK(a_lo * a_lo > 5);
  CHECK(a_hi * a_hi <= 5);
  CHECK(a_hi > 0);
}

TEST_CASE("smallest positive root edge cases") {
  CHECK_FALSE(hatlab::smallest_positive_root(Poly{1, 1}).root);
  CHECK_FALSE(hatlab::smallest_positive_root(Poly{1, 0, 1}).root);
  CHECK_THROWS_AS(hatlab::smallest_positive_root(Poly{0, 1}), hatlab::ValidationError);
  CHECK_THROWS_AS(hatlab::smallest_positive_root(Poly{}), hatlab::ValidationError);

  // Wrong candidates fall back to bisection and still find the exact root.
  Poly q{1, -6, 8};
  auto wrong = hatlab::smallest_positive_root(q, Rational(1, 2));
  CHECK_FALSE(wrong.candidate_confirmed);
  CHECK(wrong.root->exact_root == Rational(1, 4));
  auto miss = hatlab::smallest_positive_root(q, Rational(1, 3));
  CHECK_FALSE(miss.candidate_confirmed);
  CHECK_FALSE(miss.candidate_note.empty());

  // Rational roots found without a candidate, including repeated ones.
  auto rep = product_of_roots({Rational(2, 7), Rational(2, 7), Rational(5, 3), Rational(-1)});
  CHECK(hatlab::smallest_positive_root(rep).root->exact_root == Rational(2, 7));
  auto close = product_of_roots({Rational(1000, 3001), Rational(1, 3)});
  CHECK(hatlab::smallest_positive_root(close).root->exact_root == Rational(1000, 3001));
}

TEST_CASE("family examples") {
  CHECK(hatlab::family(FamilyTag::A, 2) == k * (k + 2));
  CHECK(hatlab::family_value(FamilyTag::A, 2, 2) == 8);
  CHECK(hatlab::family_value(FamilyTag::A, 3, 2) == 22);
  CHECK(hatlab::family(FamilyTag::L, 2) == Poly{8, 6, 1});
  CHECK(hatlab::family(FamilyTag::Phi, 2) == Poly{-1, 0, 1});
  CHECK(hatlab::family(FamilyTag::E, 2) == (k + 2) * k);
  CHECK_THROWS_AS(hatlab::family(FamilyTag::L, 1), hatlab::ValidationError);
  CHECK_THROWS_AS(hatlab::family(FamilyTag::E, 1), hatlab::ValidationError);
  CHECK_THROWS_AS(hatlab::family(FamilyTag::A, -1), hatlab::ValidationError);
}

TEST_CASE("families match direct counts") {
  // A_n counts the first-kind path extension with sizes k+1, B_n and L_n
  // the ones with one or two end cliques enlarged by 2.
  for (int n = 2; n <= 5; ++n) {
    auto base = oracle::path(n);
    for (int kv = 1; kv <= 2; ++kv) {
      std::vector<hatlab::Count> a(static_cast<std::size_t>(n), kv + 1);
      auto ga = hatlab::build_first_kind(base, a).graph;
      CHECK(hatlab::family_value(FamilyTag::A, n, kv) == oracle::count_sets(ga, n));
      a.front() = kv + 3;
      a.back() = kv + 3;
      if (n <= 4) {
        auto gl = hatlab::build_first_kind(base, a).graph;
        CHECK(hatlab::family_value(FamilyTag::L, n, kv) == oracle::count_sets(gl, n));
      }
      std::vector<hatlab::Count> e(static_cast<std::size_t>(n), kv);
      e.front() = kv + 1;
      e.back() = kv + 1;
      if (kv >= 2 || n == 2) {
        auto ge = hatlab::build_second_kind(base, e).graph;
        CHECK(hatlab::family_value(FamilyTag::E, n, kv) == oracle::count_sets(ge, n));
      }
    }
    for (int kv = 1; kv <= 2; ++kv) {
      std::vector<hatlab::Count> b(static_cast<std::size_t>(n), kv + 1);
      b.front() = kv + 3;
      auto gb = hatlab::build_first_kind(base, b).graph;
      if (gb.size() <= 16) CHECK(hatlab::family_value(FamilyTag::B, n, kv) == oracle::count_sets(gb, n));
    }
  }
}

TEST_CASE("root interval examples") {
  CHECK(hatlab::verify_root_interval(FamilyTag::A, 3, -4, 0));
  CHECK(hatlab::verify_root_interval(FamilyTag::Phi, 2, -2, 2));
  CHECK_FALSE(hatlab::verify_root_interval(FamilyTag::A, 2, -1, 0));
  // A closed interval endpoint that is a root counts as inside.
  CHECK(hatlab::verify_root_interval(FamilyTag::A, 2, -2, 0));
  CHECK_FALSE(hatlab::verify_root_interval(FamilyTag::A, 2, -2, Rational(-1, 2)));
}

TEST_CASE("family identities and root intervals up to 12") {
  for (int n = 0; n <= 12; ++n) {
    CHECK(hatlab::verify_root_interval(FamilyTag::A, n, -4, 0));
    CHECK(hatlab::verify_root_interval(FamilyTag::Phi, n, -2, 2));
  }
  for (int n = 2; n <= 10; ++n)
    CHECK(hatlab::family(FamilyTag::L, n) * k == hatlab::family(FamilyTag::A, n) * (k + 4));
  for (int n = 2; n <= 12; ++n)
    CHECK(hatlab::family(FamilyTag::E, n) == (k + 2) * hatlab::family(FamilyTag::Phi, n - 1));
}

TEST_CASE("integer coefficients") {
  auto c = hatlab::integer_coefficients(Poly{Rational(1, 2), Rational(-3, 4)});
  CHECK(c == std::vector<hatlab::Integer>{2, -3});
}
