#include "hatlab/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "hatlab/certify.hpp"
#include "hatlab/extensions.hpp"
#include "hatlab/indpoly.hpp"
#include "hatlab/roots.hpp"
#include "hatlab/solver.hpp"

namespace hatlab {

namespace {

using Clock = std::chrono::steady_clock;

class Checker {
 public:
  bool ok = true;
  std::vector<std::string> lines;

  void note(std::string s) { lines.push_back(std::move(s)); }
  bool expect(bool cond, const std::string& what) {
    if (!cond) {
      lines.push_back((ok ? "FAILED: " : "also failed: ") + what);
      ok = false;
    }
    return cond;
  }
};

std::string q(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return to_string(c);
}

std::string game_desc(const HatGame& g) {
  std::string s = "K" + std::to_string(g.size()) + " h=(";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g.hatness()[i]);
  s += ") g=(";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g.guesses()[i]);
  return s + ")";
}

// Reference enumeration of independent sets by backtracking; shares nothing
// with the clique recurrence it is compared against.
void each_independent_set(const Graph& g, const std::function<void(const std::vector<int>&)>& f) {
  const int n = static_cast<int>(g.size());
  std::vector<int> chosen, blocked(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      f(chosen);
      return;
    }
    rec(v + 1);
    if (blocked[static_cast<std::size_t>(v)]) return;
    chosen.push_back(v);
    for (int w : g.neighbors(v)) ++blocked[static_cast<std::size_t>(w)];
    rec(v + 1);
    for (int w : g.neighbors(v)) --blocked[static_cast<std::size_t>(w)];
    chosen.pop_back();
  };
  rec(0);
}

Rational ref_P(const Graph& g, const std::vector<Rational>& x) {
  Rational total = 0;
  each_independent_set(g, [&](const std::vector<int>& s) {
    Rational t = 1;
    for (int v : s) t *= x[static_cast<std::size_t>(v)];
    total += t;
  });
  return total;
}

Rational ref_Z(const Graph& g, const std::vector<Rational>& x) {
  std::vector<Rational> neg;
  for (const auto& v : x) neg.push_back(-v);
  return ref_P(g, neg);
}

Poly ref_U(const Graph& g) {
  std::vector<Rational> c(g.size() + 1);
  each_independent_set(g, [&](const std::vector<int>& s) { c[s.size()] += s.size() % 2 ? -1 : 1; });
  return Poly(std::move(c));
}

long ref_count(const Graph& g, std::size_t k) {
  long n = 0;
  each_independent_set(g, [&](const std::vector<int>& s) { n += s.size() == k; });
  return n;
}

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 11);
  return make_rational(num(rng), den(rng));
}

Graph named_graph(int n, const std::vector<std::pair<int, int>>& edges, const std::string& prefix = "v") {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return Graph::from_indices(std::move(names), edges);
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return named_graph(n, e);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return named_graph(n, e);
}

Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return named_graph(leaves + 1, e);
}

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return named_graph(n, e);
}

std::multiset<int> degree_multiset(const Graph& g) {
  std::multiset<int> d;
  for (int v = 0; v < static_cast<int>(g.size()); ++v) d.insert(g.degree(v));
  return d;
}

SolverLimits bounded(std::uint64_t conflicts) {
  SolverLimits l;
  l.max_conflicts = conflicts;
  return l;
}

// ---------------------------------------------------------------------------

void clique_criterion_equivalence(Checker& ck, const SuiteHooks&) {
  int games = 0, winning = 0, wrong = 0;
  auto run = [&](const std::vector<Count>& h, const std::vector<Count>& g) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < h.size(); ++i) names.push_back("v" + std::to_string(i));
    HatGame game(Graph::complete(names), h, g);
    Rational sum = 0;
    for (std::size_t i = 0; i < h.size(); ++i) sum += make_rational(g[i], h[i]);
    const bool expected = sum >= 1;
    auto verdict = decide_game(game);
    ++games;
    const bool ok = verdict.status == (expected ? Verdict::Winning : Verdict::Losing);
    if (!ok) ++wrong;
    ck.expect(ok, game_desc(game) + ": solver says " + verdict_name(verdict.status) + ", sum g/h = " + q(sum));
    ck.expect(clique_criterion(game).winning == expected, game_desc(game) + ": clique criterion disagrees");
    if (verdict.strategy) {
      ++winning;
      ck.expect(verify_strategy(game, *verdict.strategy).ok, game_desc(game) + ": extracted strategy fails");
    }
  };
  // Every complete game with n <= 3, h <= 4 and g <= min(2, h).
  for (int n = 1; n <= 3; ++n) {
    std::vector<Count> h(static_cast<std::size_t>(n), 1), g(static_cast<std::size_t>(n), 1);
    std::function<void(int)> rec = [&](int i) {
      if (i == n) {
        run(h, g);
        return;
      }
      for (Count hv = 1; hv <= 4; ++hv)
        for (Count gv = 1; gv <= std::min<Count>(2, hv); ++gv) {
          h[static_cast<std::size_t>(i)] = hv;
          g[static_cast<std::size_t>(i)] = gv;
          rec(i + 1);
        }
    };
    rec(0);
  }
  ck.note("games " + std::to_string(games) + ", winning " + std::to_string(winning) + ", mismatches " +
          std::to_string(wrong));
}

void delta6_criterion(Checker& ck, const SuiteHooks& hooks) {
  auto d = hooks.delta6();
  const auto& g = d.game.graph();
  auto st = stats(g);
  ck.note("vertices " + std::to_string(g.size()) + ", max degree " + std::to_string(st.max_degree));
  ck.expect(g.size() == 31, "31 vertices");
  ck.expect(st.max_degree == 6, "max degree 6");
  ck.expect(d.game.constant_hatness() == Count(8) && d.game.is_classic(), "h == 8, g == 1");
  Rational z = eval_Z(g, fraction_vector(d.game));
  ck.note("Z(1/8) = " + q(z));
  ck.expect(z == 0, "Z(1/8, ..., 1/8) = 0");
  auto m = check_maximal_compositional(d.expr);
  ck.expect(m.applicable && m.maximal, "compositional maximality: " + m.reason);
  auto hg = conclude_hg(d.expr);
  ck.note("HG = " + (hg.value ? q(*hg.value) : hg.reason));
  ck.expect(hg.value == Rational(8), "HG = 8");
  auto mu = mu_hat_chordal(g, make_rational(1, 8));
  ck.note("mu-hat = " + (mu.value ? q(*mu.value) : "[" + q(mu.lower) + ", " + q(mu.upper) + "]") + ", U degree " +
          std::to_string(mu.U.degree()));
  ck.expect(mu.root.candidate_confirmed, "1/8 is the smallest positive root of U: " + mu.root.candidate_note);
  ck.expect(sturm_count(mu.U, Rational(0), make_rational(1, 8)) == 1, "exactly one root in (0, 1/8]");
  ck.expect(mu.value == Rational(8), "mu-hat = 8");
}

void scary_criterion(Checker& ck, const SuiteHooks& hooks) {
  for (int n : {3, 4}) {
    auto s = hooks.scary(n);
    const auto& g = s.game.graph();
    auto st = stats(g);
    auto hg = conclude_hg(s.expr);
    const Count two_n = Count(1) << n;
    const int delta = 3 * (1 << (n - 2));
    const std::string tag = "n=" + std::to_string(n) + ": ";
    ck.note(tag + "vertices " + std::to_string(g.size()) + ", max degree " + std::to_string(st.max_degree) +
            ", HG " + (hg.value ? q(*hg.value) : hg.reason));
    ck.expect(g.size() == (n == 3 ? 31u : 585u), tag + "vertex count");
    ck.expect(st.max_degree == delta, tag + "max degree 3*2^(n-2)");
    ck.expect(hg.value == Rational(two_n), tag + "HG = 2^n");
    if (hg.value && st.max_degree > 0) {
      Rational ratio = *hg.value / st.max_degree;
      ck.note(tag + "HG / max degree = " + q(ratio));
      ck.expect(ratio == make_rational(4, 3), tag + "ratio 4/3");
    }
    Rational z = eval_Z_uniform(g, make_rational(1, two_n));
    ck.note(tag + "Z(1/2^n) = " + q(z));
    ck.expect(z == 0, tag + "Z(r) = 0");
  }
}

void delta_plus_k_criterion(Checker& ck, const SuiteHooks& hooks) {
  auto d = hooks.delta_plus_k(3);
  const auto& g = d.built.game.graph();
  auto st = stats(g);
  auto hg = conclude_hg(d.built.expr);
  ck.note("k=3, m=" + std::to_string(d.m) + ": vertices " + std::to_string(g.size()) + ", max degree " +
          std::to_string(st.max_degree) + ", HG " + (hg.value ? q(*hg.value) : hg.reason));
  ck.expect(g.size() == 62, "62 vertices");
  ck.expect(st.max_degree == 13, "max degree 13");
  ck.expect(hg.value == Rational(16), "HG = 16");
  ck.expect(hg.value && *hg.value - st.max_degree == 3, "HG = max degree + 3");
  ck.expect(eval_Z_uniform(g, make_rational(1, 16)) == 0, "Z(1/16) = 0");
  Rational r = delta_plus_k_ratio(100);
  Rational gap = r - make_rational(8, 7);
  if (gap < 0) gap = -gap;
  ck.note("ratio at m=100: " + q(r) + ", distance to 8/7: " + q(gap));
  ck.expect(r == make_rational(800, 699), "8m/(7m-1) at m=100 is 800/699");
  ck.expect(gap < make_rational(1, 500), "within 1/500 of 8/7");
}

void minimal_roots_criterion(Checker& ck, const SuiteHooks&) {
  int confirmed = 0, cross = 0;
  for (int which : {2, 3})
    for (int k = 0; k <= 3; ++k)
      for (int n = 2; n <= 8; ++n) {
        auto ex = build_extension_example(which, n, k);
        const Rational c = make_rational(1, which == 2 ? k + 4 : k + 2);
        auto root = smallest_positive_root(ex.U, c);
        const std::string tag = "example " + std::to_string(which) + " k=" + std::to_string(k) +
                                " n=" + std::to_string(n);
        ck.expect(ex.U(c) == 0, tag + ": U(" + q(c) + ") = 0");
        ck.expect(root.candidate_confirmed, tag + ": " + q(c) + " not confirmed: " + root.candidate_note);
        ck.expect(sturm_count(ex.U, Rational(0), c) == 1, tag + ": one root in (0, " + q(c) + "]");
        confirmed += root.candidate_confirmed;
        // U from the clique-size recurrence against the built graph.
        if (ex.graph && ex.graph->size() <= 24) {
          ck.expect(univariate_U(*ex.graph) == ex.U, tag + ": U from f_n differs from U of the graph");
          ++cross;
        }
      }
  ck.note("confirmed " + std::to_string(confirmed) + " of 56 candidates; " + std::to_string(cross) +
          " U polynomials checked on built graphs");
}

void root_interval_criterion(Checker& ck, const SuiteHooks&) {
  int checked = 0;
  for (int n = 0; n <= 12; ++n) {
    ck.expect(verify_root_interval(FamilyTag::A, n, Rational(-4), Rational(0)),
              "A_" + std::to_string(n) + " roots in [-4, 0]");
    ck.expect(verify_root_interval(FamilyTag::Phi, n, Rational(-2), Rational(2)),
              "Phi_" + std::to_string(n) + " roots in [-2, 2]");
    checked += 2;
  }
  ck.note(std::to_string(checked) + " polynomials, A_12 = " + family(FamilyTag::A, 12).to_string());
}

void identity_criterion(Checker& ck, const SuiteHooks&) {
  const Poly k{0, 1};
  int checked = 0;
  for (int n = 2; n <= 10; ++n) {
    ck.expect(family(FamilyTag::L, n) * k == family(FamilyTag::A, n) * Poly{4, 1},
              "L_" + std::to_string(n) + " k = A_" + std::to_string(n) + " (k+4)");
    ck.expect(family(FamilyTag::E, n) == Poly{2, 1} * family(FamilyTag::Phi, n - 1),
              "E_" + std::to_string(n) + " = (k+2) Phi_" + std::to_string(n - 1));
    checked += 2;
  }
  ck.note(std::to_string(checked) + " identities, L_10 = " + family(FamilyTag::L, 10).to_string());
}

// Losing by Z-positivity, else by a bounded solver run.
std::string losing_reason(const HatGame& game) {
  if (losing_by_Z_positive(game).losing) return "Z(r) > 0";
  if (decide_game(game, bounded(200000)).status == Verdict::Losing) return "solver";
  return "";
}

void stegosaur_criterion(Checker& ck, const SuiteHooks& hooks) {
  auto h24 = hooks.chain(2, 4, ChainVariant::Standard);
  auto game = uniform_game(h24.graph, 4);
  auto m = check_maximal_direct(game);
  ck.note("H_2^4: " + std::to_string(h24.graph.size()) + " vertices, Z(1/4) = " + q(m.z_at_r) + ", corners " +
          std::to_string(m.corner_count));
  ck.expect(m.applicable && m.maximal, "<H_2^4, 4> maximal by corner check");
  auto v = decide_game(game, bounded(200000));
  ck.expect(v.status == Verdict::Winning, "<H_2^4, 4> winning by solver");
  ck.expect(v.strategy && verify_strategy(game, *v.strategy).ok, "solver strategy verified");

  auto h23 = hooks.chain(2, 3, ChainVariant::Standard);
  const bool is_p4 = h23.graph.size() == 4 && h23.graph.edge_count() == 3 && stats(h23.graph).connected &&
                     degree_multiset(h23.graph) == std::multiset<int>{1, 1, 2, 2};
  ck.expect(is_p4, "H_2^3 is P4");
  auto v3 = decide_game(uniform_game(h23.graph, 3), bounded(200000));
  ck.expect(v3.status == Verdict::Losing, "<H_2^3, 3> losing by solver (" + verdict_name(v3.status) + ")");

  int deleted = 0, certified = 0;
  for (auto [a, b] : h24.graph.edges()) {
    auto sub = h24.graph.without_edge(a, b);
    auto why = losing_reason(uniform_game(sub, 4));
    ++deleted;
    certified += !why.empty();
    ck.expect(!why.empty(), "H_2^4 minus edge " + h24.graph.name(a) + "-" + h24.graph.name(b) + " not certified losing");
  }
  ck.note("single-edge deletions of H_2^4 certified losing: " + std::to_string(certified) + "/" +
          std::to_string(deleted));
  auto tilde = hooks.chain(2, 4, ChainVariant::Tilde);
  auto why_t = losing_reason(uniform_game(tilde.graph, 4));
  ck.expect(!why_t.empty(), "tilde H_2^4 losing");
  auto minus = hooks.chain(3, 4, ChainVariant::Minus);
  auto why_m = losing_reason(uniform_game(minus.graph, 4));
  ck.expect(!why_m.empty(), "H_3^4 minus losing");
  ck.note("tilde H_2^4: " + (why_t.empty() ? "open" : why_t) + "; H_3^4 minus: " + (why_m.empty() ? "open" : why_m));
}

void muhat_gap_criterion(Checker& ck, const SuiteHooks& hooks) {
  auto p4 = hooks.chain(2, 3, ChainVariant::Standard);
  auto mu = mu_hat_chordal(p4.graph, make_rational(1, 3));
  ck.note("U(P4) = " + mu.U.to_string() + ", mu-hat = " + (mu.value ? q(*mu.value) : "?"));
  ck.expect(mu.U == Poly{1, -4, 3}, "U = 1 - 4x + 3x^2");
  ck.expect(mu.root.candidate_confirmed && mu.value == Rational(3), "mu-hat(P4) = 3");
  if (p4.generalized) {
    auto c = conclude_muhat(p4.generalized->expr);
    ck.expect(c.value == Rational(3), "generalized chain gives mu-hat 3");
  } else {
    ck.expect(false, "generalized chain expression present");
  }
  auto hg = hg_search(p4.graph, 4);
  std::string levels;
  for (auto l : hg.levels) levels += (levels.empty() ? "" : ",") + verdict_name(l);
  ck.note("hg_search(P4) = " + std::to_string(hg.hg) + " (levels " + levels + ")");
  ck.expect(hg.exact && hg.hg == 2, "HG(P4) = 2");
  ck.expect(hg.monotone, "monotone levels");
  ck.expect(mu.value && *mu.value > hg.hg, "mu-hat > HG");
}

std::vector<std::pair<std::string, Graph>> oracle_corpus(const SuiteHooks& hooks) {
  std::vector<std::pair<std::string, Graph>> out;
  for (int n = 1; n <= 15; ++n) out.emplace_back("P" + std::to_string(n), path_graph(n));
  for (int n = 3; n <= 15; ++n) out.emplace_back("C" + std::to_string(n), cycle_graph(n));
  for (int n = 1; n <= 8; ++n) out.emplace_back("K" + std::to_string(n), complete_graph(n));
  for (int s = 2; s <= 6; ++s) out.emplace_back("star" + std::to_string(s), star_graph(s));
  for (int n = 2; n <= 4; ++n)
    for (int l = 3; l <= 7; ++l)
      for (auto var : {ChainVariant::Standard, ChainVariant::Tilde, ChainVariant::Minus}) {
        if (var == ChainVariant::Minus && (n < 3 || l < 4)) continue;
        auto c = hooks.chain(n, l, var);
        if (c.graph.size() <= 15)
          out.emplace_back("H(" + std::to_string(n) + "," + std::to_string(l) + "," + chain_variant_name(var) + ")",
                           c.graph);
      }
  for (int which = 1; which <= 3; ++which)
    for (int n = 2; n <= 5; ++n)
      for (int k = 0; k <= 3; ++k) {
        auto ex = build_extension_example(which, n, k);
        if (ex.graph && ex.graph->size() <= 15)
          out.emplace_back("example" + std::to_string(which) + "(" + std::to_string(n) + "," + std::to_string(k) + ")",
                           *ex.graph);
      }
  std::mt19937 rng(20240611);
  for (int i = 0; i < 40; ++i) {
    int n = 2 + i % 14;
    out.emplace_back("random" + std::to_string(i), random_graph(rng, n, i % 2 ? 0.25 : 0.5));
  }
  return out;
}

void oracle_criterion(Checker& ck, const SuiteHooks& hooks) {
  std::mt19937 rng(7);
  auto corpus = oracle_corpus(hooks);
  int points = 0;
  for (const auto& [name, g] : corpus) {
    for (int t = 0; t < 20; ++t) {
      std::vector<Rational> x;
      for (std::size_t i = 0; i < g.size(); ++i) x.push_back(random_rational(rng));
      if (!ck.expect(eval_P(g, x) == ref_P(g, x), name + ": P differs from enumeration")) break;
      if (!ck.expect(eval_Z(g, x) == ref_Z(g, x), name + ": Z differs from enumeration")) break;
      ++points;
    }
    ck.expect(univariate_U(g) == ref_U(g), name + ": U differs from enumeration");
  }
  ck.note(std::to_string(corpus.size()) + " graphs, " + std::to_string(points) + " points");

  // Path extensions: reduced polynomial and f_n against the built graphs.
  int vectors = 0;
  for (int n = 1; n <= 5; ++n) {
    Graph base = path_graph(n);
    std::vector<Count> a(static_cast<std::size_t>(n), 1);
    std::function<void(int)> rec = [&](int i) {
      if (i == n) {
        for (auto kind : {ExtensionKind::First, ExtensionKind::Second}) {
          Graph built;
          std::vector<std::vector<int>> cliques;
          if (kind == ExtensionKind::First) {
            auto e = build_first_kind(base, a);
            built = e.graph;
            cliques = e.cliques;
          } else {
            bool fits = true;
            for (int v = 0; v < n; ++v) fits = fits && a[static_cast<std::size_t>(v)] >= base.degree(v);
            if (!fits) continue;
            auto e = build_second_kind(base, a);
            built = e.graph;
            cliques = e.cliques;
          }
          std::vector<Rational> xs, point(built.size());
          for (int v = 0; v < n; ++v) xs.push_back(random_rational(rng));
          for (std::size_t c = 0; c < cliques.size(); ++c)
            for (int v : cliques[c]) point[static_cast<std::size_t>(v)] = xs[c];
          std::vector<Rational> ra(a.begin(), a.end());
          std::string tag = std::string(kind == ExtensionKind::First ? "first" : "second") + " kind, sizes (";
          for (std::size_t j = 0; j < a.size(); ++j) tag += (j ? "," : "") + std::to_string(a[j]);
          tag += ")";
          if (!ck.expect(reduced_P(base, a, xs, kind) == ref_P(built, point), tag + ": reduced polynomial")) return;
          if (!ck.expect(leading_f(base, ra, kind) == ref_count(built, static_cast<std::size_t>(n)), tag + ": f_n"))
            return;
          ++vectors;
        }
        return;
      }
      for (Count s = 1; s <= 4; ++s) {
        a[static_cast<std::size_t>(i)] = s;
        rec(i + 1);
      }
    };
    rec(0);
  }
  ck.note(std::to_string(vectors) + " path extensions checked (n <= 5, a_i <= 4)");
}

void soundness_criterion(Checker& ck, const SuiteHooks& hooks) {
  int agree = 0, open = 0, guarded = 0, contradictions = 0;
  auto compare = [&](const std::string& name, const HatGame& game, Status claimed) {
    if (claimed == Status::Unknown) return;
    GameVerdict v;
    try {
      v = decide_game(game, bounded(20000));
    } catch (const GuardError&) {
      ++guarded;
      return;
    }
    if (v.status == Verdict::Unknown) {
      ++open;
      return;
    }
    const bool same = (v.status == Verdict::Winning) == (claimed == Status::Winning);
    if (same) ++agree;
    else ++contradictions;
    ck.expect(same, name + ": certificate says " + status_name(claimed) + ", solver says " + verdict_name(v.status));
  };

  // Constructor certificates.
  std::vector<std::pair<std::string, GameExpr>> exprs;
  for (int n = 1; n <= 3; ++n)
    for (Count h = 1; h <= 4; ++h) {
      std::vector<std::string> names;
      for (int i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
      exprs.emplace_back("K" + std::to_string(n) + "(" + std::to_string(h) + ")",
                         clique_leaf(names, std::vector<Count>(static_cast<std::size_t>(n), h)));
    }
  auto k22 = [](const std::string& a, const std::string& b) { return clique_leaf({a, b}, {2, 2}); };
  auto k333 = [](const std::string& a, const std::string& b, const std::string& c) {
    return clique_leaf({a, b, c}, {3, 3, 3});
  };
  exprs.emplace_back("K2(2,2) x K2(2,2)", product_expr(k22("a", "b"), "b", k22("c", "d"), "c"));
  exprs.emplace_back("K3(3,3,3) x K2(2,2)", product_expr(k333("a", "b", "c"), "a", k22("d", "e"), "d"));
  exprs.emplace_back("K3(2,4,4) x K2(2,2)",
                     product_expr(clique_leaf({"a", "b", "c"}, {2, 4, 4}), "a", k22("d", "e"), "d"));
  exprs.emplace_back("K3(3,3,3) +{a,b} K2(2,2)", sum_expr(k333("a", "b", "c"), {"a", "b"}, k22("v", "w"), "v"));
  exprs.emplace_back("K2(2,2) in K2(2,2)", substitute_expr(CliqueLeaf{{"x", "y"}, {2, 2}, {}}, k22("u", "w"), "u"));
  exprs.emplace_back("pendant on K2(2,3)", pendant_lose_expr(clique_leaf({"a", "b"}, {2, 3}), "b", "p"));
  exprs.emplace_back("losing sum K2(3,3) with pendant K1(2)",
                     sum_lose_expr(clique_leaf({"a", "b"}, {3, 3}), "b",
                                   pendant_lose_expr(clique_leaf({"c"}, {2}), "c", "p"), "p"));
  for (int n = 2; n <= 3; ++n)
    for (int l = 3; l <= 5; ++l) {
      auto c = hooks.chain(n, l, ChainVariant::Standard);
      const std::string tag = "H(" + std::to_string(n) + "," + std::to_string(l) + ")";
      if (c.winning) exprs.emplace_back(tag, c.winning->expr);
      if (c.losing) exprs.emplace_back(tag + " losing", c.losing->expr);
      if (c.generalized) exprs.emplace_back(tag + " generalized", c.generalized->expr);
    }
  exprs.emplace_back("delta6", hooks.delta6().expr);
  for (const auto& [name, e] : exprs) {
    auto cert = eval_expr(e);
    compare(name, cert.game, cert.status);
  }
  ck.note("constructor certificates: " + std::to_string(exprs.size()) + " expressions");

  // Z-positivity certificates on small graphs with constant hatness.
  std::vector<std::pair<std::string, Graph>> graphs;
  for (int n = 2; n <= 5; ++n) graphs.emplace_back("P" + std::to_string(n), path_graph(n));
  for (int n = 3; n <= 5; ++n) graphs.emplace_back("C" + std::to_string(n), cycle_graph(n));
  for (int n = 2; n <= 4; ++n) graphs.emplace_back("K" + std::to_string(n), complete_graph(n));
  graphs.emplace_back("star3", star_graph(3));
  graphs.emplace_back("H(2,4)", hooks.chain(2, 4, ChainVariant::Standard).graph);
  graphs.emplace_back("H~(2,4)", hooks.chain(2, 4, ChainVariant::Tilde).graph);
  std::mt19937 rng(11);
  for (int i = 0; i < 12; ++i) graphs.emplace_back("random" + std::to_string(i), random_graph(rng, 3 + i % 3, 0.5));
  int z_certs = 0;
  for (const auto& [name, g] : graphs)
    for (Count h = 2; h <= 4; ++h) {
      Count colorings = 1;
      for (std::size_t i = 0; i < g.size(); ++i) colorings *= h;
      if (colorings > 5000) continue;
      auto game = uniform_game(g, h);
      auto z = losing_by_Z_positive(game);
      if (!z.losing) continue;
      ++z_certs;
      compare(name + " h=" + std::to_string(h) + " (Z > 0)", game, Status::Losing);
    }
  ck.note("Z-positivity certificates: " + std::to_string(z_certs));
  ck.note("solver agreed " + std::to_string(agree) + ", undecided within budget " + std::to_string(open) +
          ", beyond guards " + std::to_string(guarded) + ", contradictions " + std::to_string(contradictions));

  // Every certified HG against e * max degree.
  std::vector<std::pair<std::string, GameExpr>> certified{{"delta6", hooks.delta6().expr},
                                                         {"scary(3)", hooks.scary(3).expr},
                                                         {"scary(4)", hooks.scary(4).expr}};
  for (int k = 1; k <= 4; ++k) certified.emplace_back("delta+k(" + std::to_string(k) + ")", hooks.delta_plus_k(k).built.expr);
  for (int n = 2; n <= 4; ++n)
    for (int l : {4, 6, 8})
      if (auto c = hooks.chain(n, l, ChainVariant::Standard); c.winning)
        certified.emplace_back("H(" + std::to_string(n) + "," + std::to_string(l) + ")", c.winning->expr);
  int bounds = 0;
  for (const auto& [name, e] : certified) {
    auto cert = eval_expr(e);
    if (!cert.hg_claim) continue;
    const int delta = stats(cert.game.graph()).max_degree;
    ck.expect(e_degree_bound_holds(*cert.hg_claim, delta),
              name + ": HG " + q(*cert.hg_claim) + " not below e * " + std::to_string(delta));
    ++bounds;
  }
  for (const auto& [name, g] : std::vector<std::pair<std::string, Graph>>{{"K3", complete_graph(3)}, {"P4", path_graph(4)}}) {
    auto hg = hg_search(g, 4, bounded(200000));
    if (!hg.exact) continue;
    ck.expect(e_degree_bound_holds(Rational(hg.hg), stats(g).max_degree), name + ": searched HG violates the bound");
    ++bounds;
  }
  ck.note("HG < e * max degree checked for " + std::to_string(bounds) + " certified values");
}

using Runner = void (*)(Checker&, const SuiteHooks&);

struct Entry {
  CriterionInfo info;
  Runner run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all{
      {{1, "clique-criterion", {"solver"}, "solver verdict equals sum g/h >= 1 on small complete games", 60},
       clique_criterion_equivalence},
      {{2, "delta6", {"gallery", "certify"}, "max degree 6 graph with HG 8 and mu-hat 8", 10}, delta6_criterion},
      {{3, "scary", {"gallery"}, "HG / max degree = 4/3 for n = 3, 4", 60}, scary_criterion},
      {{4, "delta-plus-k", {"gallery"}, "HG = max degree + 3 at m = 2; ratio 8m/(7m-1)", 10}, delta_plus_k_criterion},
      {{5, "minimal-roots", {"roots"}, "smallest roots 1/(k+4) and 1/(k+2) of the extension families", 30},
       minimal_roots_criterion},
      {{6, "root-intervals", {"roots"}, "roots of A_n in [-4, 0] and Phi_n in [-2, 2]", 10}, root_interval_criterion},
      {{7, "identities", {"roots"}, "L_n k = A_n (k+4) and E_n = (k+2) Phi_{n-1}", 5}, identity_criterion},
      {{8, "stegosaur", {"gallery", "solver", "certify"}, "H_2^4 maximal winning and minimal; H_2^3 losing", 120},
       stegosaur_criterion},
      {{9, "muhat-gap", {"certify", "solver"}, "mu-hat(P4) = 3 > HG(P4) = 2", 30}, muhat_gap_criterion},
      {{10, "oracles", {"indpoly"}, "recurrences equal brute-force enumeration", 60}, oracle_criterion},
      {{11, "soundness", {"solver", "certify"}, "certificates never contradict the solver; HG < e * max degree", 120},
       soundness_criterion},
  };
  return all;
}

}  // namespace

std::vector<CriterionInfo> suite_criteria() {
  std::vector<CriterionInfo> out;
  for (const auto& e : entries()) out.push_back(e.info);
  return out;
}

std::vector<CriterionInfo> select_criteria(const std::vector<std::string>& only) {
  if (only.empty()) return suite_criteria();
  std::vector<CriterionInfo> out;
  std::set<std::string> used;
  for (const auto& info : suite_criteria()) {
    bool hit = false;
    for (const auto& f : only) {
      bool m = f == std::to_string(info.id) || f == info.key ||
               std::find(info.groups.begin(), info.groups.end(), f) != info.groups.end();
      if (m) used.insert(f);
      hit = hit || m;
    }
    if (hit) out.push_back(info);
  }
  for (const auto& f : only)
    if (!used.count(f)) throw ValidationError("no criterion matches '" + f + "'");
  return out;
}

CriterionResult run_criterion(const CriterionInfo& info, const SuiteHooks& hooks) {
  CriterionResult r;
  r.info = info;
  Checker ck;
  const auto start = Clock::now();
  try {
    for (const auto& e : entries())
      if (e.info.id == info.id) e.run(ck, hooks);
  } catch (const std::exception& e) {
    ck.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  std::ostringstream budget;
  budget << std::fixed << std::setprecision(2) << r.seconds << " s exceeds the " << info.budget_seconds << " s budget";
  ck.expect(r.seconds <= info.budget_seconds, budget.str());
  r.pass = ck.ok;
  r.details = std::move(ck.lines);
  return r;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& opts) {
  auto chosen = select_criteria(opts.only);
  std::vector<CriterionResult> results(chosen.size());
  const int jobs = std::max(1, std::min<int>(opts.jobs, static_cast<int>(chosen.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < chosen.size(); i = next++) results[i] = run_criterion(chosen[i], opts.hooks);
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return results;
}

std::string format_result(const CriterionResult& r, bool with_timing) {
  std::ostringstream os;
  os << (r.pass ? "[PASS] " : "[FAIL] ") << r.info.id << " " << r.info.key << ": " << r.info.title << " (";
  if (with_timing) os << std::fixed << std::setprecision(2) << r.seconds << " s, ";
  os << "budget " << std::fixed << std::setprecision(0) << r.info.budget_seconds << " s)";
  for (const auto& d : r.details) os << "\n    " << d;
  return os.str();
}

}  // namespace hatlab
