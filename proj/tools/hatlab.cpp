// hatlab command-line interface. Every command prints canonical JSON on
// stdout except export (DOT) and verify-paper (text report).
//
// Exit codes: 0 computation completed, 1 failed suite criterion,
// 2 invalid input, 3 size guard exceeded.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hatlab/certify.hpp"
#include "hatlab/expr.hpp"
#include "hatlab/gallery.hpp"
#include "hatlab/indpoly.hpp"
#include "hatlab/io.hpp"
#include "hatlab/roots.hpp"
#include "hatlab/solver.hpp"
#include "hatlab/suite.hpp"

using namespace hatlab;

namespace {

// A file holds a graph, a game, or an expression (which also yields a game).
struct Input {
  Graph graph;
  std::optional<HatGame> game;
  GameExpr expr;
};

Input load_input(const std::string& path) {
  Json j = read_json_file(path);
  Input in;
  if (looks_like_expr(j)) {
    in.expr = expr_from_json(j);
    in.game = eval_expr(in.expr).game;
    in.graph = in.game->graph();
  } else if (j.is_object() && j.contains("hatness")) {
    in.game = game_from_json(j);
    in.graph = in.game->graph();
  } else {
    in.graph = graph_from_json(j);
  }
  return in;
}

HatGame require_game(const Input& in, const std::string& path) {
  if (!in.game) throw ValidationError(path + ": a game (with \"hatness\") or an expression is required");
  return *in.game;
}

void print(const Json& j) { std::cout << canonical_dump(j); }

Json conclusion_json(const Conclusion& c) {
  Json j{{"reason", c.reason}};
  if (c.value) j["value"] = rational_json(*c.value);
  return j;
}

Json integer_list(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : integer_coefficients(p)) out.push_back(c.get_str());
  return out;
}

Json interval_json(const std::optional<IsolatingInterval>& iv) {
  if (!iv) return nullptr;
  Json j{{"lower", rational_json(iv->lower)}, {"upper", rational_json(iv->upper)}};
  if (iv->exact_root) j["exact"] = rational_json(*iv->exact_root);
  return j;
}

// --- build ----------------------------------------------------------------

struct BuildArgs {
  std::string name;
  std::optional<int> n, k, l;
  std::string variant = "standard";
  std::string out, expr_out, generalized_out;
};

int cmd_build(const BuildArgs& a) {
  GalleryParams p;
  p.n = a.n;
  p.k = a.k;
  p.l = a.l;
  p.variant = parse_chain_variant(a.variant);
  auto b = build_by_name(a.name, p);

  Json payload = b.game ? game_to_json(*b.game) : graph_to_json(b.graph);
  if (!a.expr_out.empty()) {
    if (!b.expr) throw ValidationError(a.name + " has no constructor expression");
    write_text_file(a.expr_out, canonical_dump(expr_to_json(b.expr)));
  }
  if (!a.generalized_out.empty()) {
    if (!b.generalized) throw ValidationError(a.name + " has no generalized expression for these parameters");
    write_text_file(a.generalized_out, canonical_dump(expr_to_json(b.generalized)));
  }
  if (a.out.empty()) {
    print(payload);
    return 0;
  }
  write_text_file(a.out, canonical_dump(payload));
  auto st = stats(b.graph);
  Json summary{{"name", b.name},
               {"vertices", b.graph.size()},
               {"edges", b.graph.edge_count()},
               {"max_degree", st.max_degree},
               {"has_game", b.game.has_value()},
               {"has_expr", static_cast<bool>(b.expr)}};
  if (!b.info.empty()) summary["info"] = b.info;
  print(summary);
  return 0;
}

// --- solve ----------------------------------------------------------------

struct SolveArgs {
  std::string file, strategy_out;
  std::optional<std::uint64_t> max_conflicts;
  std::optional<long> timeout_ms;
};

int cmd_solve(const SolveArgs& a) {
  auto game = require_game(load_input(a.file), a.file);
  SolverLimits limits;
  limits.max_conflicts = a.max_conflicts;
  if (a.timeout_ms) limits.timeout = std::chrono::milliseconds(*a.timeout_ms);
  auto v = decide_game(game, limits);
  Json j = verdict_json(game, v);
  if (!a.strategy_out.empty()) {
    j["strategy_written"] = v.strategy.has_value();
    if (v.strategy) write_text_file(a.strategy_out, canonical_dump(strategy_to_json(game, *v.strategy)));
  }
  print(j);
  return 0;
}

// --- certify --------------------------------------------------------------

int cmd_certify(const std::string& mode, const std::string& file, std::optional<int> cutoff) {
  auto in = load_input(file);
  if (mode == "maximal") {
    if (in.expr) {
      print(maximality_json(check_maximal_compositional(in.expr)));
    } else {
      print(maximality_json(check_maximal_direct(require_game(in, file), cutoff)));
    }
  } else if (mode == "losing") {
    print(losing_json(losing_by_Z_positive(require_game(in, file))));
  } else {
    if (!in.expr) throw ValidationError(file + ": 'certify expr' needs a constructor expression");
    Json j = certificate_json(eval_expr(in.expr));
    j["hg"] = conclusion_json(conclude_hg(in.expr));
    j["mu_hat"] = conclusion_json(conclude_muhat(in.expr));
    print(j);
  }
  return 0;
}

// --- indpoly / muhat --------------------------------------------------------

int cmd_indpoly(const std::string& file, const std::optional<std::string>& at) {
  auto in = load_input(file);
  Json j{{"P", poly_json(univariate_P(in.graph))}, {"U", poly_json(univariate_U(in.graph))}};
  if (in.game) j["Z_at_r"] = rational_json(eval_Z(in.graph, fraction_vector(*in.game)));
  if (at) {
    Rational x = parse_rational(*at);
    j["at"] = rational_json(x);
    j["Z_at"] = rational_json(eval_Z_uniform(in.graph, x));
  }
  print(j);
  return 0;
}

int cmd_muhat(const std::string& file, const std::optional<std::string>& candidate) {
  auto in = load_input(file);
  std::optional<Rational> c;
  if (candidate) c = parse_rational(*candidate);
  print(muhat_json(in.graph, mu_hat_chordal(in.graph, c)));
  return 0;
}

// --- roots ------------------------------------------------------------------

int cmd_roots(const std::string& fam, int n, const std::vector<std::string>& interval) {
  if (n < 0) throw ValidationError("--n must be non-negative");
  auto tag = parse_family(fam);
  Poly p = family(tag, n);
  // The positive-root search needs p(0) != 0; divide out the power of x.
  int zero_mult = 0;
  while (!p.is_zero() && p.coeff(zero_mult) == 0) ++zero_mult;
  Json j{{"family", family_name(tag)},
         {"n", n},
         {"degree", p.degree()},
         {"coefficients", integer_list(p)},
         {"zero_root_multiplicity", zero_mult},
         {"smallest_positive_root", nullptr}};
  if (!p.is_zero()) {
    Poly q(std::vector<Rational>(p.coeffs().begin() + zero_mult, p.coeffs().end()));
    if (q.degree() > 0) j["smallest_positive_root"] = interval_json(smallest_positive_root(q).root);
  }
  if (!interval.empty()) {
    if (interval.size() != 2) throw ValidationError("--interval takes two bounds");
    Rational lo = parse_rational(interval[0]), hi = parse_rational(interval[1]);
    if (lo > hi) throw ValidationError("--interval bounds are reversed");
    j["interval"] = {{"lower", rational_json(lo)},
                     {"upper", rational_json(hi)},
                     {"distinct_roots_inside", sturm_count(p, lo, hi)},
                     {"distinct_real_roots", sturm_count(p, std::nullopt, std::nullopt)},
                     {"all_roots_inside", verify_root_interval(tag, n, lo, hi)}};
  }
  print(j);
  return 0;
}

// --- stats / export -----------------------------------------------------------

int cmd_stats(const std::string& file) {
  auto in = load_input(file);
  const auto& g = in.graph;
  auto st = stats(g);
  Json degrees = Json::object();
  for (std::size_t v = 0; v < g.size(); ++v) degrees[g.name(static_cast<int>(v))] = st.degree[v];
  Json j{{"vertices", g.size()},
         {"edges", g.edge_count()},
         {"max_degree", st.max_degree},
         {"degrees", degrees},
         {"connected", st.connected},
         {"chordal", is_chordal(g)},
         {"complete", g.is_complete()}};
  if (st.diameter) j["diameter"] = *st.diameter;
  if (in.game) {
    const auto& game = *in.game;
    j["classic"] = game.is_classic();
    if (auto h = game.constant_hatness()) j["constant_hatness"] = *h;
    if (auto r = game.constant_ratio()) j["constant_ratio"] = rational_json(*r);
    if (g.is_complete()) {
      auto c = clique_criterion(game);
      j["clique_criterion"] = {{"sum", rational_json(c.sum)}, {"winning", c.winning}, {"precise", c.precise}};
    }
  }
  if (in.expr) j["expr_nodes"] = expr_size(in.expr);
  print(j);
  return 0;
}

int cmd_export(const std::string& file, const std::string& out) {
  auto in = load_input(file);
  std::string dot = in.game ? to_dot(*in.game) : to_dot(in.graph);
  if (out.empty()) {
    std::cout << dot;
  } else {
    write_text_file(out, dot);
  }
  return 0;
}

// --- verify-paper -----------------------------------------------------------

int cmd_verify(const std::vector<std::string>& only, int jobs, bool timings) {
  SuiteOptions opts;
  opts.only = only;
  opts.jobs = jobs;
  auto results = run_suite(opts);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << format_result(r, timings) << "\n";
    failed += !r.pass;
  }
  if (failed == 0) {
    std::cout << "all " << results.size() << " criteria passed\n";
    return 0;
  }
  std::cout << failed << " of " << results.size() << " criteria failed\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact workbench for hat-guessing games on graphs"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* c_build = app.add_subcommand("build", "Build a gallery construction");
  c_build->add_option("name", build.name, "Construction name")->required()->check(CLI::IsMember(gallery_names()));
  c_build->add_option("--n", build.n, "Size parameter");
  c_build->add_option("--k", build.k, "Family parameter");
  c_build->add_option("--l", build.l, "Chain hatness");
  c_build->add_option("--variant", build.variant, "Chain variant: standard, tilde, minus");
  c_build->add_option("-o,--output", build.out, "Game (or graph) JSON file; stdout when omitted");
  c_build->add_option("--expr", build.expr_out, "Write the constructor expression");
  c_build->add_option("--generalized", build.generalized_out, "Write the generalized chain expression");

  SolveArgs solve;
  auto* c_solve = app.add_subcommand("solve", "Decide a game exactly");
  c_solve->add_option("game", solve.file, "Game or expression JSON")->required();
  c_solve->add_option("--emit-strategy", solve.strategy_out, "Write the winning strategy");
  c_solve->add_option("--max-conflicts", solve.max_conflicts, "Conflict budget; Unknown when exhausted");
  c_solve->add_option("--timeout-ms", solve.timeout_ms, "Wall-clock budget; Unknown when exhausted");

  std::string cert_mode, cert_file;
  std::optional<int> cutoff;
  auto* c_cert = app.add_subcommand("certify", "Maximality, losing or expression certificate");
  c_cert->add_option("mode", cert_mode, "maximal, losing or expr")
      ->required()
      ->check(CLI::IsMember({"maximal", "losing", "expr"}));
  c_cert->add_option("file", cert_file, "Game or expression JSON")->required();
  c_cert->add_option("--cutoff", cutoff, "Largest game for the corner sweep");

  std::string ip_file;
  std::optional<std::string> ip_at;
  auto* c_ip = app.add_subcommand("indpoly", "Independence polynomials P, U and Z");
  c_ip->add_option("file", ip_file, "Graph, game or expression JSON")->required();
  c_ip->add_option("--at", ip_at, "Also evaluate Z with every variable equal to this rational");

  std::string mu_file;
  std::optional<std::string> mu_candidate;
  auto* c_mu = app.add_subcommand("muhat", "Fractional hat chromatic number of a chordal graph");
  c_mu->add_option("file", mu_file, "Graph, game or expression JSON")->required();
  c_mu->add_option("--candidate", mu_candidate, "Root to confirm exactly, e.g. 1/8");

  std::string fam = "A";
  int fam_n = 0;
  std::vector<std::string> interval;
  auto* c_roots = app.add_subcommand("roots", "Polynomial families and their real roots");
  c_roots->add_option("--family", fam, "A, B, L, Phi or E")->required();
  c_roots->add_option("--n", fam_n, "Index")->required();
  c_roots->add_option("--interval", interval, "Closed interval lo hi")->expected(2)->allow_extra_args(false);

  std::string st_file;
  auto* c_stats = app.add_subcommand("stats", "Graph and game statistics");
  c_stats->add_option("file", st_file, "Graph, game or expression JSON")->required();

  std::string ex_file, ex_out;
  auto* c_export = app.add_subcommand("export", "DOT export");
  c_export->add_option("file", ex_file, "Graph, game or expression JSON")->required();
  c_export->add_option("-o,--output", ex_out, "DOT file; stdout when omitted");

  std::vector<std::string> only;
  int jobs = 1;
  bool timings = false;
  auto* c_verify = app.add_subcommand("verify-paper", "Run the reproduction suite");
  c_verify->add_option("--only", only, "Criterion numbers, keys or groups")->delimiter(',');
  c_verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
  c_verify->add_flag("--timings", timings, "Print wall-clock times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*c_build) return cmd_build(build);
    if (*c_solve) return cmd_solve(solve);
    if (*c_cert) return cmd_certify(cert_mode, cert_file, cutoff);
    if (*c_ip) return cmd_indpoly(ip_file, ip_at);
    if (*c_mu) return cmd_muhat(mu_file, mu_candidate);
    if (*c_roots) return cmd_roots(fam, fam_n, interval);
    if (*c_stats) return cmd_stats(st_file);
    if (*c_export) return cmd_export(ex_file, ex_out);
    if (*c_verify) return cmd_verify(only, jobs, timings);
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
