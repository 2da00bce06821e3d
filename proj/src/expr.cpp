#include "hatlab/expr.hpp"

#include <algorithm>
#include <unordered_set>

namespace hatlab {

GameExpr clique_leaf(std::vector<std::string> vertices, std::vector<Count> h, std::vector<Count> g) {
  return std::make_shared<const ExprNode>(ExprNode{CliqueLeaf{std::move(vertices), std::move(h), std::move(g)}});
}

GameExpr sum_expr(GameExpr left, std::vector<std::string> S, GameExpr right, std::string v) {
  return std::make_shared<const ExprNode>(ExprNode{SumExpr{std::move(left), std::move(S), std::move(right), std::move(v)}});
}

GameExpr product_expr(GameExpr left, std::string a_left, GameExpr right, std::string a_right) {
  return std::make_shared<const ExprNode>(
      ExprNode{ProductExpr{std::move(left), std::move(a_left), std::move(right), std::move(a_right)}});
}

GameExpr substitute_expr(CliqueLeaf inner, GameExpr outer, std::string at) {
  return std::make_shared<const ExprNode>(ExprNode{SubstituteExpr{std::move(inner), std::move(outer), std::move(at)}});
}

GameExpr sum_lose_expr(GameExpr left, std::string a_left, GameExpr right, std::string a_right) {
  return std::make_shared<const ExprNode>(
      ExprNode{SumLoseExpr{std::move(left), std::move(a_left), std::move(right), std::move(a_right)}});
}

GameExpr pendant_lose_expr(GameExpr base, std::string b, std::string new_leaf) {
  return std::make_shared<const ExprNode>(ExprNode{PendantLoseExpr{std::move(base), std::move(b), std::move(new_leaf)}});
}

std::string status_name(Status s) {
  switch (s) {
    case Status::Winning: return "winning";
    case Status::Losing: return "losing";
    case Status::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

struct Eval {
  Certificate cert;
  bool sums_only = true;  // no losing-rule nodes
  std::string bad_leaf;   // first leaf that is not precise
};

std::string join_names(const std::vector<std::string>& names) {
  std::string s;
  for (const auto& n : names) s += (s.empty() ? "" : ",") + n;
  return "{" + s + "}";
}

std::string rat(const Rational& q) { return to_string(q); }

HatGame leaf_game(const CliqueLeaf& leaf) {
  if (leaf.vertices.empty()) throw ValidationError("clique leaf without vertices");
  if (leaf.h.size() != leaf.vertices.size()) throw ValidationError("clique leaf needs one hatness per vertex");
  if (!leaf.g.empty() && leaf.g.size() != leaf.vertices.size())
    throw ValidationError("clique leaf needs one guess count per vertex");
  return HatGame(Graph::complete(leaf.vertices), leaf.h, leaf.g);
}

Eval eval_leaf(const CliqueLeaf& leaf) {
  Eval out;
  out.cert.game = leaf_game(leaf);
  auto verdict = clique_criterion(out.cert.game);
  out.cert.status = verdict.winning ? Status::Winning : Status::Losing;
  out.cert.precise_bricks = verdict.precise;
  out.cert.maximal = verdict.precise;
  if (!verdict.precise) {
    std::string desc = "K" + std::to_string(leaf.vertices.size()) + "(";
    for (std::size_t i = 0; i < leaf.h.size(); ++i) desc += (i ? "," : "") + std::to_string(leaf.h[i]);
    out.bad_leaf = desc + ") on " + join_names(leaf.vertices);
  }
  out.cert.derivation = {"clique criterion",
                         "K" + std::to_string(leaf.vertices.size()) + " " + join_names(leaf.vertices) +
                             ": sum g/h = " + rat(verdict.sum) + (verdict.precise ? " (precise)" : ""),
                         {}};
  return out;
}

Eval evaluate(const GameExpr& e);

// Shared bookkeeping of the three winning constructors.
Eval combine_sum(Eval l, Eval r, HatGame game, std::string rule, std::string note) {
  Eval out;
  out.cert.game = std::move(game);
  const bool win = l.cert.status == Status::Winning && r.cert.status == Status::Winning;
  out.cert.status = win ? Status::Winning : Status::Unknown;
  out.cert.precise_bricks = l.cert.precise_bricks && r.cert.precise_bricks;
  out.cert.maximal = l.cert.maximal && r.cert.maximal;
  out.sums_only = l.sums_only && r.sums_only;
  out.bad_leaf = !l.bad_leaf.empty() ? l.bad_leaf : r.bad_leaf;
  if (!win) {
    rule = "unknown composition";
    note += "; an operand is not known to be winning";
  }
  out.cert.derivation = {std::move(rule), std::move(note), {std::move(l.cert.derivation), std::move(r.cert.derivation)}};
  return out;
}

void require_losing_classic(const Certificate& c, const std::string& what) {
  if (c.status != Status::Losing)
    throw RuleError(what + " must be losing (status is " + status_name(c.status) + ")");
  if (!c.game.is_classic()) throw RuleError(what + " must be a classic game (g == 1)");
}

Eval eval_node(const SumExpr& n) {
  Eval l = evaluate(n.left), r = evaluate(n.right);
  std::vector<int> S;
  for (const auto& s : n.S) S.push_back(l.cert.game.graph().index(s));
  const int v = r.cert.game.graph().index(n.v);
  HatGame game = sum_games(l.cert.game, S, r.cert.game, v);
  std::string note = "S = " + join_names(n.S) + ", v = " + n.v + ", h(s) = h1(s)*" + std::to_string(r.cert.game.h(v));
  return combine_sum(std::move(l), std::move(r), std::move(game), "sum of winning games", std::move(note));
}

Eval eval_node(const ProductExpr& n) {
  Eval l = evaluate(n.left), r = evaluate(n.right);
  const int a1 = l.cert.game.graph().index(n.a_left), a2 = r.cert.game.graph().index(n.a_right);
  HatGame game = product_games(l.cert.game, a1, r.cert.game, a2);
  std::string note = n.a_left + " x " + n.a_right + ": h = " + std::to_string(l.cert.game.h(a1)) + "*" +
                     std::to_string(r.cert.game.h(a2)) + " = " + std::to_string(game.h(a1));
  return combine_sum(std::move(l), std::move(r), std::move(game), "product of winning games", std::move(note));
}

Eval eval_node(const SubstituteExpr& n) {
  Eval inner = eval_leaf(n.inner), outer = evaluate(n.outer);
  const int at = outer.cert.game.graph().index(n.at);
  HatGame game = substitute_games(inner.cert.game, outer.cert.game, at);
  std::string note = join_names(n.inner.vertices) + " in place of " + n.at + ", inner h scaled by " +
                     std::to_string(outer.cert.game.h(at));
  return combine_sum(std::move(inner), std::move(outer), std::move(game), "substitution of a clique game",
                     std::move(note));
}

Eval eval_node(const SumLoseExpr& n) {
  Eval l = evaluate(n.left), r = evaluate(n.right);
  require_losing_classic(l.cert, "left operand");
  require_losing_classic(r.cert, "right operand");
  const auto& g1 = l.cert.game;
  const auto& g2 = r.cert.game;
  const int a1 = g1.graph().index(n.a_left), a2 = g2.graph().index(n.a_right);
  if (g2.h(a2) != 2)
    throw RuleError("losing sum needs h2(A) = 2, got h2(" + n.a_right + ") = " + std::to_string(g2.h(a2)));
  if (g1.h(a1) < 2)
    throw RuleError("losing sum needs h1(A) >= h2(A) = 2, got h1(" + n.a_left + ") = " + std::to_string(g1.h(a1)));
  const int clique[] = {a1};
  Composition comp = clique_join(g1.graph(), clique, g2.graph(), a2);
  std::vector<Count> h(comp.graph.size());
  for (std::size_t i = 0; i < g1.size(); ++i) h[static_cast<std::size_t>(comp.left_map[i])] = g1.h(static_cast<int>(i));
  for (std::size_t i = 0; i < g2.size(); ++i)
    if (comp.right_map[i] >= 0) h[static_cast<std::size_t>(comp.right_map[i])] = g2.h(static_cast<int>(i));
  Eval out;
  out.cert.game = HatGame(std::move(comp.graph), std::move(h));
  out.cert.status = Status::Losing;
  out.cert.precise_bricks = l.cert.precise_bricks && r.cert.precise_bricks;
  out.sums_only = false;
  out.bad_leaf = !l.bad_leaf.empty() ? l.bad_leaf : r.bad_leaf;
  out.cert.derivation = {"losing sum at a vertex",
                         n.a_left + " = " + n.a_right + ", h1(A) = " + std::to_string(g1.h(a1)) +
                             " >= h2(A) = 2, glued vertex keeps h1(A)",
                         {std::move(l.cert.derivation), std::move(r.cert.derivation)}};
  return out;
}

Eval eval_node(const PendantLoseExpr& n) {
  Eval base = evaluate(n.base);
  require_losing_classic(base.cert, "base game");
  const auto& g = base.cert.game;
  const int b = g.graph().index(n.b);
  if (n.new_leaf.empty() || g.graph().find(n.new_leaf))
    throw ValidationError("pendant vertex name '" + n.new_leaf + "' is empty or already used");
  auto names = g.graph().names();
  auto edges = g.graph().edges();
  names.push_back(n.new_leaf);
  edges.emplace_back(b, static_cast<int>(names.size()) - 1);
  std::vector<Count> h = g.hatness();
  h[static_cast<std::size_t>(b)] = 2 * h[static_cast<std::size_t>(b)] - 1;
  h.push_back(2);
  Eval out;
  out.cert.game = HatGame(Graph::from_indices(std::move(names), edges), std::move(h));
  out.cert.status = Status::Losing;
  out.cert.precise_bricks = base.cert.precise_bricks;
  out.sums_only = false;
  out.bad_leaf = base.bad_leaf;
  out.cert.derivation = {"pendant vertex attachment",
                         n.new_leaf + " attached to " + n.b + " with h = 2, h'(" + n.b + ") = 2*" +
                             std::to_string(g.h(b)) + "-1 = " + std::to_string(2 * g.h(b) - 1),
                         {std::move(base.cert.derivation)}};
  return out;
}

Eval eval_node(const CliqueLeaf& leaf) { return eval_leaf(leaf); }

Eval evaluate(const GameExpr& e) {
  if (!e) throw ValidationError("empty expression");
  return std::visit([](const auto& n) { return eval_node(n); }, e->node);
}

Conclusion hg_from(const Eval& ev) {
  const auto& c = ev.cert;
  if (!ev.sums_only) return {std::nullopt, "not applicable: expression uses a losing-rule node"};
  if (!c.precise_bricks) return {std::nullopt, "not applicable: leaf " + ev.bad_leaf + " is not precise"};
  if (!c.game.is_classic()) return {std::nullopt, "not applicable: guesses are not all 1"};
  auto h = c.game.constant_hatness();
  if (!h) return {std::nullopt, "not applicable: hatness is not constant"};
  return {Rational(*h), "maximal winning game from sums of precise cliques with h == " + std::to_string(*h) +
                            ", so HG = " + std::to_string(*h)};
}

Conclusion muhat_from(const Eval& ev) {
  const auto& c = ev.cert;
  if (!ev.sums_only) return {std::nullopt, "not applicable: expression uses a losing-rule node"};
  if (!c.precise_bricks) return {std::nullopt, "not applicable: leaf " + ev.bad_leaf + " is not precise"};
  auto ratio = c.game.constant_ratio();
  if (!ratio) return {std::nullopt, "not applicable: h/g is not constant"};
  return {*ratio, "maximal game from sums of precise cliques with h/g == " + rat(*ratio) + ", so mu-hat = " +
                      rat(*ratio)};
}

}  // namespace

Certificate eval_expr(const GameExpr& e) {
  Eval ev = evaluate(e);
  auto hg = hg_from(ev);
  auto mu = muhat_from(ev);
  ev.cert.hg_claim = hg.value;
  ev.cert.muhat_claim = mu.value;
  if (hg.value) ev.cert.derivation = {"HG of a maximal winning game", hg.reason, {std::move(ev.cert.derivation)}};
  else if (mu.value) ev.cert.derivation = {"mu-hat of a maximal game", mu.reason, {std::move(ev.cert.derivation)}};
  return std::move(ev.cert);
}

Conclusion conclude_hg(const GameExpr& e) { return hg_from(evaluate(e)); }

Conclusion conclude_muhat(const GameExpr& e) { return muhat_from(evaluate(e)); }

Rational e_lower_bound() { return make_rational(2718281828, 1000000000); }

bool e_degree_bound_holds(const Rational& hg, int max_degree) {
  // Edgeless graphs have HG = 1 and fall outside the bound.
  if (max_degree == 0) return hg == 1;
  return hg < e_lower_bound() * max_degree;
}

std::size_t expr_size(const GameExpr& e) {
  if (!e) return 0;
  struct V {
    std::size_t operator()(const CliqueLeaf&) const { return 1; }
    std::size_t operator()(const SumExpr& n) const { return 1 + expr_size(n.left) + expr_size(n.right); }
    std::size_t operator()(const ProductExpr& n) const { return 1 + expr_size(n.left) + expr_size(n.right); }
    std::size_t operator()(const SubstituteExpr& n) const { return 2 + expr_size(n.outer); }
    std::size_t operator()(const SumLoseExpr& n) const { return 1 + expr_size(n.left) + expr_size(n.right); }
    std::size_t operator()(const PendantLoseExpr& n) const { return 1 + expr_size(n.base); }
  };
  return std::visit(V{}, e->node);
}

}  // namespace hatlab
