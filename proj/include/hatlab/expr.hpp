#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hatlab/game.hpp"
#include "hatlab/graph.hpp"
#include "hatlab/rational.hpp"

namespace hatlab {

struct ExprNode;
using GameExpr = std::shared_ptr<const ExprNode>;

/// Game on a complete graph.
struct CliqueLeaf {
  std::vector<std::string> vertices;
  std::vector<Count> h;
  std::vector<Count> g;  // empty means g == 1
};

/// (S,v)-sum: S is a clique of the left result, v a vertex of the right one.
struct SumExpr {
  GameExpr left;
  std::vector<std::string> S;
  GameExpr right;
  std::string v;
};

/// Product: a_left and a_right are identified, hatnesses multiply.
struct ProductExpr {
  GameExpr left;
  std::string a_left;
  GameExpr right;
  std::string a_right;
};

/// Complete-graph game substituted for `at`.
struct SubstituteExpr {
  CliqueLeaf inner;
  GameExpr outer;
  std::string at;
};

/// Vertex gluing of two losing classic games with h1(A) >= h2(A) = 2; the
/// glued vertex keeps h1(A).
struct SumLoseExpr {
  GameExpr left;
  std::string a_left;
  GameExpr right;
  std::string a_right;
};

/// New leaf with h = 2 attached to B of a losing classic game;
/// h'(B) = 2h(B) - 1.
struct PendantLoseExpr {
  GameExpr base;
  std::string b;
  std::string new_leaf;
};

struct ExprNode {
  std::variant<CliqueLeaf, SumExpr, ProductExpr, SubstituteExpr, SumLoseExpr, PendantLoseExpr> node;
};

GameExpr clique_leaf(std::vector<std::string> vertices, std::vector<Count> h, std::vector<Count> g = {});
GameExpr sum_expr(GameExpr left, std::vector<std::string> S, GameExpr right, std::string v);
GameExpr product_expr(GameExpr left, std::string a_left, GameExpr right, std::string a_right);
GameExpr substitute_expr(CliqueLeaf inner, GameExpr outer, std::string at);
GameExpr sum_lose_expr(GameExpr left, std::string a_left, GameExpr right, std::string a_right);
GameExpr pendant_lose_expr(GameExpr base, std::string b, std::string new_leaf);

/// A rule hypothesis does not hold; the message names it.
class RuleError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

enum class Status { Winning, Losing, Unknown };
std::string status_name(Status s);

struct Derivation {
  std::string rule;
  std::string note;
  std::vector<Derivation> children;
};

struct Certificate {
  HatGame game;
  Status status = Status::Unknown;
  /// Every leaf is a precise clique game.
  bool precise_bricks = false;
  /// Maximality follows from precise leaves combined by sums only.
  bool maximal = false;
  Derivation derivation;
  std::optional<Rational> hg_claim;
  std::optional<Rational> muhat_claim;
};

/// Builds the game and derives its status. Fills hg_claim / muhat_claim when
/// conclude_hg / conclude_muhat apply. Throws RuleError when a losing rule's
/// hypothesis fails and ValidationError on malformed operands.
Certificate eval_expr(const GameExpr& e);

struct Conclusion {
  std::optional<Rational> value;
  /// Why the rule does not apply, or the justification when it does.
  std::string reason;
};

/// HG(G) = h for a constant-hatness classic game obtained by sums of precise
/// winning cliques.
Conclusion conclude_hg(const GameExpr& e);
/// mu-hat(G) = h0 for a game obtained by sums of precise winning cliques with
/// h/g == h0.
Conclusion conclude_muhat(const GameExpr& e);

/// 2.718281828 < e, so hg < that * max_degree proves hg < e * max_degree.
/// For max_degree = 0 the only admissible value is hg = 1.
Rational e_lower_bound();
bool e_degree_bound_holds(const Rational& hg, int max_degree);

/// Number of nodes and leaves, for reports.
std::size_t expr_size(const GameExpr& e);

}  // namespace hatlab
