#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "hatlab/certify.hpp"
#include "hatlab/expr.hpp"
#include "hatlab/game.hpp"
#include "hatlab/graph.hpp"
#include "hatlab/polynomial.hpp"
#include "hatlab/solver.hpp"

namespace hatlab {

/// std::map-backed, so keys come out sorted.
using Json = nlohmann::json;

/// Schema violation; the message starts with the JSON pointer of the
/// offending value, e.g. "/hatness/x: not a vertex".
class SchemaError : public ValidationError {
 public:
  SchemaError(const std::string& pointer, const std::string& what);
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

/// Sorted keys, two-space indent, trailing LF.
std::string canonical_dump(const Json& j);
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// {"vertices": [...], "edges": [["a","b"], ...]}, edges in vertex order.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// Graph fields plus "hatness" and, when some g > 1, "guesses".
Json game_to_json(const HatGame& game);
/// Missing guesses default to 1.
HatGame game_from_json(const Json& j);

HatGame load_game(const std::filesystem::path& path);
void save_game(const HatGame& game, const std::filesystem::path& path);

/// {"op": "clique" | "sum" | "product" | "substitute" | "sum_lose" |
/// "pendant_lose", ...}. Operands in "left"/"right", "base", "inner"/"outer";
/// vertices in "S", "v", "A" (left glue vertex or the pendant anchor), "B"
/// (right glue vertex), "at". A pendant_lose node names its new leaf in "v".
Json expr_to_json(const GameExpr& e);
GameExpr expr_from_json(const Json& j);
/// True when the object carries an "op" field.
bool looks_like_expr(const Json& j);

/// {"<vertex>": {"<c1>,<c2>,...": [guesses]}}: neighbor colors in ascending
/// neighbor order; the empty key for a sage without neighbors.
Json strategy_to_json(const HatGame& game, const Strategy& s);
Strategy strategy_from_json(const HatGame& game, const Json& j);

/// Exact values as strings ("p/q" or "p").
Json rational_json(const Rational& q);
Json poly_json(const Poly& p);
Json derivation_json(const Derivation& d);
Json certificate_json(const Certificate& c);
Json maximality_json(const MaximalityCertificate& m);
Json losing_json(const LosingCertificate& l);
Json muhat_json(const Graph& g, const MuHatResult& m);
Json verdict_json(const HatGame& game, const GameVerdict& v);

/// Undirected DOT; with a game, labels "name\nh=<h>" plus ",g=<g>" when
/// g > 1.
std::string to_dot(const Graph& g);
std::string to_dot(const HatGame& game);

}  // namespace hatlab
