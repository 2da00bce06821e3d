#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hatlab/gallery.hpp"
#include "hatlab/io.hpp"
#include "oracles.hpp"

using hatlab::Json;

namespace {

std::string pointer_of(const Json& j) {
  try {
    hatlab::game_from_json(j);
  } catch (const hatlab::SchemaError& e) {
    return e.pointer();
  }
  return "<none>";
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("hatlab_io_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int count_substr(const std::string& s, const std::string& what) {
  int n = 0;
  for (auto pos = s.find(what); pos != std::string::npos; pos = s.find(what, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("minimal game file") {
  auto j = Json::parse(R"({"vertices":["a","b"],"edges":[["a","b"]],"hatness":{"a":2,"b":2}})");
  auto game = hatlab::game_from_json(j);
  CHECK(game.size() == 2);
  CHECK(game.graph().edge_count() == 1);
  CHECK(game.g(0) == 1);
  CHECK(game.g(1) == 1);
  CHECK(game.h(1) == 2);
}

TEST_CASE("schema errors carry JSON pointers") {
  auto base = Json::parse(R"({"vertices":["a","b"],"edges":[["a","b"]],"hatness":{"a":2,"b":2}})");
  auto j = base;
  j["hatness"]["x"] = 3;
  CHECK(pointer_of(j) == "/hatness/x");
  try {
    hatlab::game_from_json(j);
  } catch (const hatlab::SchemaError& e) {
    CHECK(std::string(e.what()).rfind("/hatness/x", 0) == 0);
  }

  j = base;
  j["hatness"].erase("b");
  CHECK(pointer_of(j) == "/hatness/b");
  j = base;
  j["hatness"]["a"] = 0;
  CHECK(pointer_of(j) == "/hatness/a");
  j = base;
  j["hatness"]["a"] = "two";
  CHECK(pointer_of(j) == "/hatness/a");
  j = base;
  j["edges"][0][1] = "z";
  CHECK(pointer_of(j) == "/edges/0/1");
  j = base;
  j["edges"].push_back({"a", "a"});
  CHECK(pointer_of(j) == "/edges/1");
  j = base;
  j["vertices"].push_back("a");
  CHECK(pointer_of(j) == "/vertices/2");
  j = base;
  j.erase("hatness");
  CHECK(pointer_of(j) == "/hatness");
  j = base;
  j["guesses"] = {{"R/a~", 2}};
  CHECK(pointer_of(j) == "/guesses/R~1a~0");
  CHECK(pointer_of(Json::array()).empty());
}

TEST_CASE("game round trip is byte identical") {
  auto chain = hatlab::build_chain(2, 4, hatlab::ChainVariant::Standard);
  auto game = hatlab::uniform_game(chain.graph, 4);
  auto p = temp_file("h24.json");
  hatlab::save_game(game, p);
  auto loaded = hatlab::load_game(p);
  CHECK(loaded == game);
  auto first = slurp(p);
  hatlab::save_game(loaded, p);
  CHECK(slurp(p) == first);
  CHECK(first.back() == '\n');
  CHECK(first.find("\"edges\"") < first.find("\"hatness\""));
  CHECK(first.find("\"hatness\"") < first.find("\"vertices\""));
  CHECK(first.find("guesses") == std::string::npos);

  auto gen = hatlab::build_chain(2, 5, hatlab::ChainVariant::Standard).generalized;
  REQUIRE(gen);
  auto gj = hatlab::game_to_json(gen->game);
  CHECK(gj.contains("guesses"));
  CHECK(hatlab::game_from_json(gj) == gen->game);
  CHECK(hatlab::canonical_dump(hatlab::game_to_json(hatlab::game_from_json(gj))) == hatlab::canonical_dump(gj));
  std::filesystem::remove(p);
}

TEST_CASE("expression round trip") {
  std::vector<hatlab::GameExpr> exprs{hatlab::build_delta6_hg8().expr, hatlab::build_delta_plus_k(3).built.expr,
                                      hatlab::build_chain(3, 5, hatlab::ChainVariant::Standard).losing->expr,
                                      hatlab::build_chain(3, 5, hatlab::ChainVariant::Standard).generalized->expr};
  auto sum = hatlab::sum_expr(hatlab::clique_leaf({"a", "b", "c"}, {3, 3, 3}), {"a", "b"},
                              hatlab::clique_leaf({"v", "w"}, {2, 2}), "v");
  exprs.push_back(sum);
  for (const auto& e : exprs) {
    Json j = hatlab::expr_to_json(e);
    CHECK(hatlab::looks_like_expr(j));
    auto back = hatlab::expr_from_json(j);
    CHECK(hatlab::expr_to_json(back) == j);
    CHECK(hatlab::eval_expr(back).game == hatlab::eval_expr(e).game);
  }
  Json bad = hatlab::expr_to_json(sum);
  bad["left"]["op"] = "join";
  try {
    hatlab::expr_from_json(bad);
    CHECK(false);
  } catch (const hatlab::SchemaError& e) {
    CHECK(e.pointer() == "/left/op");
  }
  bad = hatlab::expr_to_json(sum);
  bad.erase("v");
  CHECK_THROWS_AS(hatlab::expr_from_json(bad), hatlab::SchemaError);
}

TEST_CASE("strategy JSON") {
  auto game = hatlab::uniform_game(oracle::complete(2), 2);
  auto v = hatlab::decide_game(game);
  REQUIRE(v.strategy);
  Json j = hatlab::strategy_to_json(game, *v.strategy);
  CHECK(j.size() == 2);
  CHECK(j["v0"].contains("0"));
  CHECK(j["v0"].contains("1"));
  auto back = hatlab::strategy_from_json(game, j);
  CHECK(hatlab::verify_strategy(game, back).ok);

  // Copy strategy: both sages name the color they see.
  Json copy = {{"v0", {{"0", {0}}, {"1", {1}}}}, {"v1", {{"0", {0}}, {"1", {1}}}}};
  auto check = hatlab::verify_strategy(game, hatlab::strategy_from_json(game, copy));
  CHECK_FALSE(check.ok);

  Json partial = copy;
  partial["v1"].erase("1");
  CHECK_THROWS_AS(hatlab::strategy_from_json(game, partial), hatlab::SchemaError);
  Json odd = copy;
  odd["v1"]["7"] = {0};
  CHECK_THROWS_AS(hatlab::strategy_from_json(game, odd), hatlab::SchemaError);

  auto lone = hatlab::uniform_game(oracle::empty_graph(1), 1);
  auto lv = hatlab::decide_game(lone);
  REQUIRE(lv.strategy);
  CHECK(hatlab::strategy_to_json(lone, *lv.strategy)["v0"].contains(""));
}

TEST_CASE("DOT export") {
  auto k2 = hatlab::uniform_game(oracle::complete(2), 2);
  auto dot = hatlab::to_dot(k2);
  CHECK(count_substr(dot, "[label=") == 2);
  CHECK(count_substr(dot, " -- ") == 1);
  CHECK(dot.find("\"v0\\nh=2\"") != std::string::npos);

  auto d = hatlab::build_delta6_hg8();
  auto big = hatlab::to_dot(d.game);
  CHECK(count_substr(big, "[label=") == 31);
  CHECK(count_substr(big, "\\nh=8\"") == 31);
  CHECK(count_substr(big, " -- ") == static_cast<int>(d.game.graph().edge_count()));

  auto gen = hatlab::build_chain(2, 5, hatlab::ChainVariant::Standard).generalized;
  REQUIRE(gen);
  auto gdot = hatlab::to_dot(gen->game);
  CHECK(gdot.find(",g=2\"") != std::string::npos);

  auto plain = hatlab::to_dot(oracle::path(3));
  CHECK(count_substr(plain, " -- ") == 2);
  CHECK(plain.find("label") == std::string::npos);
}

TEST_CASE("exact values print as strings") {
  CHECK(hatlab::rational_json(hatlab::Rational(6, 4)) == "3/2");
  CHECK(hatlab::poly_json(hatlab::Poly{1, -8, 15}) == Json({"1", "-8", "15"}));
  auto cert = hatlab::eval_expr(hatlab::build_delta6_hg8().expr);
  auto cj = hatlab::certificate_json(cert);
  CHECK(cj["hg"] == "8");
  CHECK(cj["status"] == "winning");
}
