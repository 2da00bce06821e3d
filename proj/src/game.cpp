#include "hatlab/game.hpp"

#include <algorithm>

namespace hatlab {

HatGame::HatGame(Graph graph, std::vector<Count> hatness, std::vector<Count> guesses)
    : graph_(std::move(graph)), hatness_(std::move(hatness)), guesses_(std::move(guesses)) {
  if (hatness_.size() != graph_.size()) throw ValidationError("hatness must be defined on every vertex");
  if (guesses_.empty()) guesses_.assign(graph_.size(), 1);
  if (guesses_.size() != graph_.size()) throw ValidationError("guesses must be defined on every vertex");
  for (std::size_t i = 0; i < hatness_.size(); ++i) {
    if (hatness_[i] < 1) throw ValidationError("invalid hatness at " + graph_.names()[i]);
    if (guesses_[i] < 1) throw ValidationError("invalid guesses at " + graph_.names()[i]);
    guesses_[i] = std::min(guesses_[i], hatness_[i]);
  }
}

bool HatGame::is_classic() const {
  return std::all_of(guesses_.begin(), guesses_.end(), [](Count c) { return c == 1; });
}

std::optional<Count> HatGame::constant_hatness() const {
  if (hatness_.empty()) return std::nullopt;
  if (std::all_of(hatness_.begin(), hatness_.end(), [&](Count c) { return c == hatness_.front(); }))
    return hatness_.front();
  return std::nullopt;
}

std::optional<Rational> HatGame::constant_ratio() const {
  if (hatness_.empty()) return std::nullopt;
  Rational first = make_rational(hatness_[0], guesses_[0]);
  for (std::size_t i = 1; i < hatness_.size(); ++i)
    if (make_rational(hatness_[i], guesses_[i]) != first) return std::nullopt;
  return first;
}

HatGame make_game(Graph graph, const VertexMap& hatness, const VertexMap& guesses) {
  std::vector<Count> h(graph.size(), 0), g(graph.size(), 1);
  for (const auto& [name, value] : hatness) {
    auto i = graph.find(name);
    if (!i) throw ValidationError("hatness given for unknown vertex " + name);
    h[static_cast<std::size_t>(*i)] = value;
  }
  for (const auto& [name, value] : guesses) {
    auto i = graph.find(name);
    if (!i) throw ValidationError("guesses given for unknown vertex " + name);
    g[static_cast<std::size_t>(*i)] = value;
  }
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!hatness.count(graph.names()[i])) throw ValidationError("missing hatness for " + graph.names()[i]);
  return HatGame(std::move(graph), std::move(h), std::move(g));
}

HatGame uniform_game(Graph graph, Count h) {
  std::vector<Count> hv(graph.size(), h);
  return HatGame(std::move(graph), std::move(hv));
}

VertexMap glue_hatness(const VertexMap& x1, const std::vector<std::string>& clique, const VertexMap& x2,
                       const std::string& v) {
  auto vit = x2.find(v);
  if (vit == x2.end()) throw ValidationError("domain mismatch: " + v + " not in second operand");
  VertexMap out = x1;
  for (const auto& s : clique) {
    auto it = out.find(s);
    if (it == out.end()) throw ValidationError("domain mismatch: " + s + " not in first operand");
    it->second *= vit->second;
  }
  for (const auto& [name, value] : x2) {
    if (name == v) continue;
    if (!out.emplace(name, value).second) throw ValidationError("domain mismatch: " + name + " in both operands");
  }
  return out;
}

std::vector<Count> glue_vectors(const std::vector<Count>& x1, std::span<const int> clique,
                                const std::vector<Count>& x2, int v, const Composition& comp) {
  std::vector<Count> out(comp.graph.size(), 0);
  for (std::size_t i = 0; i < x1.size(); ++i) out[static_cast<std::size_t>(comp.left_map[i])] = x1[i];
  for (int s : clique) out[static_cast<std::size_t>(comp.left_map[static_cast<std::size_t>(s)])] *= x2[static_cast<std::size_t>(v)];
  for (std::size_t i = 0; i < x2.size(); ++i)
    if (comp.right_map[i] >= 0) out[static_cast<std::size_t>(comp.right_map[i])] = x2[i];
  return out;
}

HatGame sum_games(const HatGame& g1, std::span<const int> clique, const HatGame& g2, int v) {
  Composition comp = clique_join(g1.graph(), clique, g2.graph(), v);
  auto h = glue_vectors(g1.hatness(), clique, g2.hatness(), v, comp);
  auto g = glue_vectors(g1.guesses(), clique, g2.guesses(), v, comp);
  return HatGame(std::move(comp.graph), std::move(h), std::move(g));
}

HatGame product_games(const HatGame& g1, int a1, const HatGame& g2, int a2) {
  return sum_games(g1, std::span<const int>(&a1, 1), g2, a2);
}

HatGame substitute_games(const HatGame& inner, const HatGame& outer, int at) {
  if (!inner.graph().is_complete()) throw ValidationError("substitution requires a complete inner graph");
  Composition comp = substitute(inner.graph(), outer.graph(), at);
  std::vector<int> all(inner.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  auto h = glue_vectors(inner.hatness(), all, outer.hatness(), at, comp);
  auto g = glue_vectors(inner.guesses(), all, outer.guesses(), at, comp);
  return HatGame(std::move(comp.graph), std::move(h), std::move(g));
}

CliqueVerdict clique_criterion(const HatGame& game) {
  if (!game.graph().is_complete()) throw ValidationError("clique criterion needs a complete graph");
  CliqueVerdict out;
  for (std::size_t i = 0; i < game.size(); ++i) out.sum += make_rational(game.guesses()[i], game.hatness()[i]);
  out.winning = out.sum >= 1;
  out.precise = out.sum == 1;
  return out;
}

std::vector<Rational> fraction_vector(const HatGame& game) {
  std::vector<Rational> r;
  r.reserve(game.size());
  for (std::size_t i = 0; i < game.size(); ++i) r.push_back(make_rational(game.guesses()[i], game.hatness()[i]));
  return r;
}

}  // namespace hatlab
