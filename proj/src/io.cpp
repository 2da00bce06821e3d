#include "hatlab/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "hatlab/roots.hpp"

namespace hatlab {

namespace {

// RFC 6901 escaping of one reference token.
std::string token(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

std::string ptr(const std::string& base, const std::string& key) { return base + "/" + token(key); }
std::string ptr(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

const Json& field(const Json& j, const std::string& at, const std::string& key) {
  if (!j.is_object()) throw SchemaError(at, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(ptr(at, key), "missing");
  return *it;
}

std::string as_string(const Json& j, const std::string& at) {
  if (!j.is_string()) throw SchemaError(at, "expected a string");
  return j.get<std::string>();
}

Count as_positive(const Json& j, const std::string& at) {
  if (!j.is_number_integer()) throw SchemaError(at, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < 1) throw SchemaError(at, "must be at least 1, got " + std::to_string(v));
  return v;
}

std::vector<std::string> string_list(const Json& j, const std::string& at) {
  if (!j.is_array()) throw SchemaError(at, "expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_string(j[i], ptr(at, i)));
  return out;
}

std::vector<Count> count_list(const Json& j, const std::string& at) {
  if (!j.is_array()) throw SchemaError(at, "expected an array");
  std::vector<Count> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_positive(j[i], ptr(at, i)));
  return out;
}

Graph graph_at(const Json& j, const std::string& at) {
  const auto vertices = string_list(field(j, at, "vertices"), ptr(at, "vertices"));
  std::set<std::string> seen;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].empty()) throw SchemaError(ptr(ptr(at, "vertices"), i), "empty vertex name");
    if (!seen.insert(vertices[i]).second)
      throw SchemaError(ptr(ptr(at, "vertices"), i), "duplicate vertex '" + vertices[i] + "'");
  }
  std::vector<NamePair> edges;
  if (j.contains("edges")) {
    const auto& es = j["edges"];
    const std::string ep = ptr(at, "edges");
    if (!es.is_array()) throw SchemaError(ep, "expected an array");
    for (std::size_t i = 0; i < es.size(); ++i) {
      const auto& e = es[i];
      if (!e.is_array() || e.size() != 2) throw SchemaError(ptr(ep, i), "expected a pair of vertex names");
      std::string a = as_string(e[0], ptr(ptr(ep, i), 0)), b = as_string(e[1], ptr(ptr(ep, i), 1));
      if (!seen.count(a)) throw SchemaError(ptr(ptr(ep, i), 0), "unknown vertex '" + a + "'");
      if (!seen.count(b)) throw SchemaError(ptr(ptr(ep, i), 1), "unknown vertex '" + b + "'");
      if (a == b) throw SchemaError(ptr(ep, i), "self-loop at '" + a + "'");
      edges.emplace_back(a, b);
    }
  }
  return Graph::make(vertices, edges);
}

VertexMap vertex_map(const Json& j, const std::string& at, const Graph& g) {
  if (!j.is_object()) throw SchemaError(at, "expected an object keyed by vertex");
  VertexMap out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!g.find(it.key())) throw SchemaError(ptr(at, it.key()), "not a vertex");
    out[it.key()] = as_positive(it.value(), ptr(at, it.key()));
  }
  return out;
}

std::string join(const std::vector<Count>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

GameExpr expr_at(const Json& j, const std::string& at);

CliqueLeaf leaf_at(const Json& j, const std::string& at) {
  CliqueLeaf leaf;
  leaf.vertices = string_list(field(j, at, "vertices"), ptr(at, "vertices"));
  leaf.h = count_list(field(j, at, "hatness"), ptr(at, "hatness"));
  if (leaf.h.size() != leaf.vertices.size()) throw SchemaError(ptr(at, "hatness"), "one hatness per vertex required");
  if (j.contains("guesses")) {
    leaf.g = count_list(j["guesses"], ptr(at, "guesses"));
    if (leaf.g.size() != leaf.vertices.size())
      throw SchemaError(ptr(at, "guesses"), "one guess count per vertex required");
  }
  return leaf;
}

GameExpr expr_at(const Json& j, const std::string& at) {
  const std::string op = as_string(field(j, at, "op"), ptr(at, "op"));
  auto sub = [&](const char* key) { return expr_at(field(j, at, key), ptr(at, key)); };
  auto name = [&](const char* key) { return as_string(field(j, at, key), ptr(at, key)); };
  if (op == "clique") {
    auto l = leaf_at(j, at);
    return clique_leaf(l.vertices, l.h, l.g);
  }
  if (op == "sum") return sum_expr(sub("left"), string_list(field(j, at, "S"), ptr(at, "S")), sub("right"), name("v"));
  if (op == "product") return product_expr(sub("left"), name("A"), sub("right"), name("B"));
  if (op == "substitute") {
    const auto& inner = field(j, at, "inner");
    if (!inner.is_object() || inner.value("op", "") != "clique")
      throw SchemaError(ptr(at, "inner"), "inner operand must be a clique");
    return substitute_expr(leaf_at(inner, ptr(at, "inner")), sub("outer"), name("at"));
  }
  if (op == "sum_lose") return sum_lose_expr(sub("left"), name("A"), sub("right"), name("B"));
  if (op == "pendant_lose") return pendant_lose_expr(sub("base"), name("A"), name("v"));
  throw SchemaError(ptr(at, "op"), "unknown operation '" + op + "'");
}

Json leaf_json(const CliqueLeaf& l) {
  Json j{{"op", "clique"}, {"vertices", l.vertices}, {"hatness", l.h}};
  bool generalized = false;
  for (Count g : l.g) generalized = generalized || g != 1;
  if (generalized) j["guesses"] = l.g;
  return j;
}

struct ExprToJson {
  Json operator()(const CliqueLeaf& l) const { return leaf_json(l); }
  Json operator()(const SumExpr& n) const {
    return {{"op", "sum"}, {"left", expr_to_json(n.left)}, {"S", n.S}, {"right", expr_to_json(n.right)}, {"v", n.v}};
  }
  Json operator()(const ProductExpr& n) const {
    return {{"op", "product"}, {"left", expr_to_json(n.left)}, {"A", n.a_left}, {"right", expr_to_json(n.right)},
            {"B", n.a_right}};
  }
  Json operator()(const SubstituteExpr& n) const {
    return {{"op", "substitute"}, {"inner", leaf_json(n.inner)}, {"outer", expr_to_json(n.outer)}, {"at", n.at}};
  }
  Json operator()(const SumLoseExpr& n) const {
    return {{"op", "sum_lose"}, {"left", expr_to_json(n.left)}, {"A", n.a_left}, {"right", expr_to_json(n.right)},
            {"B", n.a_right}};
  }
  Json operator()(const PendantLoseExpr& n) const {
    return {{"op", "pendant_lose"}, {"base", expr_to_json(n.base)}, {"A", n.b}, {"v", n.new_leaf}};
  }
};

}  // namespace

SchemaError::SchemaError(const std::string& pointer, const std::string& what)
    : ValidationError((pointer.empty() ? "/" : pointer) + ": " + what), pointer_(pointer) {}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << text;
  if (!out) throw ValidationError("write failed for " + path.string());
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({g.name(u), g.name(v)});
  return {{"vertices", g.names()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) { return graph_at(j, ""); }

Json game_to_json(const HatGame& game) {
  Json j = graph_to_json(game.graph());
  Json h = Json::object(), g = Json::object();
  for (std::size_t i = 0; i < game.size(); ++i) {
    const auto& name = game.graph().name(static_cast<int>(i));
    h[name] = game.hatness()[i];
    g[name] = game.guesses()[i];
  }
  j["hatness"] = h;
  if (!game.is_classic()) j["guesses"] = g;
  return j;
}

HatGame game_from_json(const Json& j) {
  Graph g = graph_at(j, "");
  VertexMap h = vertex_map(field(j, "", "hatness"), "/hatness", g);
  for (const auto& v : g.names())
    if (!h.count(v)) throw SchemaError(ptr("/hatness", v), "missing hatness for vertex '" + v + "'");
  VertexMap guesses;
  if (j.contains("guesses")) guesses = vertex_map(j["guesses"], "/guesses", g);
  return make_game(std::move(g), h, guesses);
}

HatGame load_game(const std::filesystem::path& path) {
  Json j = read_json_file(path);
  try {
    return game_from_json(j);
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void save_game(const HatGame& game, const std::filesystem::path& path) {
  write_text_file(path, canonical_dump(game_to_json(game)));
}

Json expr_to_json(const GameExpr& e) {
  if (!e) throw ValidationError("empty expression");
  return std::visit(ExprToJson{}, e->node);
}

GameExpr expr_from_json(const Json& j) { return expr_at(j, ""); }

bool looks_like_expr(const Json& j) { return j.is_object() && j.contains("op"); }

Json strategy_to_json(const HatGame& game, const Strategy& s) {
  Json out = Json::object();
  for (std::size_t v = 0; v < s.guesses.size(); ++v) {
    Json per = Json::object();
    for (std::size_t sigma = 0; sigma < s.guesses[v].size(); ++sigma)
      per[join(decode_configuration(game, static_cast<int>(v), sigma))] = s.guesses[v][sigma];
    out[game.graph().name(static_cast<int>(v))] = per;
  }
  return out;
}

Strategy strategy_from_json(const HatGame& game, const Json& j) {
  if (!j.is_object()) throw SchemaError("", "expected an object keyed by vertex");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!game.graph().find(it.key())) throw SchemaError(ptr("", it.key()), "not a vertex");
  Strategy s;
  for (std::size_t v = 0; v < game.size(); ++v) {
    const auto& name = game.graph().name(static_cast<int>(v));
    const std::string vp = ptr("", name);
    if (!j.contains(name)) throw SchemaError(vp, "missing strategy for vertex '" + name + "'");
    const auto& per = j[name];
    if (!per.is_object()) throw SchemaError(vp, "expected an object keyed by neighbor colors");
    const auto configs = configuration_count(game, static_cast<int>(v));
    std::map<std::string, std::uint64_t> index;
    for (std::uint64_t sigma = 0; sigma < configs; ++sigma)
      index[join(decode_configuration(game, static_cast<int>(v), sigma))] = sigma;
    std::vector<std::vector<Count>> guesses(configs);
    for (auto it = per.begin(); it != per.end(); ++it) {
      auto found = index.find(it.key());
      if (found == index.end()) throw SchemaError(ptr(vp, it.key()), "not a neighbor coloring of '" + name + "'");
      const std::string gp = ptr(vp, it.key());
      if (!it.value().is_array()) throw SchemaError(gp, "expected an array of colors");
      for (std::size_t i = 0; i < it.value().size(); ++i) {
        const auto& c = it.value()[i];
        if (!c.is_number_integer()) throw SchemaError(ptr(gp, i), "expected an integer color");
        guesses[found->second].push_back(c.get<Count>());
      }
      index.erase(found);
    }
    if (!index.empty()) throw SchemaError(ptr(vp, index.begin()->first), "missing guesses for this configuration");
    s.guesses.push_back(std::move(guesses));
  }
  return s;
}

Json rational_json(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return to_string(c);
}

Json poly_json(const Poly& p) {
  Json coeffs = Json::array();
  for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(to_string(p.coeff(i)));
  return coeffs;
}

Json derivation_json(const Derivation& d) {
  Json j{{"rule", d.rule}, {"note", d.note}};
  if (!d.children.empty()) {
    Json kids = Json::array();
    for (const auto& c : d.children) kids.push_back(derivation_json(c));
    j["children"] = kids;
  }
  return j;
}

Json certificate_json(const Certificate& c) {
  Json j{{"status", status_name(c.status)},
         {"precise_bricks", c.precise_bricks},
         {"maximal", c.maximal},
         {"vertices", c.game.size()},
         {"derivation", derivation_json(c.derivation)}};
  if (c.hg_claim) j["hg"] = rational_json(*c.hg_claim);
  if (c.muhat_claim) j["mu_hat"] = rational_json(*c.muhat_claim);
  return j;
}

Json maximality_json(const MaximalityCertificate& m) {
  Json j{{"applicable", m.applicable},
         {"maximal", m.maximal},
         {"method", m.method == MaximalityMethod::CornerCheck ? "corner check" : "compositional"},
         {"z_at_r", rational_json(m.z_at_r)},
         {"corners", m.corner_count},
         {"text", m.text}};
  if (!m.reason.empty()) j["reason"] = m.reason;
  if (m.failing_value) {
    j["failing_corner"] = m.failing_corner;
    j["failing_value"] = rational_json(*m.failing_value);
  }
  if (m.method == MaximalityMethod::Compositional) j["composition"] = derivation_json(m.composition);
  return j;
}

Json losing_json(const LosingCertificate& l) {
  return {{"losing", l.losing}, {"z_at_r", rational_json(l.z_at_r)}, {"text", l.text}};
}

Json muhat_json(const Graph& g, const MuHatResult& m) {
  std::vector<std::string> order;
  for (int v : m.elimination_order) order.push_back(g.name(v));
  Json j{{"elimination_order", order},
         {"U", poly_json(m.U)},
         {"lower", rational_json(m.lower)},
         {"upper", rational_json(m.upper)},
         {"note", m.note}};
  if (m.value) j["mu_hat"] = rational_json(*m.value);
  if (m.root.root) {
    j["root_interval"] = {rational_json(m.root.root->lower), rational_json(m.root.root->upper)};
    if (m.root.root->exact_root) j["root"] = rational_json(*m.root.root->exact_root);
  }
  if (!m.root.candidate_note.empty()) j["candidate_note"] = m.root.candidate_note;
  return j;
}

Json verdict_json(const HatGame& game, const GameVerdict& v) {
  Json j{{"verdict", verdict_name(v.status)},
         {"variables", v.variables},
         {"clauses", v.clauses},
         {"stats",
          {{"decisions", v.stats.decisions},
           {"conflicts", v.stats.conflicts},
           {"propagations", v.stats.propagations},
           {"learned", v.stats.learned}}}};
  if (v.strategy) {
    auto check = verify_strategy(game, *v.strategy);
    j["strategy_verified"] = check.ok;
  }
  return j;
}

std::string to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (const auto& n : g.names()) os << "  " << dot_quote(n) << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << dot_quote(g.name(u)) << " -- " << dot_quote(g.name(v)) << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const HatGame& game) {
  const auto& g = game.graph();
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 0; v < static_cast<int>(g.size()); ++v) {
    // dot_quote escapes backslashes, so the line break goes in afterwards.
    std::string label = dot_quote(g.name(v));
    label.pop_back();
    label += "\\nh=" + std::to_string(game.h(v));
    if (game.g(v) > 1) label += ",g=" + std::to_string(game.g(v));
    os << "  " << dot_quote(g.name(v)) << " [label=" << label << "\"];\n";
  }
  for (auto [u, v] : g.edges()) os << "  " << dot_quote(g.name(u)) << " -- " << dot_quote(g.name(v)) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace hatlab
