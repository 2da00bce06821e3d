#include "hatlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace hatlab {

Graph Graph::from_indices(std::vector<std::string> vertices, const std::vector<std::pair<int, int>>& edges) {
  Graph g;
  g.names_ = std::move(vertices);
  g.adj_.assign(g.names_.size(), {});
  for (std::size_t i = 0; i < g.names_.size(); ++i) {
    if (!g.index_.emplace(g.names_[i], static_cast<int>(i)).second)
      throw ValidationError("duplicate vertex " + g.names_[i]);
  }
  const int n = static_cast<int>(g.names_.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw ValidationError("edge endpoint out of range");
    if (u == v) throw ValidationError("self-loop " + g.names_[static_cast<std::size_t>(u)]);
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    g.edge_count_ += nb.size();
  }
  g.edge_count_ /= 2;
  return g;
}

Graph Graph::make(std::vector<std::string> vertices, const std::vector<NamePair>& edges) {
  std::unordered_map<std::string, int> idx;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!idx.emplace(vertices[i], static_cast<int>(i)).second) throw ValidationError("duplicate vertex " + vertices[i]);
  }
  std::vector<std::pair<int, int>> ie;
  ie.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = idx.find(a);
    if (ia == idx.end()) throw ValidationError("unknown endpoint " + a);
    auto ib = idx.find(b);
    if (ib == idx.end()) throw ValidationError("unknown endpoint " + b);
    if (ia->second == ib->second) throw ValidationError("self-loop " + a);
    ie.emplace_back(ia->second, ib->second);
  }
  return from_indices(std::move(vertices), ie);
}

Graph Graph::complete(std::vector<std::string> vertices) {
  std::vector<std::pair<int, int>> e;
  const int n = static_cast<int>(vertices.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return from_indices(std::move(vertices), e);
}

std::optional<int> Graph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Graph::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw ValidationError("unknown vertex " + std::string(name));
  return *i;
}

bool Graph::adjacent(int u, int v) const {
  const auto& nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < static_cast<int>(size()); ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::is_clique(std::span<const int> vs) const {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (vs[i] == vs[j] || !adjacent(vs[i], vs[j])) return false;
  return true;
}

bool Graph::is_complete() const {
  const std::size_t n = size();
  return edge_count_ == n * (n - (n > 0 ? 1 : 0)) / 2;
}

Graph Graph::without_edge(int u, int v) const {
  auto e = edges();
  std::erase(e, std::pair{std::min(u, v), std::max(u, v)});
  return from_indices(names_, e);
}

Graph Graph::without_vertex(int v) const {
  std::vector<std::string> names;
  std::vector<int> remap(size(), -1);
  for (int u = 0; u < static_cast<int>(size()); ++u) {
    if (u == v) continue;
    remap[static_cast<std::size_t>(u)] = static_cast<int>(names.size());
    names.push_back(name(u));
  }
  std::vector<std::pair<int, int>> e;
  for (auto [a, b] : edges())
    if (a != v && b != v) e.emplace_back(remap[static_cast<std::size_t>(a)], remap[static_cast<std::size_t>(b)]);
  return from_indices(std::move(names), e);
}

namespace {

// Appends the right operand (minus `skip`) to `names`, prefixing "R/" on
// collisions. Returns the index map of the right operand.
std::vector<int> append_right(std::vector<std::string>& names, const Graph& right, int skip) {
  std::unordered_set<std::string> used(names.begin(), names.end());
  std::unordered_set<std::string> right_names(right.names().begin(), right.names().end());
  std::vector<int> map(right.size(), -1);
  for (int u = 0; u < static_cast<int>(right.size()); ++u) {
    if (u == skip) continue;
    std::string nm = right.name(u);
    if (used.count(nm)) {
      do {
        nm = "R/" + nm;
      } while (used.count(nm) || right_names.count(nm));
    }
    used.insert(nm);
    map[static_cast<std::size_t>(u)] = static_cast<int>(names.size());
    names.push_back(std::move(nm));
  }
  return map;
}

}  // namespace

Composition clique_join(const Graph& g1, std::span<const int> clique, const Graph& g2, int v) {
  if (v < 0 || v >= static_cast<int>(g2.size())) throw ValidationError("join vertex absent from right operand");
  for (int s : clique)
    if (s < 0 || s >= static_cast<int>(g1.size())) throw ValidationError("clique vertex absent from left operand");
  if (!g1.is_clique(clique)) throw ValidationError("S is not a clique in the left operand");

  Composition out;
  std::vector<std::string> names = g1.names();
  out.left_map.resize(g1.size());
  for (std::size_t i = 0; i < g1.size(); ++i) out.left_map[i] = static_cast<int>(i);
  out.right_map = append_right(names, g2, v);

  auto edges = g1.edges();
  for (auto [a, b] : g2.edges()) {
    if (a == v || b == v) continue;
    edges.emplace_back(out.right_map[static_cast<std::size_t>(a)], out.right_map[static_cast<std::size_t>(b)]);
  }
  for (int s : clique)
    for (int u : g2.neighbors(v)) edges.emplace_back(s, out.right_map[static_cast<std::size_t>(u)]);
  out.graph = Graph::from_indices(std::move(names), edges);
  return out;
}

Graph clique_join(const Graph& g1, const std::vector<std::string>& clique, const Graph& g2, const std::string& v) {
  std::vector<int> s;
  for (const auto& nm : clique) s.push_back(g1.index(nm));
  return clique_join(g1, s, g2, g2.index(v)).graph;
}

Graph vertex_glue(const Graph& g1, const std::string& a1, const Graph& g2, const std::string& a2) {
  int s = g1.index(a1);
  return clique_join(g1, std::span<const int>(&s, 1), g2, g2.index(a2)).graph;
}

Composition substitute(const Graph& inner, const Graph& outer, int at) {
  if (at < 0 || at >= static_cast<int>(outer.size())) throw ValidationError("substitution vertex absent");
  Composition out;
  std::vector<std::string> names = inner.names();
  out.left_map.resize(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out.left_map[i] = static_cast<int>(i);
  out.right_map = append_right(names, outer, at);
  auto edges = inner.edges();
  for (auto [a, b] : outer.edges()) {
    if (a == at || b == at) continue;
    edges.emplace_back(out.right_map[static_cast<std::size_t>(a)], out.right_map[static_cast<std::size_t>(b)]);
  }
  for (int s = 0; s < static_cast<int>(inner.size()); ++s)
    for (int u : outer.neighbors(at)) edges.emplace_back(s, out.right_map[static_cast<std::size_t>(u)]);
  out.graph = Graph::from_indices(std::move(names), edges);
  return out;
}

Graph substitute(const Graph& inner, const Graph& outer, const std::string& at) {
  return substitute(inner, outer, outer.index(at)).graph;
}

namespace {

std::vector<int> bfs(const Graph& g, int src) {
  std::vector<int> dist(g.size(), -1);
  std::deque<int> q{src};
  dist[static_cast<std::size_t>(src)] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int w : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        q.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

GraphStats stats(const Graph& g) {
  GraphStats s;
  s.degree.reserve(g.size());
  for (int v = 0; v < static_cast<int>(g.size()); ++v) {
    s.degree.push_back(g.degree(v));
    s.max_degree = std::max(s.max_degree, g.degree(v));
  }
  if (g.empty()) {
    s.diameter = 0;
    return s;
  }
  int diam = 0;
  for (int v = 0; v < static_cast<int>(g.size()); ++v) {
    auto d = bfs(g, v);
    for (int x : d) {
      if (x < 0) {
        s.connected = false;
        return s;
      }
      diam = std::max(diam, x);
    }
  }
  s.diameter = diam;
  return s;
}

int diameter(const Graph& g) {
  auto s = stats(g);
  if (!s.connected) throw ValidationError("diameter of a disconnected graph is undefined");
  return *s.diameter;
}

std::optional<std::vector<int>> perfect_elimination_ordering(const Graph& g) {
  const int n = static_cast<int>(g.size());
  // Maximum cardinality search; ties go to the lowest index.
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  std::vector<int> visit;
  visit.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!visited[static_cast<std::size_t>(v)] && (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]))
        best = v;
    visited[static_cast<std::size_t>(best)] = true;
    visit.push_back(best);
    for (int w : g.neighbors(best))
      if (!visited[static_cast<std::size_t>(w)]) ++weight[static_cast<std::size_t>(w)];
  }
  std::vector<int> order(visit.rbegin(), visit.rend());
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  for (int v : order) {
    std::vector<int> later;
    for (int w : g.neighbors(v))
      if (pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)]) later.push_back(w);
    if (!g.is_clique(later)) return std::nullopt;
  }
  return order;
}

std::vector<std::vector<int>> independent_sets(const Graph& g, std::size_t max_n) {
  if (g.size() > max_n)
    throw GuardError("independent set enumeration limited to " + std::to_string(max_n) + " vertices, graph has " +
                     std::to_string(g.size()));
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  const int n = static_cast<int>(g.size());
  auto rec = [&](auto&& self, int next) -> void {
    out.push_back(cur);
    for (int v = next; v < n; ++v) {
      bool ok = std::none_of(cur.begin(), cur.end(), [&](int u) { return g.adjacent(u, v); });
      if (!ok) continue;
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace hatlab
