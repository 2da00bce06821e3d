#include "hatlab/gallery.hpp"

#include "hatlab/indpoly.hpp"

namespace hatlab {

namespace {

std::string num(long v) { return std::to_string(v); }

GalleryGame finish(GameExpr e) {
  Certificate c = eval_expr(e);
  return {std::move(e), std::move(c.game)};
}

}  // namespace

Graph path_graph(int n) {
  if (n < 1) throw ValidationError("path needs at least one vertex");
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    names.push_back("v" + num(i + 1));
    if (i) edges.emplace_back(i - 1, i);
  }
  return Graph::from_indices(std::move(names), edges);
}

GalleryGame build_delta6_hg8() {
  GameExpr all;
  for (int c = 0; c < 3; ++c) {
    const std::string a = "A" + num(c), b = "B" + num(c);
    std::vector<std::string> left{a}, right{b};
    for (int i = 1; i <= 4; ++i) {
      left.push_back("L" + num(c) + "_" + num(i));
      right.push_back("R" + num(c) + "_" + num(i));
    }
    auto k5l = clique_leaf(left, {2, 8, 8, 8, 8});
    auto k3 = clique_leaf({a, b, "C"}, {4, 4, 2});
    auto k5r = clique_leaf(right, {2, 8, 8, 8, 8});
    auto chain = product_expr(product_expr(k5l, a, k3, a), b, k5r, b);
    all = all ? product_expr(all, "C", chain, "C") : chain;
  }
  return finish(all);
}

namespace {

class ScaryBuilder {
 public:
  explicit ScaryBuilder(int n) : n_(n) {}

  // T_k with `bottom`, each top carrying what hangs below it.
  GameExpr t_block(int k, const std::string& bottom) {
    const int tops = 1 << (n_ - k);
    std::vector<std::string> names;
    std::vector<Count> h;
    for (int i = 0; i < tops; ++i) {
      names.push_back("A" + num(k - 1) + "_" + num(counter_++));
      h.push_back(Count(1) << (n_ - k + 1));
    }
    names.push_back(bottom);
    h.push_back(2);
    GameExpr e = clique_leaf(names, h);
    for (int i = 0; i < tops; ++i) {
      const auto& top = names[static_cast<std::size_t>(i)];
      if (auto below = hanging(k - 1, top, k - 1)) e = product_expr(e, top, below, top);
    }
    return e;
  }

  // `copies` copies of T_level with v as their common bottom.
  GameExpr hanging(int level, const std::string& v, int copies) {
    GameExpr e;
    for (int c = 0; c < copies; ++c) {
      auto t = t_block(level, v);
      e = e ? product_expr(e, v, t, v) : t;
    }
    return e;
  }

 private:
  int n_;
  long counter_ = 0;
};

}  // namespace

GalleryGame build_scary(int n) {
  if (n < 3) throw ValidationError("scary construction needs n >= 3, got " + num(n));
  if (n > 6) throw GuardError("scary construction capped at n = 6 (size grows doubly exponentially)");
  ScaryBuilder b(n);
  const std::string root = "A" + num(n - 1);
  GameExpr all;
  for (int c = 0; c < n; ++c) {
    auto copy = b.hanging(n - 1, root, 1);
    all = all ? product_expr(all, root, copy, root) : copy;
  }
  return finish(all);
}

Rational delta_plus_k_ratio(int m) {
  if (m < 1) throw ValidationError("ratio needs m >= 1");
  return make_rational(8 * m, 7 * m - 1);
}

DeltaPlusK build_delta_plus_k(int k) {
  if (k < 1) throw ValidationError("delta-plus-k needs k >= 1, got " + num(k));
  DeltaPlusK out;
  if (k == 1) {
    out.built = finish(clique_leaf({"u", "w"}, {2, 2}));
    out.hg = 2;
    out.max_degree = 1;
    return out;
  }
  const int m = k - 1;
  auto base = build_delta6_hg8();
  GameExpr e = base.expr;
  for (const auto& v : base.game.graph().names()) {
    CliqueLeaf inner;
    for (int i = 1; i <= m; ++i) {
      inner.vertices.push_back(v + "." + num(i));
      inner.h.push_back(m);
    }
    e = substitute_expr(std::move(inner), e, v);
  }
  out.built = finish(e);
  out.m = m;
  out.hg = 8L * m;
  out.max_degree = 7 * m - 1;
  return out;
}

ChainVariant parse_chain_variant(const std::string& s) {
  if (s == "standard") return ChainVariant::Standard;
  if (s == "tilde") return ChainVariant::Tilde;
  if (s == "minus") return ChainVariant::Minus;
  throw ValidationError("unknown chain variant '" + s + "' (standard, tilde, minus)");
}

std::string chain_variant_name(ChainVariant v) {
  switch (v) {
    case ChainVariant::Standard: return "standard";
    case ChainVariant::Tilde: return "tilde";
    case ChainVariant::Minus: return "minus";
  }
  return "?";
}

namespace {

class ChainLayout {
 public:
  ChainLayout(int n, int l, ChainVariant variant) : n_(n) {
    for (int i = 1; i <= n; ++i) {
      int s = (i == 1 || i == n) ? l - 1 : l - 2;
      if (i == n && variant == ChainVariant::Tilde) s = l - 2;
      const bool has_a = i > 1, has_b = i < n;
      std::vector<std::string> names;
      if (s == 1 && has_a && has_b) {
        names.push_back(id(i) + "a");
      } else {
        if (s < has_a + has_b)
          throw ValidationError("clique " + num(i) + " of size " + num(s) + " cannot hold its bridge ends");
        if (has_a) names.push_back(id(i) + "a");
        if (has_b) names.push_back(id(i) + "b");
        for (int j = 1; static_cast<int>(names.size()) < s; ++j) names.push_back(id(i) + "_" + num(j));
      }
      cliques_.push_back(std::move(names));
    }
  }

  const std::vector<std::string>& clique(int i) const { return cliques_[static_cast<std::size_t>(i - 1)]; }
  std::string a(int i) const { return id(i) + "a"; }
  std::string b(int i) const { return clique(i).front() == a(i) && clique(i).size() == 1 ? a(i) : id(i) + "b"; }

  Graph graph() const {
    std::vector<std::string> names;
    std::vector<NamePair> edges;
    for (int i = 1; i <= n_; ++i) {
      const auto& c = clique(i);
      names.insert(names.end(), c.begin(), c.end());
      for (std::size_t p = 0; p < c.size(); ++p)
        for (std::size_t q = p + 1; q < c.size(); ++q) edges.emplace_back(c[p], c[q]);
      if (i < n_) edges.emplace_back(b(i), a(i + 1));
    }
    return Graph::make(std::move(names), edges);
  }

  // Hatness per clique vertex: `marked` on bridge ends, `rest` elsewhere.
  CliqueLeaf leaf(int i, Count marked, Count rest, Count marked_g = 1, bool left_end = true,
                  bool right_end = true) const {
    CliqueLeaf out;
    for (const auto& v : clique(i)) {
      const bool m = (left_end && i > 1 && v == a(i)) || (right_end && i < n_ && v == b(i));
      out.vertices.push_back(v);
      out.h.push_back(m ? marked : rest);
      out.g.push_back(m ? marked_g : 1);
    }
    return out;
  }

  int n() const { return n_; }

 private:
  static std::string id(int i) { return "Q" + num(i); }
  int n_;
  std::vector<std::vector<std::string>> cliques_;
};

GameExpr as_expr(const CliqueLeaf& l) { return clique_leaf(l.vertices, l.h, l.g); }

// Precise bricks and K2(2,2) bridges, glued by products.
GameExpr bridged(const ChainLayout& lay, Count marked, Count rest, Count marked_g) {
  GameExpr e = as_expr(lay.leaf(1, marked, rest, marked_g));
  for (int i = 1; i < lay.n(); ++i) {
    const std::string b = lay.b(i), a = lay.a(i + 1);
    e = product_expr(e, b, clique_leaf({b, a}, {2, 2}), b);
    e = product_expr(e, a, as_expr(lay.leaf(i + 1, marked, rest, marked_g)), a);
  }
  return e;
}

// Losing chain for odd l = 2k+1: K_{2k} at h = l, then each further clique
// with h(a) = k+1 gets a pendant leaf (h'(a) = 2k+1) that is glued to the
// previous right bridge end.
GameExpr losing_chain(const ChainLayout& lay, Count k) {
  const Count l = 2 * k + 1;
  GameExpr e = as_expr(lay.leaf(1, l, l));
  for (int i = 2; i <= lay.n(); ++i) {
    CliqueLeaf piece = lay.leaf(i, l, l);
    for (std::size_t j = 0; j < piece.vertices.size(); ++j)
      if (piece.vertices[j] == lay.a(i)) piece.h[j] = k + 1;
    const std::string leaf_name = "Q" + num(i) + "p";
    auto pendant = pendant_lose_expr(as_expr(piece), lay.a(i), leaf_name);
    e = sum_lose_expr(e, lay.b(i - 1), pendant, leaf_name);
  }
  return e;
}

}  // namespace

ChainBuild build_chain(int n, int l, ChainVariant variant) {
  if (n < 2) throw ValidationError("chain needs at least 2 cliques, got " + num(n));
  if (l < 3) throw ValidationError("chain needs l >= 3, got " + num(l));
  ChainLayout lay(n, l, variant);
  ChainBuild out;
  out.h = l;
  out.graph = lay.graph();
  if (variant == ChainVariant::Minus) {
    if (n < 3) throw ValidationError("minus variant needs an inner clique (n >= 3)");
    if (l < 4) throw ValidationError("minus variant needs an edge inside the inner clique (l >= 4)");
    out.graph = out.graph.without_edge(out.graph.index(lay.a(2)), out.graph.index(lay.b(2)));
    return out;
  }
  if (variant == ChainVariant::Tilde) return out;
  if (l % 2 == 0) {
    const Count k = l / 2;
    out.winning = finish(bridged(lay, k, l, 1));
  } else {
    const Count k = (l - 1) / 2;
    out.losing = finish(losing_chain(lay, k));
    if (!(l == 3 && n >= 3)) out.generalized = finish(bridged(lay, l, l, 2));
  }
  return out;
}

ExtensionExample build_extension_example(int which, int n, int k) {
  if (which < 1 || which > 3) throw ValidationError("extension example must be 1, 2 or 3, got " + num(which));
  if (n < 2) throw ValidationError("extension example needs n >= 2, got " + num(n));
  if (k < 0) throw ValidationError("extension example needs k >= 0, got " + num(k));
  ExtensionExample out;
  out.which = which;
  out.n = n;
  out.k = k;
  out.base = path_graph(n);
  out.kind = which == 3 ? ExtensionKind::Second : ExtensionKind::First;
  for (int i = 0; i < n; ++i) {
    const bool end = i == 0 || i == n - 1;
    int s = 0;
    if (which == 1) s = k + 1;
    else if (which == 2) s = end ? k + 3 : k + 1;
    else s = end ? k + 1 : k;
    out.sizes.push_back(Rational(s));
  }
  out.U = U_from_f(out.base, out.sizes, out.kind);
  std::vector<Count> ints;
  for (const auto& s : out.sizes) ints.push_back(s.get_num().get_si());
  try {
    out.graph = out.kind == ExtensionKind::First ? build_first_kind(out.base, ints).graph
                                                 : build_second_kind(out.base, ints).graph;
  } catch (const ValidationError&) {
    out.graph.reset();
  }
  if (out.graph && stats(*out.graph).connected) out.diameter = diameter(*out.graph);
  return out;
}

std::vector<std::string> gallery_names() {
  return {"delta6-hg8", "scary", "delta-plus-k", "chain", "example1", "example2", "example3"};
}

GalleryBuild build_by_name(const std::string& name, const GalleryParams& p) {
  GalleryBuild out;
  out.name = name;
  auto take = [&](const GalleryGame& gg) {
    out.expr = gg.expr;
    out.game = gg.game;
    out.graph = gg.game.graph();
  };
  if (name == "delta6-hg8") {
    take(build_delta6_hg8());
  } else if (name == "scary") {
    take(build_scary(p.n.value_or(3)));
  } else if (name == "delta-plus-k") {
    auto d = build_delta_plus_k(p.k.value_or(3));
    take(d.built);
    out.info["m"] = num(d.m);
    out.info["predicted_hg"] = num(d.hg);
    out.info["predicted_max_degree"] = num(d.max_degree);
    if (d.m >= 1) out.info["ratio"] = to_string(delta_plus_k_ratio(d.m));
  } else if (name == "chain") {
    auto c = build_chain(p.n.value_or(2), p.l.value_or(4), p.variant);
    out.graph = c.graph;
    out.game = uniform_game(c.graph, c.h);
    if (c.winning) out.expr = c.winning->expr;
    if (c.losing) out.expr = c.losing->expr;
    if (c.generalized) out.generalized = c.generalized->expr;
    if (stats(c.graph).connected) out.info["diameter"] = num(diameter(c.graph));
  } else if (name == "example1" || name == "example2" || name == "example3") {
    auto ex = build_extension_example(name.back() - '0', p.n.value_or(2), p.k.value_or(1));
    out.info["U"] = ex.U.to_string();
    if (!ex.graph) throw ValidationError(name + " with k = " + num(ex.k) + " has no realizable graph");
    out.graph = *ex.graph;
    if (ex.diameter) out.info["diameter"] = num(*ex.diameter);
  } else {
    std::string all;
    for (const auto& n : gallery_names()) all += (all.empty() ? "" : ", ") + n;
    throw ValidationError("unknown construction '" + name + "' (" + all + ")");
  }
  return out;
}

}  // namespace hatlab
