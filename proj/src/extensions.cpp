#include "hatlab/extensions.hpp"

#include <map>

#include "hatlab/indpoly.hpp"

namespace hatlab {

FirstKindExtension build_first_kind(const Graph& base, std::span<const Count> sizes) {
  if (sizes.size() != base.size()) throw ValidationError("one clique size per base vertex required");
  FirstKindExtension out;
  std::vector<std::string> names = base.names();
  auto edges = base.edges();
  out.cliques.resize(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (sizes[i] < 1) throw ValidationError("clique sizes must be positive");
    auto& clique = out.cliques[i];
    clique.push_back(static_cast<int>(i));
    for (Count j = 1; j < sizes[i]; ++j) {
      clique.push_back(static_cast<int>(names.size()));
      names.push_back(base.names()[i] + "#" + std::to_string(j));
    }
    for (std::size_t p = 0; p < clique.size(); ++p)
      for (std::size_t q = p + 1; q < clique.size(); ++q) edges.emplace_back(clique[p], clique[q]);
  }
  out.graph = Graph::from_indices(std::move(names), edges);
  return out;
}

SecondKindExtension build_second_kind(const Graph& base, std::span<const Count> sizes) {
  if (sizes.size() != base.size()) throw ValidationError("one clique size per base vertex required");
  SecondKindExtension out;
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  out.cliques.resize(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    const int v = static_cast<int>(i);
    if (sizes[i] < base.degree(v))
      throw ValidationError("clique size " + std::to_string(sizes[i]) + " at " + base.name(v) +
                            " is below its degree " + std::to_string(base.degree(v)) +
                            ": every bridge needs its own marked vertex");
    if (sizes[i] < 1) throw ValidationError("clique sizes must be positive");
    auto& clique = out.cliques[i];
    for (Count j = 0; j < sizes[i]; ++j) {
      clique.push_back(static_cast<int>(names.size()));
      names.push_back(base.name(v) + "#" + std::to_string(j));
    }
    for (std::size_t p = 0; p < clique.size(); ++p)
      for (std::size_t q = p + 1; q < clique.size(); ++q) edges.emplace_back(clique[p], clique[q]);
  }
  std::vector<std::size_t> used(base.size(), 0);
  for (auto [u, v] : base.edges()) {
    int a = out.cliques[static_cast<std::size_t>(u)][used[static_cast<std::size_t>(u)]++];
    int b = out.cliques[static_cast<std::size_t>(v)][used[static_cast<std::size_t>(v)]++];
    out.bridges.emplace_back(a, b);
    edges.emplace_back(a, b);
  }
  out.graph = Graph::from_indices(std::move(names), edges);
  return out;
}

bool has_consecutive_back_neighbors(const Graph& base) {
  for (int m = 0; m < static_cast<int>(base.size()); ++m) {
    std::vector<int> back;
    for (int w : base.neighbors(m))
      if (w < m) back.push_back(w);
    // neighbors() is sorted, so the block must end at m-1 without gaps.
    for (std::size_t i = 0; i < back.size(); ++i)
      if (back[back.size() - 1 - i] != m - 1 - static_cast<int>(i)) return false;
  }
  return true;
}

namespace {

int back_degree(const Graph& g, int m) {
  int d = 0;
  for (int w : g.neighbors(m)) d += w < m;
  return d;
}

// First kind, three-term recurrences over prefix length. value[m] is the
// quantity for the extension of G[v_1..v_m].
//   f_m = (a_m - 1) f_{m-1} + f_{m-d-1} prod_j (a_{m-j} - 1)
template <class T>
T first_kind_leading(const Graph& g, std::span<const T> a) {
  std::vector<T> f{T(1)};
  for (int m = 1; m <= static_cast<int>(g.size()); ++m) {
    const int d = back_degree(g, m - 1);
    T prod(1);
    for (int j = 1; j <= d; ++j) prod *= a[static_cast<std::size_t>(m - 1 - j)] - T(1);
    f.push_back((a[static_cast<std::size_t>(m - 1)] - T(1)) * f[static_cast<std::size_t>(m - 1)] +
                f[static_cast<std::size_t>(m - d - 1)] * prod);
  }
  return f.back();
}

//   P~_m = (1 + x_m (a_m - 1)) P~_{m-1} + P~_{m-d-1} x_m prod_j (1 + x_{m-j}(a_{m-j} - 1))
Rational first_kind_reduced(const Graph& g, std::span<const Count> a, std::span<const Rational> x) {
  auto own = [&](int i) { return Rational(1 + x[static_cast<std::size_t>(i)] * (a[static_cast<std::size_t>(i)] - 1)); };
  std::vector<Rational> p{Rational(1)};
  for (int m = 1; m <= static_cast<int>(g.size()); ++m) {
    const int d = back_degree(g, m - 1);
    Rational prod = x[static_cast<std::size_t>(m - 1)];
    for (int j = 1; j <= d; ++j) prod *= own(m - 1 - j);
    p.push_back(own(m - 1) * p[static_cast<std::size_t>(m - 1)] + p[static_cast<std::size_t>(m - d - 1)] * prod);
  }
  return p.back();
}

// Second kind, over the state (prefix length m, per-clique count of removed
// bridge endpoints). In the prefix graph clique i has a_i - removed_i
// vertices, back_degree(i) of them marked.
//   P~(m) = (1 + x_m (a_m - removed_m - d_m)) P~(m-1) + x_m sum_{j in N<(m)} P~(m-1, removed + e_j)
//   f(m)  = (a_m - removed_m - d_m) f(m-1) + sum_j f(m-1, removed + e_j)
template <class T, class Step>
class SecondKindRecurrence {
 public:
  SecondKindRecurrence(const Graph& g, Step step) : g_(g), step_(std::move(step)) {}

  T eval(int m, std::vector<int>& removed) {
    if (m == 0) return T(1);
    auto key = std::make_pair(m, std::vector<int>(removed.begin(), removed.begin() + m));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int v = m - 1;
    std::vector<int> back;
    for (int w : g_.neighbors(v))
      if (w < v) back.push_back(w);
    T keep = eval(m - 1, removed);
    T sum(0);
    for (int w : back) {
      ++removed[static_cast<std::size_t>(w)];
      sum += eval(m - 1, removed);
      --removed[static_cast<std::size_t>(w)];
    }
    T result = step_(v, removed[static_cast<std::size_t>(v)], static_cast<int>(back.size()), keep, sum);
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  const Graph& g_;
  Step step_;
  std::map<std::pair<int, std::vector<int>>, T> memo_;
};

template <class T>
T second_kind_leading(const Graph& g, std::span<const T> a) {
  auto step = [&](int v, int removed, int d, const T& keep, const T& sum) -> T {
    return (a[static_cast<std::size_t>(v)] - T(static_cast<long>(removed + d))) * keep + sum;
  };
  SecondKindRecurrence<T, decltype(step)> rec(g, step);
  std::vector<int> removed(g.size(), 0);
  return rec.eval(static_cast<int>(g.size()), removed);
}

Rational second_kind_reduced(const Graph& g, std::span<const Count> a, std::span<const Rational> x) {
  auto step = [&](int v, int removed, int d, const Rational& keep, const Rational& sum) -> Rational {
    const Rational& xv = x[static_cast<std::size_t>(v)];
    return Rational((1 + xv * (a[static_cast<std::size_t>(v)] - removed - d)) * keep + xv * sum);
  };
  SecondKindRecurrence<Rational, decltype(step)> rec(g, step);
  std::vector<int> removed(g.size(), 0);
  return rec.eval(static_cast<int>(g.size()), removed);
}

}  // namespace

Rational reduced_P(const Graph& base, std::span<const Count> sizes, std::span<const Rational> x, ExtensionKind kind) {
  if (sizes.size() != base.size() || x.size() != base.size())
    throw ValidationError("one clique size and one variable per base vertex required");
  if (kind == ExtensionKind::Second) {
    build_second_kind(base, sizes);  // validates sizes against degrees
    return second_kind_reduced(base, sizes, x);
  }
  if (has_consecutive_back_neighbors(base)) return first_kind_reduced(base, sizes, x);
  auto ext = build_first_kind(base, sizes);
  PointAssignment point(ext.graph.size());
  for (std::size_t i = 0; i < ext.cliques.size(); ++i)
    for (int v : ext.cliques[i]) point[static_cast<std::size_t>(v)] = x[i];
  return eval_P(ext.graph, point);
}

Rational leading_f(const Graph& base, std::span<const Rational> sizes, ExtensionKind kind) {
  if (sizes.size() != base.size()) throw ValidationError("one clique size per base vertex required");
  if (kind == ExtensionKind::Second) return second_kind_leading<Rational>(base, sizes);
  if (has_consecutive_back_neighbors(base)) return first_kind_leading<Rational>(base, sizes);
  // Direct count of independent n-sets in the built graph.
  std::vector<Count> ints;
  for (const auto& s : sizes) {
    if (s.get_den() != 1 || s < 1)
      throw ValidationError("base ordering has no recurrence form; direct counting needs integer sizes >= 1");
    ints.push_back(s.get_num().get_si());
  }
  auto ext = build_first_kind(base, ints);
  return univariate_P(ext.graph).coeff(static_cast<int>(base.size()));
}

Poly leading_f(const Graph& base, std::span<const Poly> sizes, ExtensionKind kind) {
  if (sizes.size() != base.size()) throw ValidationError("one clique size per base vertex required");
  if (kind == ExtensionKind::Second) return second_kind_leading<Poly>(base, sizes);
  if (!has_consecutive_back_neighbors(base))
    throw ValidationError("symbolic leading coefficient needs consecutive back-neighbors in the base ordering");
  return first_kind_leading<Poly>(base, sizes);
}

Poly U_from_f(const Graph& base, std::span<const Rational> sizes, ExtensionKind kind) {
  // f_n(a_i - y) as a polynomial in y = 1/x, then (-x)^n f(1/x).
  std::vector<Poly> shifted;
  for (const auto& a : sizes) shifted.push_back(Poly{a, -1});
  Poly f_y;
  if (kind == ExtensionKind::First && !has_consecutive_back_neighbors(base)) {
    throw ValidationError("U_from_f needs the recurrence form; use univariate_U on the built graph");
  }
  f_y = leading_f(base, std::span<const Poly>(shifted), kind);
  const int n = static_cast<int>(base.size());
  Poly u = f_y.reversed(n);
  return n % 2 ? -u : u;
}

}  // namespace hatlab
