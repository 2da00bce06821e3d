#include "hatlab/indpoly.hpp"

#include <algorithm>
#include <bit>

namespace hatlab {

VertexSet VertexSet::full(std::size_t n) {
  VertexSet s(n);
  for (std::size_t v = 0; v < n; ++v) s.insert(static_cast<int>(v));
  return s;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t VertexSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t VertexSet::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

template <class T>
std::vector<VertexSet> IndependenceRecurrence<T>::components(const VertexSet& s) const {
  std::vector<VertexSet> out;
  VertexSet seen(g_.size());
  std::vector<int> stack;
  s.for_each([&](int root) {
    if (seen.contains(root)) return;
    VertexSet comp(g_.size());
    seen.insert(root);
    stack.push_back(root);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.insert(u);
      for (int w : g_.neighbors(u)) {
        if (s.contains(w) && !seen.contains(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  });
  return out;
}

template <class T>
T IndependenceRecurrence<T>::eval(const VertexSet& s) {
  if (s.empty()) return T(1);
  if (auto it = memo_.find(s); it != memo_.end()) return it->second;
  auto comps = components(s);
  T result(1);
  if (comps.size() == 1) {
    result = eval_connected(s);
  } else {
    for (const auto& c : comps) result *= eval(c);
  }
  if (memo_.size() >= budget_)
    throw GuardError("independence polynomial recurrence exceeded its memo budget of " + std::to_string(budget_) +
                     " subproblems");
  memo_.emplace(s, result);
  return result;
}

template <class T>
T IndependenceRecurrence<T>::eval_connected(const VertexSet& s) {
  if (auto it = memo_.find(s); it != memo_.end()) return it->second;
  // Pivot: minimum degree vertex of G[s], extended greedily to a maximal clique.
  int pivot = -1, best = 0;
  s.for_each([&](int v) {
    int d = 0;
    for (int w : g_.neighbors(v)) d += s.contains(w) ? 1 : 0;
    if (pivot < 0 || d < best) {
      pivot = v;
      best = d;
    }
  });
  std::vector<int> clique{pivot};
  for (int w : g_.neighbors(pivot)) {
    if (!s.contains(w)) continue;
    if (std::all_of(clique.begin(), clique.end(), [&](int c) { return g_.adjacent(c, w); })) clique.push_back(w);
  }
  VertexSet rest = s;
  for (int c : clique) rest.erase(c);
  T result = eval(rest);
  for (int u : clique) {
    VertexSet outside = s;
    outside.erase(u);
    for (int w : g_.neighbors(u)) {
      if (outside.contains(w)) outside.erase(w);
    }
    result += w_[static_cast<std::size_t>(u)] * eval(outside);
  }
  return result;
}

template class IndependenceRecurrence<Rational>;
template class IndependenceRecurrence<Poly>;

Rational eval_P(const Graph& g, const PointAssignment& x) {
  if (x.size() != g.size()) throw ValidationError("point assignment must cover every vertex");
  IndependenceRecurrence<Rational> rec(g, x);
  return rec.evaluate();
}

Rational eval_Z(const Graph& g, const PointAssignment& x) {
  PointAssignment neg(x.size());
  std::transform(x.begin(), x.end(), neg.begin(), [](const Rational& q) { return Rational(-q); });
  return eval_P(g, neg);
}

Rational eval_Z_uniform(const Graph& g, const Rational& x) { return eval_Z(g, PointAssignment(g.size(), x)); }

Poly univariate_P(const Graph& g) {
  IndependenceRecurrence<Poly> rec(g, std::vector<Poly>(g.size(), Poly::x()));
  return rec.evaluate();
}

Poly univariate_U(const Graph& g) {
  IndependenceRecurrence<Poly> rec(g, std::vector<Poly>(g.size(), -Poly::x()));
  return rec.evaluate();
}

}  // namespace hatlab
