#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "hatlab/graph.hpp"
#include "hatlab/polynomial.hpp"
#include "hatlab/rational.hpp"

namespace hatlab {

/// Point x = (x_v) indexed like the graph's vertices.
using PointAssignment = std::vector<Rational>;

/// Fixed-width vertex subset.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}
  static VertexSet full(std::size_t n);

  std::size_t universe() const { return n_; }
  bool contains(int v) const { return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U; }
  void insert(int v) { words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool empty() const;
  std::size_t count() const;
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        f(static_cast<int>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  std::size_t hash() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

/// Evaluates the independence polynomial sum_I prod_{v in I} w_v for
/// arbitrary vertex weights in a commutative ring T (rationals, polynomials).
/// Uses the clique recurrence
///   P(S) = P(S - K) + sum_{u in K} w_u P(S - N+(u))
/// with K the greedy maximal clique around a minimum-degree vertex,
/// splitting into connected components first and memoizing on vertex
/// subsets for the duration of one evaluation.
template <class T>
class IndependenceRecurrence {
 public:
  IndependenceRecurrence(const Graph& g, std::vector<T> weights, std::size_t memo_budget = 4'000'000)
      : g_(g), w_(std::move(weights)), budget_(memo_budget) {}

  T evaluate() { return eval(VertexSet::full(g_.size())); }
  T evaluate(const VertexSet& s) { return eval(s); }
  std::size_t memo_size() const { return memo_.size(); }

 private:
  T eval(const VertexSet& s);
  T eval_connected(const VertexSet& s);
  std::vector<VertexSet> components(const VertexSet& s) const;

  const Graph& g_;
  std::vector<T> w_;
  std::size_t budget_;
  std::unordered_map<VertexSet, T, VertexSetHash> memo_;
};

/// P_G(x).
Rational eval_P(const Graph& g, const PointAssignment& x);
/// Z_G(x) = P_G(-x).
Rational eval_Z(const Graph& g, const PointAssignment& x);
/// Z_G with every variable set to the same value.
Rational eval_Z_uniform(const Graph& g, const Rational& x);
/// Univariate independence polynomial: coefficient k counts independent
/// k-sets.
Poly univariate_P(const Graph& g);
/// U_G(x) = P_G(-x, ..., -x).
Poly univariate_U(const Graph& g);

extern template class IndependenceRecurrence<Rational>;
extern template class IndependenceRecurrence<Poly>;

}  // namespace hatlab
