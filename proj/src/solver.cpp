#include "hatlab/solver.hpp"

#include <algorithm>
#include <cstdlib>

namespace hatlab {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
  if (a != 0 && b > cap / a) return cap + 1;
  return a * b;
}

std::optional<std::chrono::milliseconds> env_timeout() {
  if (const char* env = std::getenv("HATLAB_SOLVER_TIMEOUT_MS")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return std::chrono::milliseconds(v);
  }
  return std::nullopt;
}

// At most k of xs true. Binomial for k <= 2, sequential counter above.
void at_most(Cnf& cnf, const std::vector<int>& xs, int k) {
  const int n = static_cast<int>(xs.size());
  if (k >= n) return;
  const std::size_t before = cnf.clauses.size();
  if (k == 0) {
    for (int x : xs) cnf.clauses.push_back({-x});
  } else if (k == 1) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) cnf.clauses.push_back({-xs[i], -xs[j]});
  } else if (k == 2) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int l = j + 1; l < n; ++l) cnf.clauses.push_back({-xs[i], -xs[j], -xs[l]});
  } else {
    // s(i, j): at least j of x_0..x_i are true, j = 1..k.
    std::vector<std::vector<int>> s(static_cast<std::size_t>(n - 1), std::vector<int>(static_cast<std::size_t>(k)));
    for (auto& row : s)
      for (auto& v : row) v = ++cnf.num_vars;
    auto S = [&](int i, int j) { return s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)]; };
    cnf.clauses.push_back({-xs[0], S(0, 1)});
    for (int j = 2; j <= k; ++j) cnf.clauses.push_back({-S(0, j)});
    for (int i = 1; i < n - 1; ++i) {
      cnf.clauses.push_back({-xs[i], S(i, 1)});
      cnf.clauses.push_back({-S(i - 1, 1), S(i, 1)});
      for (int j = 2; j <= k; ++j) {
        cnf.clauses.push_back({-xs[i], -S(i - 1, j - 1), S(i, j)});
        cnf.clauses.push_back({-S(i - 1, j), S(i, j)});
      }
      cnf.clauses.push_back({-xs[i], -S(i - 1, k)});
    }
    cnf.clauses.push_back({-xs[n - 1], -S(n - 2, k)});
  }
  cnf.cardinality_clauses += cnf.clauses.size() - before;
}

// Advances a mixed-radix counter; false after the last value.
bool next_coloring(std::vector<Count>& c, const std::vector<Count>& h) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (++c[i] < h[i]) return true;
    c[i] = 0;
  }
  return false;
}

}  // namespace

std::uint64_t configuration_count(const HatGame& game, int v) {
  std::uint64_t c = 1;
  for (int w : game.graph().neighbors(v)) c = checked_mul(c, static_cast<std::uint64_t>(game.h(w)), UINT64_MAX / 2);
  return c;
}

std::vector<Count> decode_configuration(const HatGame& game, int v, std::uint64_t sigma) {
  std::vector<Count> out;
  for (int w : game.graph().neighbors(v)) {
    const auto hw = static_cast<std::uint64_t>(game.h(w));
    out.push_back(static_cast<Count>(sigma % hw));
    sigma /= hw;
  }
  return out;
}

GameEncoding::GameEncoding(const HatGame& game, const SolverLimits& limits) : game_(&game) {
  const int n = static_cast<int>(game.size());
  for (int v = 0; v < n; ++v)
    colorings_ = checked_mul(colorings_, static_cast<std::uint64_t>(game.h(v)), limits.max_colorings);
  if (colorings_ > limits.max_colorings)
    throw GuardError("game has more than " + std::to_string(limits.max_colorings) + " colorings");
  for (int v = 0; v < n; ++v) {
    configs_.push_back(configuration_count(game, v));
    if (configs_.back() > limits.max_configurations)
      throw GuardError("sage " + game.graph().name(v) + " sees " + std::to_string(configs_.back()) +
                       " configurations, above the guard " + std::to_string(limits.max_configurations));
  }
  int next = 1;
  for (int v = 0; v < n; ++v) {
    offset_.push_back(next);
    next += static_cast<int>(configs_[static_cast<std::size_t>(v)] * static_cast<std::uint64_t>(game.h(v)));
  }
  cnf_.num_vars = next - 1;
  // One clause per coloring: some sage names its own color.
  std::vector<Count> coloring(static_cast<std::size_t>(n), 0);
  do {
    std::vector<int> clause;
    for (int v = 0; v < n; ++v) clause.push_back(var(v, config_of(v, coloring), coloring[static_cast<std::size_t>(v)]));
    cnf_.clauses.push_back(std::move(clause));
  } while (next_coloring(coloring, game.hatness()));
  cnf_.coloring_clauses = cnf_.clauses.size();
  for (int v = 0; v < n; ++v)
    for (std::uint64_t s = 0; s < configs_[static_cast<std::size_t>(v)]; ++s) {
      std::vector<int> xs;
      for (Count c = 0; c < game.h(v); ++c) xs.push_back(var(v, s, c));
      at_most(cnf_, xs, static_cast<int>(game.g(v)));
    }
}

int GameEncoding::var(int v, std::uint64_t sigma, Count color) const {
  return offset_[static_cast<std::size_t>(v)] + static_cast<int>(sigma * static_cast<std::uint64_t>(game_->h(v))) +
         static_cast<int>(color);
}

std::uint64_t GameEncoding::config_of(int v, const std::vector<Count>& coloring) const {
  std::uint64_t sigma = 0, radix = 1;
  for (int w : game_->graph().neighbors(v)) {
    sigma += static_cast<std::uint64_t>(coloring[static_cast<std::size_t>(w)]) * radix;
    radix *= static_cast<std::uint64_t>(game_->h(w));
  }
  return sigma;
}

Cnf encode(const HatGame& game, const SolverLimits& limits) { return GameEncoding(game, limits).cnf(); }

namespace {

// Literal codes: 2x for x, 2x+1 for -x.
inline int lit_code(int lit) { return lit > 0 ? 2 * lit : 2 * -lit + 1; }
inline int neg(int code) { return code ^ 1; }
inline int var_of(int code) { return code >> 1; }

class Cdcl {
 public:
  Cdcl(const Cnf& cnf, std::optional<std::chrono::steady_clock::time_point> deadline,
       std::optional<std::uint64_t> max_conflicts)
      : n_(cnf.num_vars), deadline_(deadline), max_conflicts_(max_conflicts) {
    value_.assign(static_cast<std::size_t>(2 * n_ + 2), 0);
    level_.assign(static_cast<std::size_t>(n_ + 1), -1);
    reason_.assign(static_cast<std::size_t>(n_ + 1), -1);
    seen_.assign(static_cast<std::size_t>(n_ + 1), 0);
    phase_.assign(static_cast<std::size_t>(n_ + 1), false);
    activity_.assign(static_cast<std::size_t>(n_ + 1), 0.0);
    heap_pos_.assign(static_cast<std::size_t>(n_ + 1), -1);
    for (int v = 1; v <= n_; ++v) heap_insert(v);
    watches_.resize(static_cast<std::size_t>(2 * n_ + 2));
    for (const auto& c : cnf.clauses) {
      std::vector<int> codes;
      for (int l : c) codes.push_back(lit_code(l));
      std::sort(codes.begin(), codes.end());
      codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
      bool taut = false;
      for (std::size_t i = 0; i + 1 < codes.size(); ++i) taut = taut || codes[i + 1] == neg(codes[i]);
      if (taut) continue;
      if (codes.empty()) {
        trivially_unsat_ = true;
        continue;
      }
      add_clause(std::move(codes));
    }
  }

  SatResult run() {
    SatResult out;
    if (trivially_unsat_) return finish(out, SatStatus::Unsat);
    for (int u : units_)
      if (!enqueue(u, -1)) return finish(out, SatStatus::Unsat);
    while (true) {
      int conflict = propagate();
      if (conflict >= 0) {
        ++stats_.conflicts;
        if (decision_level() == 0) return finish(out, SatStatus::Unsat);
        int back = 0;
        std::vector<int> learned = analyze(conflict, back);
        backtrack(back);
        var_inc_ /= 0.95;
        if (learned.size() == 1) {
          enqueue(learned[0], -1);
        } else {
          int idx = add_clause(learned);
          enqueue(learned[0], idx);
        }
        ++stats_.learned;
        if (deadline_ && (stats_.conflicts & 255) == 0 && std::chrono::steady_clock::now() > *deadline_)
          return finish(out, SatStatus::Unknown);
        if (max_conflicts_ && stats_.conflicts >= *max_conflicts_) return finish(out, SatStatus::Unknown);
        if (++since_restart_ >= 100 * luby(restarts_)) {
          since_restart_ = 0;
          ++restarts_;
          backtrack(0);
        }
        continue;
      }
      int pick = 0;
      while (!heap_.empty()) {
        int v = heap_pop();
        if (value_[static_cast<std::size_t>(2 * v)] == 0) {
          pick = v;
          break;
        }
      }
      if (pick == 0) {
        out.model.assign(static_cast<std::size_t>(n_ + 1), false);
        for (int x = 1; x <= n_; ++x) out.model[static_cast<std::size_t>(x)] = value_[static_cast<std::size_t>(2 * x)] > 0;
        return finish(out, SatStatus::Sat);
      }
      ++stats_.decisions;
      if (deadline_ && (stats_.decisions & 1023) == 0 && std::chrono::steady_clock::now() > *deadline_)
        return finish(out, SatStatus::Unknown);
      trail_lim_.push_back(static_cast<int>(trail_.size()));
      enqueue(2 * pick + (phase_[static_cast<std::size_t>(pick)] ? 0 : 1), -1);
    }
  }

 private:
  SatResult& finish(SatResult& out, SatStatus s) {
    out.status = s;
    out.stats = stats_;
    return out;
  }

  int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  // Returns the clause index, or -1 for units collected for the root level.
  int add_clause(std::vector<int> codes) {
    if (codes.size() == 1) {
      units_.push_back(codes[0]);
      return -1;
    }
    const int idx = static_cast<int>(clauses_.size());
    watches_[static_cast<std::size_t>(codes[0])].push_back(idx);
    watches_[static_cast<std::size_t>(codes[1])].push_back(idx);
    clauses_.push_back(std::move(codes));
    return idx;
  }

  bool enqueue(int code, int reason) {
    const int v = value_[static_cast<std::size_t>(code)];
    if (v != 0) return v > 0;
    value_[static_cast<std::size_t>(code)] = 1;
    value_[static_cast<std::size_t>(neg(code))] = -1;
    level_[static_cast<std::size_t>(var_of(code))] = decision_level();
    reason_[static_cast<std::size_t>(var_of(code))] = reason;
    trail_.push_back(code);
    return true;
  }

  // Two-watched-literal propagation; watched literals sit at positions 0, 1.
  int propagate() {
    while (qhead_ < trail_.size()) {
      const int falsified = neg(trail_[qhead_++]);
      ++stats_.propagations;
      auto& ws = watches_[static_cast<std::size_t>(falsified)];
      std::size_t keep = 0;
      for (std::size_t i = 0; i < ws.size(); ++i) {
        const int ci = ws[i];
        auto& c = clauses_[static_cast<std::size_t>(ci)];
        if (c[0] == falsified) std::swap(c[0], c[1]);
        if (value_[static_cast<std::size_t>(c[0])] > 0) {
          ws[keep++] = ci;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.size(); ++k)
          if (value_[static_cast<std::size_t>(c[k])] >= 0) {
            std::swap(c[1], c[k]);
            watches_[static_cast<std::size_t>(c[1])].push_back(ci);
            moved = true;
            break;
          }
        if (moved) continue;
        ws[keep++] = ci;
        if (value_[static_cast<std::size_t>(c[0])] < 0) {
          for (std::size_t j = i + 1; j < ws.size(); ++j) ws[keep++] = ws[j];
          ws.resize(keep);
          qhead_ = trail_.size();
          return ci;
        }
        enqueue(c[0], ci);
      }
      ws.resize(keep);
    }
    return -1;
  }

  // First-UIP learning. learned[0] is the asserting literal, learned[1] has
  // the highest remaining level.
  std::vector<int> analyze(int conflict, int& back_level) {
    std::vector<int> learned{0};
    int pending = 0;
    int p = -1;
    std::size_t idx = trail_.size();
    int ci = conflict;
    do {
      const auto& c = clauses_[static_cast<std::size_t>(ci)];
      for (std::size_t k = (p == -1 ? 0 : 1); k < c.size(); ++k) {
        const int q = c[k];
        const int v = var_of(q);
        if (seen_[static_cast<std::size_t>(v)] || level_[static_cast<std::size_t>(v)] == 0) continue;
        seen_[static_cast<std::size_t>(v)] = 1;
        bump(v);
        if (level_[static_cast<std::size_t>(v)] == decision_level())
          ++pending;
        else
          learned.push_back(q);
      }
      while (!seen_[static_cast<std::size_t>(var_of(trail_[--idx]))]) {
      }
      p = trail_[idx];
      ci = reason_[static_cast<std::size_t>(var_of(p))];
      seen_[static_cast<std::size_t>(var_of(p))] = 0;
      --pending;
      if (pending > 0 && ci >= 0) {
        // Reason clauses keep their implied literal at position 0.
        auto& rc = clauses_[static_cast<std::size_t>(ci)];
        if (rc[0] != p)
          for (std::size_t k = 1; k < rc.size(); ++k)
            if (rc[k] == p) std::swap(rc[0], rc[k]);
      }
    } while (pending > 0);
    learned[0] = neg(p);
    back_level = 0;
    std::size_t best = 1;
    for (std::size_t k = 1; k < learned.size(); ++k) {
      seen_[static_cast<std::size_t>(var_of(learned[k]))] = 0;
      const int lv = level_[static_cast<std::size_t>(var_of(learned[k]))];
      if (lv > back_level) {
        back_level = lv;
        best = k;
      }
    }
    if (learned.size() > 1) std::swap(learned[1], learned[best]);
    return learned;
  }

  void backtrack(int level) {
    if (decision_level() <= level) return;
    const auto stop = static_cast<std::size_t>(trail_lim_[static_cast<std::size_t>(level)]);
    while (trail_.size() > stop) {
      const int code = trail_.back();
      trail_.pop_back();
      const int v = var_of(code);
      value_[static_cast<std::size_t>(code)] = 0;
      value_[static_cast<std::size_t>(neg(code))] = 0;
      level_[static_cast<std::size_t>(v)] = -1;
      reason_[static_cast<std::size_t>(v)] = -1;
      phase_[static_cast<std::size_t>(v)] = (code & 1) == 0;
      heap_insert(v);
    }
    trail_lim_.resize(static_cast<std::size_t>(level));
    qhead_ = trail_.size();
  }

  // Luby sequence 1 1 2 1 1 2 4 ...
  static std::uint64_t luby(std::uint64_t i) {
    std::uint64_t size = 1, seq = 0;
    while (size < i + 1) {
      ++seq;
      size = 2 * size + 1;
    }
    while (size - 1 != i) {
      size = (size - 1) >> 1;
      --seq;
      i = i % size;
    }
    return std::uint64_t{1} << seq;
  }

  // Max-heap on (activity, -index): ties go to the lowest index.
  bool before(int a, int b) const {
    const double x = activity_[static_cast<std::size_t>(a)], y = activity_[static_cast<std::size_t>(b)];
    return x != y ? x > y : a < b;
  }
  void heap_up(std::size_t i) {
    const int v = heap_[i];
    while (i > 0) {
      std::size_t p = (i - 1) / 2;
      if (!before(v, heap_[p])) break;
      heap_[i] = heap_[p];
      heap_pos_[static_cast<std::size_t>(heap_[i])] = static_cast<int>(i);
      i = p;
    }
    heap_[i] = v;
    heap_pos_[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  void heap_down(std::size_t i) {
    const int v = heap_[i];
    while (true) {
      std::size_t c = 2 * i + 1;
      if (c >= heap_.size()) break;
      if (c + 1 < heap_.size() && before(heap_[c + 1], heap_[c])) ++c;
      if (!before(heap_[c], v)) break;
      heap_[i] = heap_[c];
      heap_pos_[static_cast<std::size_t>(heap_[i])] = static_cast<int>(i);
      i = c;
    }
    heap_[i] = v;
    heap_pos_[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  void heap_insert(int v) {
    if (heap_pos_[static_cast<std::size_t>(v)] >= 0) return;
    heap_.push_back(v);
    heap_up(heap_.size() - 1);
  }
  int heap_pop() {
    const int top = heap_.front();
    heap_pos_[static_cast<std::size_t>(top)] = -1;
    const int last = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
      heap_[0] = last;
      heap_down(0);
    }
    return top;
  }
  void bump(int v) {
    auto& a = activity_[static_cast<std::size_t>(v)];
    a += var_inc_;
    if (a > 1e100) {
      for (auto& x : activity_) x *= 1e-100;
      var_inc_ *= 1e-100;
    }
    if (heap_pos_[static_cast<std::size_t>(v)] >= 0) heap_up(static_cast<std::size_t>(heap_pos_[static_cast<std::size_t>(v)]));
  }

  int n_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::optional<std::uint64_t> max_conflicts_;
  std::vector<std::vector<int>> clauses_;
  std::vector<std::vector<int>> watches_;
  std::vector<int> units_;
  std::vector<signed char> value_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<char> seen_;
  std::vector<int> trail_;
  std::vector<int> trail_lim_;
  std::size_t qhead_ = 0;
  std::vector<bool> phase_;
  std::vector<double> activity_;
  std::vector<int> heap_;
  std::vector<int> heap_pos_;
  double var_inc_ = 1.0;
  std::uint64_t since_restart_ = 0;
  std::uint64_t restarts_ = 0;
  bool trivially_unsat_ = false;
  SatStats stats_;
};

}  // namespace

SatResult solve_cnf(const Cnf& cnf, std::optional<std::chrono::steady_clock::time_point> deadline,
                    std::optional<std::uint64_t> max_conflicts) {
  return Cdcl(cnf, deadline, max_conflicts).run();
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Winning: return "winning";
    case Verdict::Losing: return "losing";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

GameVerdict decide_game(const HatGame& game, const SolverLimits& limits) {
  GameEncoding enc(game, limits);
  GameVerdict out;
  out.variables = enc.cnf().num_vars;
  out.clauses = enc.cnf().clauses.size();
  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (auto t = limits.timeout ? limits.timeout : env_timeout()) deadline = std::chrono::steady_clock::now() + *t;
  SatResult res = solve_cnf(enc.cnf(), deadline, limits.max_conflicts);
  out.stats = res.stats;
  if (res.status == SatStatus::Unknown) return out;
  if (res.status == SatStatus::Unsat) {
    out.status = Verdict::Losing;
    return out;
  }
  out.status = Verdict::Winning;
  Strategy s;
  for (int v = 0; v < static_cast<int>(game.size()); ++v) {
    auto& per = s.guesses.emplace_back(enc.configurations(v));
    for (std::uint64_t sigma = 0; sigma < enc.configurations(v); ++sigma)
      for (Count c = 0; c < game.h(v); ++c)
        if (res.model[static_cast<std::size_t>(enc.var(v, sigma, c))]) per[sigma].push_back(c);
  }
  out.strategy = std::move(s);
  return out;
}

StrategyCheck verify_strategy(const HatGame& game, const Strategy& s) {
  const int n = static_cast<int>(game.size());
  std::vector<std::string> problems;
  if (static_cast<int>(s.guesses.size()) != n) {
    problems.push_back("strategy covers " + std::to_string(s.guesses.size()) + " of " + std::to_string(n) + " sages");
  } else {
    for (int v = 0; v < n; ++v) {
      const auto& per = s.guesses[static_cast<std::size_t>(v)];
      const auto need = configuration_count(game, v);
      if (per.size() != need)
        problems.push_back(game.graph().name(v) + ": " + std::to_string(per.size()) + " of " + std::to_string(need) +
                           " configurations");
      for (std::size_t sigma = 0; sigma < per.size(); ++sigma) {
        const auto& gs = per[sigma];
        bool bad = static_cast<Count>(gs.size()) > game.g(v);
        for (Count c : gs) bad = bad || c < 0 || c >= game.h(v);
        if (bad) problems.push_back(game.graph().name(v) + ": invalid guess set at configuration " + std::to_string(sigma));
      }
    }
  }
  if (!problems.empty()) {
    std::string msg = "incomplete strategy:";
    for (const auto& p : problems) msg += " " + p + ";";
    throw ValidationError(msg);
  }
  // Membership tables avoid scanning guess lists per coloring.
  std::vector<std::vector<std::vector<char>>> hit(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    for (const auto& gs : s.guesses[static_cast<std::size_t>(v)]) {
      std::vector<char> row(static_cast<std::size_t>(game.h(v)), 0);
      for (Count c : gs) row[static_cast<std::size_t>(c)] = 1;
      hit[static_cast<std::size_t>(v)].push_back(std::move(row));
    }
  SolverLimits unlimited;
  unlimited.max_colorings = UINT64_MAX / 4;
  std::vector<Count> coloring(static_cast<std::size_t>(n), 0);
  StrategyCheck out;
  do {
    bool someone = false;
    for (int v = 0; v < n && !someone; ++v) {
      std::uint64_t sigma = 0, radix = 1;
      for (int w : game.graph().neighbors(v)) {
        sigma += static_cast<std::uint64_t>(coloring[static_cast<std::size_t>(w)]) * radix;
        radix *= static_cast<std::uint64_t>(game.h(w));
      }
      someone = hit[static_cast<std::size_t>(v)][sigma][static_cast<std::size_t>(coloring[static_cast<std::size_t>(v)])];
    }
    if (!someone) {
      out.counterexample = coloring;
      return out;
    }
  } while (next_coloring(coloring, game.hatness()));
  out.ok = true;
  return out;
}

HgResult hg_search(const Graph& g, Count h_max, const SolverLimits& limits) {
  HgResult out;
  bool lost = false;
  for (Count h = 1; h <= h_max; ++h) {
    Verdict v = Verdict::Unknown;
    try {
      v = decide_game(uniform_game(g, h), limits).status;
    } catch (const GuardError&) {
      v = Verdict::Unknown;
    }
    out.levels.push_back(v);
    if (v == Verdict::Unknown) {
      if (!lost) {
        out.exact = false;
        out.undecided_level = h;
      }
      break;
    }
    if (v == Verdict::Winning) {
      if (lost) out.monotone = false;
      else out.hg = h;
    }
    if (lost) break;  // one level past the first loss
    if (v == Verdict::Losing) lost = true;
  }
  if (!lost && out.exact && out.hg == h_max) {
    // Every level up to h_max was winning: HG >= h_max only.
    out.exact = false;
  }
  return out;
}

}  // namespace hatlab
