#include "hatlab/certify.hpp"

#include <cstdlib>

#include "hatlab/indpoly.hpp"

namespace hatlab {

int corner_cutoff() {
  if (const char* env = std::getenv("HATLAB_CORNER_CUTOFF")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0 && v <= 30) return static_cast<int>(v);
  }
  return 22;
}

namespace {

const char* kCornerArgument =
    "Z is multilinear (each vertex occurs at most once per independent set). On the box [0, r] a "
    "multilinear function attains its minimum at a corner, and restricting to one coordinate at a time "
    "gives an affine function, so a zero inside the box other than r would force a non-positive corner "
    "other than r. Hence Z(r) = 0 with every other corner positive gives Z > 0 on the box minus r.";

std::vector<std::string> support_names(const Graph& g, std::uint64_t mask) {
  std::vector<std::string> out;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (mask >> v & 1U) out.push_back(g.names()[v]);
  return out;
}

// W(T) = prod_{v in T} h_v * Z_{G[T]}(r), an integer. With u the lowest
// vertex of T:
//   W(T) = h_u W(T - u) - g_u prod_{w in N(u) & T} h_w W(T - N+(u))
template <class Int>
void corner_sweep(const HatGame& game, MaximalityCertificate& cert) {
  const std::size_t n = game.size();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> closed(n);
  for (std::size_t v = 0; v < n; ++v) {
    closed[v] = std::uint64_t{1} << v;
    for (int w : game.graph().neighbors(static_cast<int>(v))) closed[v] |= std::uint64_t{1} << w;
  }
  std::vector<Int> W(full + 1);
  W[0] = 1;
  cert.corner_count = 1;
  for (std::uint64_t T = 1; T <= full; ++T) {
    const int u = __builtin_ctzll(T);
    const std::uint64_t rest = T & ~(std::uint64_t{1} << u);
    Int hprod = 1;
    for (std::uint64_t nb = closed[static_cast<std::size_t>(u)] & rest; nb; nb &= nb - 1)
      hprod *= Int(game.h(__builtin_ctzll(nb)));
    Int value = Int(game.h(u)) * W[rest] - Int(game.g(u)) * hprod * W[T & ~closed[static_cast<std::size_t>(u)]];
    W[T] = value;
    ++cert.corner_count;
    if (T != full && value <= 0) {
      cert.failing_corner = support_names(game.graph(), T);
      Int denom = 1;
      for (std::uint64_t b = T; b; b &= b - 1) denom *= Int(game.h(__builtin_ctzll(b)));
      if constexpr (std::is_same_v<Int, Integer>) {
        cert.failing_value = Rational(value, denom);
      } else {
        // Both fit in 127 bits; go through decimal strings.
        auto str = [](Int x) {
          bool neg = x < 0;
          if (neg) x = -x;
          std::string s;
          do {
            s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(x % 10)));
            x /= 10;
          } while (x);
          return neg ? "-" + s : s;
        };
        cert.failing_value = Rational(Integer(str(value), 10), Integer(str(denom), 10));
      }
      cert.failing_value->canonicalize();
      return;
    }
  }
}

// First leaf that is not precise or node that is not a sum, in tree order.
std::string compositional_obstacle(const GameExpr& e) {
  struct V {
    std::string operator()(const CliqueLeaf& l) const {
      if (clique_criterion(HatGame(Graph::complete(l.vertices), l.h, l.g)).precise) return {};
      std::string s;
      for (const auto& v : l.vertices) s += (s.empty() ? "" : ",") + v;
      return "leaf on {" + s + "} is not precise";
    }
    std::string operator()(const SumExpr& n) const { return first(n.left, n.right); }
    std::string operator()(const ProductExpr& n) const { return first(n.left, n.right); }
    std::string operator()(const SubstituteExpr& n) const {
      auto s = (*this)(n.inner);
      return s.empty() ? compositional_obstacle(n.outer) : s;
    }
    std::string operator()(const SumLoseExpr&) const { return "losing sum node is not a sum of maximal games"; }
    std::string operator()(const PendantLoseExpr&) const { return "pendant node is not a sum of maximal games"; }
    static std::string first(const GameExpr& a, const GameExpr& b) {
      auto s = compositional_obstacle(a);
      return s.empty() ? compositional_obstacle(b) : s;
    }
  };
  return std::visit(V{}, e->node);
}

}  // namespace

MaximalityCertificate check_maximal_direct(const HatGame& game, std::optional<int> cutoff) {
  MaximalityCertificate cert;
  cert.method = MaximalityMethod::CornerCheck;
  const int limit = cutoff.value_or(corner_cutoff());
  const auto r = fraction_vector(game);
  cert.z_at_r = eval_Z(game.graph(), r);
  if (cert.z_at_r != 0) {
    cert.reason = "Z(r) = " + to_string(cert.z_at_r) + " is not zero";
    cert.text = "refuted: " + cert.reason;
    return cert;
  }
  if (static_cast<int>(game.size()) > limit) {
    cert.applicable = false;
    cert.reason = std::to_string(game.size()) + " vertices exceed the corner cutoff " + std::to_string(limit) +
                  "; use the compositional route";
    cert.text = cert.reason;
    return cert;
  }
  // Magnitudes stay below prod h * 2^n.
  std::size_t bits = game.size() + 2;
  for (Count h : game.hatness()) bits += static_cast<std::size_t>(64 - __builtin_clzll(static_cast<unsigned long long>(h)));
  if (bits < 120)
    corner_sweep<__int128>(game, cert);
  else
    corner_sweep<Integer>(game, cert);
  if (cert.failing_value) {
    std::string s;
    for (const auto& v : cert.failing_corner) s += (s.empty() ? "" : ",") + v;
    cert.reason = "corner {" + s + "} has Z = " + to_string(*cert.failing_value) + " <= 0";
    cert.text = "refuted: " + cert.reason;
    return cert;
  }
  cert.maximal = true;
  cert.text = "Z(r) = 0 and all " + std::to_string(cert.corner_count - 1) + " other corners of [0, r] are positive. " +
              kCornerArgument;
  return cert;
}

MaximalityCertificate check_maximal_compositional(const GameExpr& e) {
  MaximalityCertificate cert;
  cert.method = MaximalityMethod::Compositional;
  Certificate c = eval_expr(e);
  cert.composition = c.derivation;
  const auto r = fraction_vector(c.game);
  cert.z_at_r = eval_Z(c.game.graph(), r);
  if (!c.precise_bricks || !c.maximal) {
    cert.applicable = false;
    cert.reason = "not applicable: " + compositional_obstacle(e);
    cert.text = cert.reason;
    return cert;
  }
  if (cert.z_at_r != 0) {
    // Cannot happen for a correct construction; reported instead of trusted.
    cert.reason = "consistency check failed: Z(r) = " + to_string(cert.z_at_r);
    cert.text = cert.reason;
    return cert;
  }
  cert.maximal = true;
  cert.text = "every leaf is a precise clique game, which is maximal since Z = 1 - sum g/h vanishes at r and is "
              "positive below it; sums, products and clique substitutions of maximal games are maximal. "
              "Z(r) = 0 re-checked on the composite by exact evaluation.";
  return cert;
}

LosingCertificate losing_by_Z_positive(const HatGame& game) {
  LosingCertificate out;
  out.z_at_r = eval_Z(game.graph(), fraction_vector(game));
  out.losing = out.z_at_r > 0;
  out.text = out.losing ? "Z(r) = " + to_string(out.z_at_r) + " > 0, so the game is losing"
                        : "Z(r) = " + to_string(out.z_at_r) + " <= 0: inconclusive";
  return out;
}

MuHatResult mu_hat_chordal(const Graph& g, const std::optional<Rational>& root_candidate) {
  if (g.empty()) throw ValidationError("mu-hat of the empty graph is undefined");
  auto peo = perfect_elimination_ordering(g);
  if (!peo) throw ValidationError("graph is not chordal");
  MuHatResult out;
  out.elimination_order = *peo;
  out.U = univariate_U(g);
  out.root = smallest_positive_root(out.U, root_candidate);
  if (!out.root.root) throw ValidationError("U_G has no positive root");
  const auto& iv = *out.root.root;
  if (iv.exact_root) {
    out.value = 1 / *iv.exact_root;
    out.lower = out.upper = *out.value;
  } else {
    out.lower = 1 / iv.upper;
    out.upper = 1 / iv.lower;
  }
  out.note = "HG(G) <= mu-hat(G)";
  return out;
}

}  // namespace hatlab
