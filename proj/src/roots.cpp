#include "hatlab/roots.hpp"

#include <algorithm>

#include "hatlab/extensions.hpp"
#include "hatlab/graph.hpp"

namespace hatlab {

SturmSequence::SturmSequence(const Poly& p) {
  if (p.is_zero()) throw ValidationError("Sturm sequence of the zero polynomial");
  Poly g = Poly::gcd(p, p.derivative());
  Poly q = Poly::divmod(p, g).first.primitive();
  chain_.push_back(q);
  if (q.degree() < 1) return;
  chain_.push_back(q.derivative().primitive());
  while (true) {
    Poly r = Poly::divmod(chain_[chain_.size() - 2], chain_.back()).second;
    if (r.is_zero()) break;
    chain_.push_back((-r).primitive());
  }
}

int SturmSequence::variations(const std::optional<Rational>& at, int dir) const {
  int changes = 0, last = 0;
  for (const auto& s : chain_) {
    int sg = at ? sgn(s(*at)) : s.sign_at_infinity(dir);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

int SturmSequence::count(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const {
  if (lo && hi && *lo >= *hi) return 0;
  return variations(lo, -1) - variations(hi, 1);
}

int sturm_count(const Poly& p, const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  return SturmSequence(p).count(lo, hi);
}

Rational root_tolerance() { return Rational(1, 1000000000000L); }

Rational simplest_between(const Rational& lo, const Rational& hi) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (lo == Rational(fl)) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  Rational inner = simplest_between(1 / (hi - fl), 1 / (lo - fl));
  Rational out = fl + 1 / inner;
  out.canonicalize();
  return out;
}

std::vector<Integer> integer_coefficients(const Poly& p) {
  std::vector<Integer> out;
  const Poly prim = p.primitive();
  for (const auto& c : prim.coeffs()) out.push_back(c.get_num());
  return out;
}

namespace {

Rational cauchy_bound(const Poly& p) {
  Rational m = 0;
  const Rational lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(i)) / lead));
  return m + 1;
}

}  // namespace

SmallestRoot smallest_positive_root(const Poly& p, const std::optional<Rational>& candidate) {
  if (p.is_zero()) throw ValidationError("smallest root of the zero polynomial");
  if (p(0) == 0) throw ValidationError("p(0) = 0: smallest positive root needs a nonzero constant term");
  SturmSequence sturm(p);
  SmallestRoot out;
  const Rational zero = 0;
  if (sturm.count(zero, std::nullopt) == 0) {
    if (candidate) out.candidate_note = "no positive real root";
    return out;
  }
  if (candidate) {
    const Rational& c = *candidate;
    if (c <= 0) {
      out.candidate_note = "candidate is not positive";
    } else if (p(c) != 0) {
      out.candidate_note = "p(candidate) = " + to_string(p(c)) + " is not zero";
    } else if (int below = sturm.count(zero, c) - 1; below != 0) {
      out.candidate_note = std::to_string(below) + " root(s) lie in (0, candidate)";
    } else {
      out.root = IsolatingInterval{c, c, c};
      out.candidate_confirmed = true;
      return out;
    }
  }
  // Invariant: no root in (0, lo], at least one in (lo, hi].
  Rational lo = 0, hi = cauchy_bound(sturm.square_free());
  const Rational tol = root_tolerance();
  const Integer lead = sturm.square_free().leading().get_num();
  const Rational separation(1, Integer(lead * lead));
  while (true) {
    const int inside = sturm.count(lo, hi);
    const Rational width = hi - lo;
    if (inside == 1 && width <= tol && width < separation) break;
    Rational mid = (lo + hi) / 2;
    if (sturm.count(lo, mid) >= 1)
      hi = mid;
    else
      lo = mid;
  }
  IsolatingInterval iv{lo, hi, std::nullopt};
  // Rational roots have denominators dividing the leading coefficient, and
  // two such rationals are at least 1/lead^2 apart, so the interval holds at
  // most one of them and it is the simplest rational there.
  Rational s = simplest_between(lo, hi);
  if (s > lo && p(s) == 0) iv.exact_root = s;
  out.root = iv;
  return out;
}

FamilyTag parse_family(const std::string& name) {
  if (name == "A") return FamilyTag::A;
  if (name == "B") return FamilyTag::B;
  if (name == "L") return FamilyTag::L;
  if (name == "Phi" || name == "phi" || name == "F") return FamilyTag::Phi;
  if (name == "E") return FamilyTag::E;
  throw ValidationError("unknown family '" + name + "' (expected A, B, L, Phi or E)");
}

std::string family_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::A: return "A";
    case FamilyTag::B: return "B";
    case FamilyTag::L: return "L";
    case FamilyTag::Phi: return "Phi";
    case FamilyTag::E: return "E";
  }
  return "?";
}

namespace {

const Poly K = Poly::x();

Poly family_A(int n) {
  Poly prev = 1, cur = K + 1;
  if (n == 0) return prev;
  for (int i = 2; i <= n; ++i) {
    Poly next = K * (cur + prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly family_B(int n) {
  if (n == 1) return K + 3;
  return (K + 2) * family_A(n - 1) + K * family_A(n - 2);
}

Poly family_L(int n) {
  if (n == 2) return (K + 2) * (K + 4);
  return (K + 2) * family_B(n - 1) + K * family_B(n - 2);
}

Poly family_Phi(int n) {
  Poly prev = 1, cur = K;
  if (n == 0) return prev;
  for (int i = 2; i <= n; ++i) {
    Poly next = K * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly family_E(int n) {
  std::vector<Poly> sizes(static_cast<std::size_t>(n), K);
  sizes.front() = K + 1;
  sizes.back() = K + 1;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    names.push_back("v" + std::to_string(i));
    if (i) edges.emplace_back(i - 1, i);
  }
  return leading_f(Graph::from_indices(names, edges), std::span<const Poly>(sizes), ExtensionKind::Second);
}

}  // namespace

Poly family(FamilyTag tag, int n) {
  const int min_n = tag == FamilyTag::B ? 1 : (tag == FamilyTag::L || tag == FamilyTag::E) ? 2 : 0;
  if (n < min_n)
    throw ValidationError("family " + family_name(tag) + " needs n >= " + std::to_string(min_n) + ", got " +
                          std::to_string(n));
  switch (tag) {
    case FamilyTag::A: return family_A(n);
    case FamilyTag::B: return family_B(n);
    case FamilyTag::L: return family_L(n);
    case FamilyTag::Phi: return family_Phi(n);
    case FamilyTag::E: return family_E(n);
  }
  return {};
}

Rational family_value(FamilyTag tag, int n, const Rational& k) { return family(tag, n)(k); }

bool roots_within(const Poly& p, const Rational& lo, const Rational& hi) {
  SturmSequence s(p);
  const int total = s.count(std::nullopt, std::nullopt);
  const int inside = s.count(lo, hi) + (p(lo) == 0 ? 1 : 0);
  return total == inside;
}

bool verify_root_interval(FamilyTag tag, int n, const Rational& lo, const Rational& hi) {
  return roots_within(family(tag, n), lo, hi);
}

}  // namespace hatlab
