#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hatlab/polynomial.hpp"

namespace hatlab {

/// Sturm chain of the square-free part of p. Every member is rescaled by a
/// positive constant to coprime integer coefficients, which keeps signs.
class SturmSequence {
 public:
  /// Throws ValidationError for the zero polynomial.
  explicit SturmSequence(const Poly& p);

  /// Sign variations at a point; nullopt with dir = +1/-1 means +inf/-inf.
  int variations(const std::optional<Rational>& at, int dir = 1) const;
  /// Distinct real roots in (lo, hi]; nullopt bounds are -inf / +inf.
  int count(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const;

  const Poly& square_free() const { return chain_.front(); }
  const std::vector<Poly>& chain() const { return chain_; }

 private:
  std::vector<Poly> chain_;
};

/// Distinct real roots of p in (lo, hi].
int sturm_count(const Poly& p, const std::optional<Rational>& lo, const std::optional<Rational>& hi);

struct IsolatingInterval {
  Rational lower;
  Rational upper;
  std::optional<Rational> exact_root;
};

struct SmallestRoot {
  /// nullopt when p has no positive real root.
  std::optional<IsolatingInterval> root;
  /// A candidate was passed and proved to be the smallest positive root.
  bool candidate_confirmed = false;
  /// Why a candidate was rejected, empty otherwise.
  std::string candidate_note;
};

/// Isolation width used by bisection: 10^-12.
Rational root_tolerance();

/// Smallest positive real root of p. A candidate is accepted when
/// p(candidate) = 0 and no root lies in (0, candidate). Otherwise the root is
/// bisected to width <= root_tolerance() and tested for being rational.
/// Throws ValidationError when p is zero or p(0) = 0.
SmallestRoot smallest_positive_root(const Poly& p, const std::optional<Rational>& candidate = std::nullopt);

/// Rational with the least denominator in [lo, hi], 0 <= lo <= hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

/// Integer-cleared coefficient list, lowest degree first, positive scale.
std::vector<Integer> integer_coefficients(const Poly& p);

enum class FamilyTag { A, B, L, Phi, E };

FamilyTag parse_family(const std::string& name);
std::string family_name(FamilyTag tag);

/// Family polynomial in k:
///   A_0 = 1, A_1 = k+1, A_n = k(A_{n-1} + A_{n-2})
///   B_1 = k+3, B_n = (k+2)A_{n-1} + k A_{n-2}
///   L_2 = (k+2)(k+4), L_n = (k+2)B_{n-1} + k B_{n-2}
///   Phi_0 = 1, Phi_1 = k, Phi_n = k Phi_{n-1} - Phi_{n-2}
///   E_n = leading coefficient of the second-kind path extension with sizes
///         (k+1, k, ..., k, k+1), n >= 2
/// Throws ValidationError for an index outside the family's range.
Poly family(FamilyTag tag, int n);
Rational family_value(FamilyTag tag, int n, const Rational& k);

/// True iff every real root of the family polynomial lies in [lo, hi].
bool verify_root_interval(FamilyTag tag, int n, const Rational& lo, const Rational& hi);
/// Same check for an arbitrary nonzero polynomial.
bool roots_within(const Poly& p, const Rational& lo, const Rational& hi);

}  // namespace hatlab
