#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hatlab/rational.hpp"

namespace hatlab {

/// Univariate polynomial with exact rational coefficients, lowest degree
/// first. The highest stored coefficient is nonzero; the zero polynomial has
/// no coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs);
  explicit Poly(std::vector<Rational> coeffs);
  Poly(const Rational& c);  // NOLINT: constants convert implicitly
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT

  static Poly monomial(const Rational& c, int degree);
  /// The identity polynomial x.
  static Poly x() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& at) const;
  /// Sign of p(at), with at = +inf when dir > 0 and -inf when dir < 0.
  int sign_at_infinity(int dir) const;

  Poly derivative() const;
  /// Multiplies by a positive constant so all coefficients are coprime
  /// integers. Sign of the polynomial is preserved.
  Poly primitive() const;
  /// Monic version (leading coefficient 1).
  Poly monic() const;
  /// x^n p(1/x) for n = max(degree, n).
  Poly reversed(int n) const;
  /// p(c x).
  Poly scale_argument(const Rational& c) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator-(Poly a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Monic gcd; gcd(0,0) = 0.
  static Poly gcd(Poly a, Poly b);

  /// Coefficient list "[c0, c1, ...]" with each entry printed as p/q.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Power of a polynomial by repeated squaring.
Poly pow(Poly base, unsigned exp);

}  // namespace hatlab
