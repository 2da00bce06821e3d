#include "hatlab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hatlab {

Rational parse_rational(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
  if (s.empty()) throw ValidationError("empty rational");
  auto dot = s.find('.');
  try {
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      Integer den = 1;
      for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
      Rational q(Integer(digits, 10), den);
      q.canonicalize();
      return q;
    }
    Rational q(s, 10);
    if (q.get_den() == 0) throw ValidationError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ValidationError("not a rational number: '" + text + "'");
  }
}

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Poly Poly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  for (auto& c : c_) c.canonicalize();
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

Rational Poly::operator()(const Rational& at) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

int Poly::sign_at_infinity(int dir) const {
  if (is_zero()) return 0;
  int s = sgn(c_.back());
  if (dir < 0 && degree() % 2 == 1) s = -s;
  return s;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Poly Poly::primitive() const {
  if (is_zero()) return {};
  Integer den_lcm = 1;
  for (const auto& c : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& c : c_) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  Poly out = *this;
  for (auto& c : out.c_) c *= factor;
  return out;
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Poly out = *this;
  Rational lead = c_.back();
  for (auto& c : out.c_) c /= lead;
  return out;
}

Poly Poly::reversed(int n) const {
  n = std::max(n, degree());
  std::vector<Rational> r(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= degree(); ++i) r[static_cast<std::size_t>(n - i)] = c_[static_cast<std::size_t>(i)];
  return Poly(std::move(r));
}

Poly Poly::scale_argument(const Rational& c) const {
  Poly out = *this;
  Rational p = 1;
  for (auto& coef : out.c_) {
    coef *= p;
    p *= c;
  }
  out.trim();
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly operator-(Poly a) {
  for (auto& c : a.c_) c = -c;
  return a;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.c_;
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) return {Poly{}, a};
  std::vector<Rational> q(static_cast<std::size_t>(dq) + 1);
  const Rational& lead = b.c_.back();
  for (int i = dq; i >= 0; --i) {
    Rational t = rem[static_cast<std::size_t>(i + db)] / lead;
    q[static_cast<std::size_t>(i)] = t;
    if (t == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i + j)] -= t * b.c_[static_cast<std::size_t>(j)];
  }
  return {Poly(std::move(q)), Poly(std::move(rem))};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second.primitive();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string Poly::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ", ";
    os << c_[i].get_str();
  }
  if (c_.empty()) os << '0';
  os << ']';
  return os.str();
}

Poly pow(Poly base, unsigned exp) {
  Poly acc = Rational(1);
  while (exp) {
    if (exp & 1U) acc *= base;
    exp >>= 1U;
    if (exp) base *= base;
  }
  return acc;
}

}  // namespace hatlab
