#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hatlab {

/// Arbitrary precision rational, always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad names, missing vertices, schema violations.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A size guard was exceeded (enumeration, corner sweep, solver encoding).
class GuardError : public Error {
 public:
  using Error::Error;
};

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational q(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

/// "p/q" in lowest terms, or "p" for integers.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p", "-p/q" or a plain decimal like "0.25".
Rational parse_rational(const std::string& text);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace hatlab
