#pragma once

// Exact arithmetic primitives. Everything in the library is built on GMP
// rationals; no floating point value is ever produced.

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "betti/errors.hpp"

namespace betti {

using Rational = mpq_class;
using Integer = mpz_class;
using Degree = std::int64_t;

/// Canonical text form: bare integer, or p/q in lowest terms.
inline std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace detail

/// Parses `[-]digits` or `[-]digits/digits`. The result is canonical.
inline Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+'))
    body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!detail::all_digits(num) || !detail::all_digits(den))
    throw parse_error("not a rational number: '" + std::string(text) + "'");
  Integer d(std::string(den), 10);
  if (d == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
  Rational q(Integer(std::string(num), 10), d);
  q.canonicalize();
  if (!text.empty() && text.front() == '-') q = -q;
  return q;
}

inline Integer parse_integer(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+'))
    body.remove_prefix(1);
  if (!detail::all_digits(body))
    throw parse_error("not an integer: '" + std::string(text) + "'");
  Integer z(std::string(body), 10);
  return text.front() == '-' ? Integer(-z) : z;
}

/// C(n, k) for n >= 0; zero outside 0 <= k <= n.
inline Integer binomial(const Integer& n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

inline Integer binomial(std::int64_t n, std::int64_t k) {
  return binomial(Integer(static_cast<long>(n)), k);
}

inline Integer factorial(std::int64_t n) {
  if (n < 0) throw validation_error("factorial of a negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline Rational to_rational(std::int64_t v) { return Rational(static_cast<long>(v)); }

}  // namespace betti
