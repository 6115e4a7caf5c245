#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "binform/errors.hpp"

namespace binform {

/// Exact arbitrary-precision fraction. GMP keeps it canonical:
/// gcd(|num|, den) = 1 and den > 0 after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q", or "p" when q = 1.
inline std::string to_string(const Rational &q) { return q.get_str(10); }

/// Accepts "p", "p/q", optional leading sign; rejects zero denominators.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty())
    throw InvalidArgument("empty rational literal");
  const auto slash = s.find('/');
  Integer num;
  Integer den = 1;
  try {
    if (slash == std::string::npos) {
      num = Integer(s, 10);
    } else {
      num = Integer(s.substr(0, slash), 10);
      den = Integer(s.substr(slash + 1), 10);
    }
  } catch (const std::invalid_argument &) {
    throw InvalidArgument("malformed rational literal '" + s + "'");
  }
  if (den == 0)
    throw InvalidArgument("zero denominator in '" + s + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline Integer binomial(unsigned n, unsigned k) {
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return c;
}

} // namespace binform
