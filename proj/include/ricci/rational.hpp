#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ricci {

/// Arbitrary-precision rational. Every mass, cost and curvature value in the
/// library is one of these; nothing is ever rounded to floating point.
using Rational = mpq_class;
using Integer = mpz_class;

/// Always "p/q" with q > 0, including integers ("3/1", "0/1", "-1/1").
std::string to_string(const Rational& q);

/// Accepts "p/q" or a bare integer "p". Throws Error{MalformedRational}.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long num, long den = 1) {
  Rational q{Integer(num), Integer(den)};
  q.canonicalize();
  return q;
}

}  // namespace ricci
