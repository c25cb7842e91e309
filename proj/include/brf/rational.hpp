#pragma once

#include <gmpxx.h>

#include <string>

namespace brf {

/// Exact rational arithmetic. mpq_class keeps values canonical (gcd 1,
/// positive denominator), which the parsers below rely on.
using Rational = mpq_class;

/// Accepts "p", "p/q", and decimal strings like "-3.25". Throws Error
/// (parse_error) on anything else. Exact: "0.1" parses to 1/10.
Rational parse_rational(const std::string& text);

/// Canonical text form: integers as "p", everything else as "p/q".
std::string rational_to_string(const Rational& value);

inline Rational rational_from_long(long v) { return Rational(v); }

}  // namespace brf
