#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "freeprob/errors.hpp"

namespace freeprob {

/// Exact arbitrary-precision fraction. Always stored reduced, denominator >= 1.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string to_fraction_string(const Rational& r);

/// Parses "p" or "p/q" (optional leading '-'). Rejects anything else,
/// including zero denominators and floating-point syntax.
Rational parse_rational(std::string_view text);

/// q^e for e >= 0.
Rational rational_pow(const Rational& base, int exponent);

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw domain_error("rational with zero denominator");
    return Rational(Integer(num), Integer(den));
}

} // namespace freeprob
