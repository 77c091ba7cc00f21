#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ptspec {

// Exact rational scalar. All coefficient arithmetic in the algebra layer is
// carried out on this type; doubles appear only in the root-finding stage.
using Rational = mpq_class;

// Accepts integers ("-3"), fractions ("3/4"), and decimal literals with an
// optional exponent ("0.5", "2.5e-3"). Decimals convert exactly: 0.5 -> 1/2.
// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// "num" when the denominator is 1, "num/den" otherwise.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

}  // namespace ptspec
