#pragma once

#include <boost/rational.hpp>

#include <string>
#include <string_view>

namespace affweyl {

/// Exact rational scalar used everywhere; no floating point anywhere in the library.
using Rational = boost::rational<long long>;

/// Renders "p" when the denominator is 1, otherwise "p/q" in lowest terms.
std::string to_string(const Rational& q);

/// Parses "p" or "p/q" (optionally signed). Throws ParseError on malformed input,
/// including a zero denominator.
Rational parse_rational(std::string_view text);

} // namespace affweyl
