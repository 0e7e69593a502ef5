#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace bindingfactor {

/// Exact rational used for every ratio the library reports.
using Rational = boost::rational<std::int64_t>;

/// "p/q" in lowest terms, denominator always present ("1/1", "0/1").
std::string to_string(const Rational& r);

/// Inverse of to_string; also accepts a bare integer. Throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace bindingfactor
