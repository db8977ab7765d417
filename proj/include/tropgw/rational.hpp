#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <string_view>

namespace tropgw {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical text form: "p/q" in lowest terms with q > 1, plain "p" when q = 1.
std::string format_rational(const Rational& r);

// Strict inverse of format_rational: rejects anything that does not round-trip
// byte-for-byte ("2/4", "3/1", "+2", "007", "1/-2", ...).
Rational parse_rational(std::string_view text);

Integer binomial(std::int64_t n, std::int64_t k);
Integer factorial(std::int64_t n);

}  // namespace tropgw
