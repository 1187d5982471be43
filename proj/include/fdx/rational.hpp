#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fdx {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator. All correctness-bearing comparisons in this library are done
/// on this type; floating point never enters a certificate.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p" or "p/q" (optional sign on the numerator only).
/// Throws Errc::non_rational on anything else, including "1.5" and "p/0".
Rational parse_rational(const std::string& text);

/// Inverse of parse_rational: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& value);

inline bool is_zero_or_one(const Rational& value) {
    return value == 0 || value == 1;
}

} // namespace fdx
