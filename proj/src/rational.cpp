#include "fdx/rational.hpp"

#include "fdx/error.hpp"

#include <algorithm>
#include <cctype>

namespace fdx {

namespace {

bool all_digits(const std::string& s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

BigInt parse_integer(std::string s, const std::string& original) {
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = s[0] == '-';
        s.erase(0, 1);
    }
    require(all_digits(s), Errc::non_rational, "not a rational value: '" + original + "'");
    BigInt v(s);
    return negative ? -v : v;
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(),
                           [](unsigned char c) { return std::isspace(c); }),
            s.end());
    require(!s.empty(), Errc::non_rational, "empty rational value");

    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(parse_integer(s, text));

    BigInt num = parse_integer(s.substr(0, slash), text);
    std::string den_text = s.substr(slash + 1);
    require(all_digits(den_text), Errc::non_rational,
            "denominator must be a positive integer: '" + text + "'");
    BigInt den(den_text);
    require(den != 0, Errc::non_rational, "zero denominator: '" + text + "'");
    return Rational(num, den);
}

std::string format_rational(const Rational& value) {
    std::string num = numerator(value).str();
    if (denominator(value) == 1)
        return num;
    return num + "/" + denominator(value).str();
}

} // namespace fdx
