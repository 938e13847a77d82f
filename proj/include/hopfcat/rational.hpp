#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "hopfcat/error.hpp"

namespace hopfcat {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always kept in canonical form: reduced fraction,
/// positive denominator, sign on the numerator.
using Rational = boost::multiprecision::cpp_rational;

/// Canonical string form: "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

/// Parses "p" or "p/q" with optional leading sign on p. Any other shape,
/// or a zero denominator, is a SchemaError. The result is canonicalized.
inline Rational parse_rational(std::string_view text) {
    const auto bad = [&] { return SchemaError("invalid rational: '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    const std::string_view num_part = text.substr(0, slash);
    auto check_integer = [&](std::string_view part, bool allow_sign) {
        if (part.empty()) throw bad();
        size_t i = 0;
        if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
        if (i == part.size()) throw bad();
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') throw bad();
    };
    check_integer(num_part, true);
    const Integer num{std::string(num_part)};
    if (slash == std::string_view::npos) return Rational(num);
    const std::string_view den_part = text.substr(slash + 1);
    check_integer(den_part, false);
    const Integer den{std::string(den_part)};
    if (den == 0) throw bad();
    return Rational(num, den);
}

}  // namespace hopfcat
