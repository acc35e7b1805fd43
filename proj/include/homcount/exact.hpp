#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace homcount {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always kept reduced. Partition functions and
/// homomorphism counts never touch floating point.
using ExactValue = boost::multiprecision::cpp_rational;

enum class Comparison { LESS, EQUAL, GREATER };

inline const char* to_string(Comparison c) {
    switch (c) {
        case Comparison::LESS: return "LESS";
        case Comparison::EQUAL: return "EQUAL";
        default: return "GREATER";
    }
}

/// Formats a rational as "p" or "p/q" (q > 1), with no decimal point ever.
inline std::string format_fraction(const ExactValue& v) {
    const BigInt num = boost::multiprecision::numerator(v);
    const BigInt den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// Parses "p" or "p/q". Rejects empty strings, zero denominators and any
/// non-digit noise; a single leading '-' on the numerator is allowed.
inline ExactValue parse_fraction(std::string_view s) {
    auto fail = [&] { throw std::invalid_argument("bad fraction string: '" + std::string(s) + "'"); };
    if (s.empty()) fail();
    const auto slash = s.find('/');
    const std::string_view num_part = s.substr(0, slash == std::string_view::npos ? s.size() : slash);
    const std::string_view den_part = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    auto check_digits = [&](std::string_view t, bool sign_ok) {
        if (t.empty()) fail();
        std::size_t i = (sign_ok && t[0] == '-') ? 1 : 0;
        if (i == t.size()) fail();
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') fail();
    };
    check_digits(num_part, true);
    check_digits(den_part, false);
    const BigInt num(std::string(num_part));
    const BigInt den(std::string(den_part));
    if (den == 0) fail();
    return ExactValue(num, den);
}

inline BigInt int_pow(const BigInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

/// Exact comparison of z1^e1 against z2^e2 via cross-multiplied integer powers.
/// Zero values follow the normalized-count convention: both zero compare
/// equal, a single zero loses regardless of exponents.
inline Comparison compare_cross_powers(const ExactValue& z1, unsigned e1,
                                       const ExactValue& z2, unsigned e2) {
    if (z1 < 0 || z2 < 0) throw std::invalid_argument("compare_cross_powers: negative value");
    if (z1 == 0 && z2 == 0) return Comparison::EQUAL;
    if (z1 == 0) return Comparison::LESS;
    if (z2 == 0) return Comparison::GREATER;
    // z1^e1 ? z2^e2  <=>  p1^e1 q2^e2 ? p2^e2 q1^e1
    const BigInt lhs = int_pow(boost::multiprecision::numerator(z1), e1) *
                       int_pow(boost::multiprecision::denominator(z2), e2);
    const BigInt rhs = int_pow(boost::multiprecision::numerator(z2), e2) *
                       int_pow(boost::multiprecision::denominator(z1), e1);
    if (lhs < rhs) return Comparison::LESS;
    if (lhs == rhs) return Comparison::EQUAL;
    return Comparison::GREATER;
}

}  // namespace homcount
