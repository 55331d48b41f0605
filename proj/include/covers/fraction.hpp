#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace covers {

using BigInt = boost::multiprecision::cpp_int;

/// Exact reduced rational. cpp_rational keeps gcd(num, den) = 1 and den >= 1
/// after every operation, which is exactly the invariant the rest of the
/// library relies on; no floating point is involved anywhere in its arithmetic.
using Fraction = boost::multiprecision::cpp_rational;

/// Floor division a/b for b > 0 (rounds toward -infinity).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b; // truncates toward zero
    if (q * b != a && ((a < 0) != (b < 0))) --q;
    return q;
}

/// Integral part of q, rounding toward -infinity.
inline BigInt floor_of(const Fraction& q) {
    return floor_div(numerator(q), denominator(q));
}

/// Fractional part {q} = q - floor(q), always in [0, 1).
inline Fraction frac_part(const Fraction& q) {
    return q - Fraction(floor_of(q));
}

/// "num/den", or just "num" when den == 1.
inline std::string to_string(const Fraction& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

} // namespace covers
