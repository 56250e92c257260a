#pragma once

// Exact arithmetic used everywhere counts or weights are compared.

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cliquanta {

using big_int = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline big_int pow2(unsigned e) {
    big_int r = 1;
    r <<= e;
    return r;
}

inline big_int pow_big(big_int base, unsigned e) {
    big_int r = 1;
    while (e != 0) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline big_int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    big_int r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline rational make_rational(const big_int& num, const big_int& den) {
    return rational(num, den);
}

/// Renders a rational as "p/q" (always with a denominator, q > 0, reduced).
inline std::string to_fraction_string(const rational& x) {
    return boost::multiprecision::numerator(x).str() + "/" +
           boost::multiprecision::denominator(x).str();
}

/// Integers render as plain decimals, everything else as "p/q".
inline std::string to_exact_string(const rational& x) {
    if (boost::multiprecision::denominator(x) == 1) return boost::multiprecision::numerator(x).str();
    return to_fraction_string(x);
}

inline std::string to_string(const big_int& x) { return x.str(); }

/// Parses "p/q" or "p"; throws std::invalid_argument on malformed input.
inline rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return rational(big_int(s));
        big_int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
        return rational(big_int(s.substr(0, slash)), den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational '" + s + "'");
    }
}

}  // namespace cliquanta
