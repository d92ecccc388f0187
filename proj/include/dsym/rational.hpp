#pragma once

/*
 * rational.hpp
 * ------------
 * Exact rational arithmetic for the coefficient field.
 *
 * Rational is backed by boost::multiprecision::cpp_rational, which keeps
 * values canonical (gcd-reduced, positive denominator, zero stored as 0/1).
 * Helpers here provide parsing, printing in the `n/d` text form, and the
 * exact factorials/binomials used by hook-length arithmetic.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <stdexcept>

namespace dsym {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Canonical text form: "n" for integers, "n/d" otherwise.
inline std::string rat_to_string(const Rational& r) {
    BigInt n = rat_num(r), d = rat_den(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

// Parses "n" or "n/d" (optionally signed).  Throws on malformed input.
inline Rational rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt n(s.substr(0, slash));
    BigInt d(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rational(n, d);
}

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

inline Rational rat_pow(const Rational& r, int e) {
    Rational acc = 1, base = r;
    int k = e;
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

} // namespace dsym
