#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qoa {

/// Exact rational scalar. Always canonicalized (lowest terms, denominator > 0).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parse "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Integer factorial(long n) {
    Integer f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

/// Generalized binomial C(n, k) for integer n (possibly negative), k >= 0.
inline Rational binomial(long n, long k) {
    if (k < 0) return 0;
    Rational num = 1;
    for (long i = 0; i < k; ++i) num *= rat(n - i);
    return num / Rational(factorial(k));
}

/// Falling factorial n (n-1) ... (n-k+1).
inline Rational falling(long n, long k) {
    Rational r = 1;
    for (long i = 0; i < k; ++i) r *= rat(n - i);
    return r;
}

} // namespace qoa
