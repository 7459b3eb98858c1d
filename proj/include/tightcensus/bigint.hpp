#pragma once

// Arbitrary-precision integer layer. Everything downstream (continuants,
// Smith forms, surd states) overflows 64 bits quickly, so the whole library
// runs on exact big integers.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace tightcensus {

using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline int sign_int(const Int& a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }

// Floor division (C++ '/' truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("floor_div: division by zero");
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("ceil_div: division by zero");
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

// Largest s with s*s <= n.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    if (n == 0) return 0;
    Int x = 1;
    x <<= (msb(n) / 2 + 1);  // initial overestimate
    while (true) {
        Int y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    return x;
}

inline bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    Int r = isqrt(n);
    return r * r == n;
}

inline Int binomial(const Int& n, const Int& k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    Int kk = k;
    if (n - k < kk) kk = n - k;
    for (Int i = 0; i < kk; ++i) {
        r = r * (n - i) / (i + 1);
    }
    return r;
}

inline std::string to_string(const Int& a) { return a.str(); }

}  // namespace tightcensus
