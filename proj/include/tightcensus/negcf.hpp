#pragma once

// Minus-sign continued fractions p/q = a_0 - 1/(a_1 - 1/(... - 1/a_n)).
// For 0 < q < p coprime the expansion is the unique one with every a_i >= 2;
// it is produced by the greedy step a = ceil(p/q), (p, q) <- (q, a*q - p).

#include <stdexcept>
#include <vector>

#include "tightcensus/rational.hpp"

namespace tightcensus {

struct NegCF {
    std::vector<Int> coeffs;  // a_0 ... a_n, non-empty; a_i >= 2 for i >= 1
};

// Expansion of p/q with 0 < q < p, gcd(p, q) = 1. All coefficients >= 2.
inline NegCF neg_cf_expand(Int p, Int q) {
    if (gcd_int(p, q) != 1) throw std::invalid_argument("neg_cf_expand: not coprime");
    if (q <= 0 || q >= p) throw std::invalid_argument("neg_cf_expand: out of range");
    NegCF cf;
    while (q != 0) {
        Int a = ceil_div(p, q);
        cf.coeffs.push_back(a);
        Int nq = a * q - p;
        p = q;
        q = nq;
    }
    return cf;
}

// Evaluate right-to-left: x <- a_i - 1/x.
inline Rational neg_cf_eval(const NegCF& cf) {
    if (cf.coeffs.empty()) throw std::invalid_argument("neg_cf_eval: empty coefficient list");
    Rational x(cf.coeffs.back());
    for (std::size_t i = cf.coeffs.size() - 1; i-- > 0;) {
        if (x.num() == 0) throw std::domain_error("neg_cf_eval: division by zero tail");
        x = Rational(cf.coeffs[i]) - Rational(1) / x;
    }
    return x;
}

// Continuants p_0 = 1, p_1 = a_0, p_{i+1} = a_i p_i - p_{i-1}.
// Returns p_0 ... p_{n+1}; the last entry is the numerator of neg_cf_eval.
inline std::vector<Int> continuants(const NegCF& cf) {
    if (cf.coeffs.empty()) throw std::invalid_argument("continuants: empty coefficient list");
    std::vector<Int> p;
    p.reserve(cf.coeffs.size() + 2);
    p.push_back(1);
    p.push_back(cf.coeffs[0]);
    for (std::size_t i = 1; i < cf.coeffs.size(); ++i) {
        p.push_back(cf.coeffs[i] * p[i] - p[i - 1]);
    }
    return p;
}

}  // namespace tightcensus
