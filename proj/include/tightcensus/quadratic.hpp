#pragma once

// Exact quadratic irrationals (P + sqrt(D))/Q and their minus-sign continued
// fractions. No floating point anywhere: ceilings and sign tests are integer
// comparisons against the surd, and the expansion's period is detected by
// exact recurrence of the (P, Q) state.

#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tightcensus/negcf.hpp"
#include "tightcensus/rational.hpp"

namespace tightcensus {

struct QuadraticIrrational;

// sign of a - b, exact across different discriminants
int surd_compare(const QuadraticIrrational& a, const QuadraticIrrational& b);

// Value (P + sqrt(D))/Q with D > 0 not a square, Q != 0 and Q | D - P^2.
struct QuadraticIrrational {
    Int P, D, Q;

    QuadraticIrrational(Int p, Int d, Int q) : P(std::move(p)), D(std::move(d)), Q(std::move(q)) {
        if (D <= 0 || is_perfect_square(D)) {
            throw std::invalid_argument("QuadraticIrrational: D must be positive and non-square");
        }
        if (Q == 0) throw std::invalid_argument("QuadraticIrrational: Q = 0");
        if ((D - P * P) % Q != 0) {
            // Rescale to the canonical form: (P + sqrt(D))/Q = (PQ' + sqrt(DQ'^2))/(QQ')
            // with Q' = |Q| restores the divisibility invariant.
            Int s = abs_int(Q);
            P *= s;
            D *= s * s;
            Q *= s;
        }
    }

    friend bool operator==(const QuadraticIrrational& a, const QuadraticIrrational& b) {
        // Same D: the (P, Q) representation is unique. Different D: exact sign test.
        if (a.D == b.D) return a.P == b.P && a.Q == b.Q;
        return surd_compare(a, b) == 0;
    }

    friend bool operator!=(const QuadraticIrrational& a, const QuadraticIrrational& b) {
        return !(a == b);
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadraticIrrational& z) {
        return os << "(" << z.P << "+sqrt(" << z.D << "))/" << z.Q;
    }
};

// Affine surd r + s*sqrt(D) with rational r, s. Closed under the operations the
// sail code needs (affine arithmetic and exact sign/floor/ceil).
struct QuadExpr {
    Rational r, s;
    Int D;  // positive, non-square whenever s != 0

    static QuadExpr from(const QuadraticIrrational& z) {
        return QuadExpr{Rational(z.P, z.Q), Rational(Int(1), z.Q), z.D};
    }
    static QuadExpr rational(const Rational& x) { return QuadExpr{x, Rational(0), Int(2)}; }

    QuadExpr operator+(const Rational& x) const { return {r + x, s, D}; }
    QuadExpr operator-(const Rational& x) const { return {r - x, s, D}; }
    QuadExpr scaled(const Rational& x) const { return {r * x, s * x, D}; }
    QuadExpr operator-() const { return {-r, -s, D}; }

    // sign of r + s*sqrt(D)
    int sign() const {
        int sr = r.sign(), ss = s.sign();
        if (ss == 0) return sr;
        if (sr == 0) return ss;
        if (sr == ss) return sr;
        // opposite signs: compare r^2 against s^2 D
        Rational lhs = r * r;
        Rational rhs = s * s * Rational(D);
        if (lhs == rhs) throw std::logic_error("QuadExpr: sqrt(D) rational");
        return (lhs > rhs) ? sr : ss;
    }

    int compare(const Rational& x) const { return QuadExpr{r - x, s, D}.sign(); }

    Int floor() const {
        if (s.sign() == 0) return r.floor();
        Int root = isqrt(D);
        // bracket sqrt(D) in [root, root+1] and refine by exact comparisons
        Rational lo = r + s * Rational(s.sign() > 0 ? root : root + 1);
        Int k = lo.floor();
        while (compare(Rational(k)) < 0) --k;
        while (compare(Rational(k + 1)) >= 0) ++k;
        return k;
    }
    Int ceil() const { return -QuadExpr{-r, -s, D}.floor(); }
};

inline int surd_compare(const QuadraticIrrational& a, const QuadraticIrrational& b) {
    // sign of a - b = (Pa/Qa - Pb/Qb) + (1/Qa) sqrt(Da) - (1/Qb) sqrt(Db):
    // reduce to comparing the single-surd expression c + sa*sqrt(Da) against
    // t*sqrt(Db), squaring once when both sides have the same strict sign.
    QuadExpr ea = QuadExpr::from(a);
    Rational c = ea.r - Rational(b.P, b.Q);
    Rational sa = ea.s;
    QuadExpr lhs{c, sa, a.D};
    Rational t(Int(1), b.Q);
    int sl = lhs.sign();
    int st = t.sign();
    if (st == 0) return sl;
    if (sl <= 0 && st > 0) return -1;
    if (sl >= 0 && st < 0) return 1;
    QuadExpr lhs2{c * c + sa * sa * Rational(a.D), c * sa * Rational(2), a.D};
    int cmp = QuadExpr{lhs2.r - t * t * Rational(b.D), lhs2.s, a.D}.sign();
    return sl > 0 ? cmp : -cmp;
}

struct PeriodicNegCF {
    std::vector<Int> preperiod;
    std::vector<Int> period;  // non-empty, minimal repeating block, entries >= 2
};

// Minus-CF of a quadratic irrational. Each step takes a = ceil(z) and
// z <- 1/(a - z); on states z = (P + sqrt(D))/Q this is
//   P' = a*Q - P,  Q' = (P'^2 - D)/Q,
// and the walk is eventually periodic, detected by recurrence of (P, Q).
inline PeriodicNegCF quadratic_neg_cf(const QuadraticIrrational& z) {
    Int P = z.P, D = z.D, Q = z.Q;
    std::vector<Int> coeffs;
    std::map<std::pair<Int, Int>, std::size_t> seen;
    for (std::size_t step = 0;; ++step) {
        auto state = std::make_pair(P, Q);
        auto it = seen.find(state);
        if (it != seen.end()) {
            PeriodicNegCF out;
            out.preperiod.assign(coeffs.begin(), coeffs.begin() + it->second);
            out.period.assign(coeffs.begin() + it->second, coeffs.end());
            return out;
        }
        seen.emplace(state, step);
        Int a = QuadExpr{Rational(P, Q), Rational(Int(1), Q), D}.ceil();
        coeffs.push_back(a);
        Int P1 = a * Q - P;
        Int Q1 = (P1 * P1 - D) / Q;
        P = P1;
        Q = Q1;
    }
}

// The purely periodic surd whose minus-CF repeats the given block: the
// attracting fixed point of x -> c_1 - 1/(c_2 - ... - 1/(c_m - 1/x)).
inline QuadraticIrrational surd_from_period(const std::vector<Int>& period) {
    if (period.empty()) throw std::invalid_argument("surd_from_period: empty period");
    // Mobius matrix of one period: product of [[c, -1], [1, 0]].
    Int m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    for (const Int& c : period) {
        Int n00 = m00 * c + m01;
        Int n01 = -m00;
        Int n10 = m10 * c + m11;
        Int n11 = -m10;
        m00 = n00;
        m01 = n01;
        m10 = n10;
        m11 = n11;
    }
    // fixed point of (m00 x + m01)/(m10 x + m11); take the attracting root
    Int tr = m00 + m11;
    Int disc = tr * tr - 4;  // det = 1
    if (m10 == 0) throw std::invalid_argument("surd_from_period: degenerate block");
    if (disc <= 0 || is_perfect_square(disc)) {
        throw std::invalid_argument("surd_from_period: block has no irrational fixed point");
    }
    Int P = m00 - m11, Q = 2 * m10;
    if (Q < 0) {
        P = -P;
        Q = -Q;  // keep + sqrt branch as the larger root
    }
    return QuadraticIrrational(P, disc, Q);
}

}  // namespace tightcensus
