#pragma once

// SL2(Z) classification: trace trichotomy, parabolic normal form (eps, k),
// and for hyperbolic matrices the unstable eigendirection, its periodic
// minus-CF and the primitive decomposition A = P^k.

#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tightcensus/quadratic.hpp"

namespace tightcensus {

struct SL2Mat {
    Int a, b, c, d;  // row-major [[a, b], [c, d]]

    Int det() const { return a * d - b * c; }
    Int trace() const { return a + d; }

    friend SL2Mat operator*(const SL2Mat& x, const SL2Mat& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    SL2Mat operator-() const { return {-a, -b, -c, -d}; }

    SL2Mat inverse() const {
        if (det() != 1) throw std::invalid_argument("SL2Mat: not in SL2(Z)");
        return {d, -b, -c, a};
    }

    SL2Mat pow(Int k) const {
        if (k < 0) throw std::invalid_argument("SL2Mat::pow: negative exponent");
        SL2Mat r{1, 0, 0, 1};
        SL2Mat base = *this;
        while (k > 0) {
            if ((k & 1) != 0) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    friend bool operator==(const SL2Mat& x, const SL2Mat& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator!=(const SL2Mat& x, const SL2Mat& y) { return !(x == y); }

    friend std::ostream& operator<<(std::ostream& os, const SL2Mat& m) {
        return os << "[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]]";
    }
};

enum class SL2Kind { FiniteOrder, Parabolic, Hyperbolic };

struct SL2Class {
    SL2Kind kind = SL2Kind::FiniteOrder;
    Int trace;

    // Parabolic: A is SL2(Z)-conjugate to eps * [[1, 0], [k, 1]].
    int parabolic_eps = 0;
    Int parabolic_k;

    // Hyperbolic: A = primitive^power with power maximal.
    std::optional<SL2Mat> primitive;
    Int power;
    std::optional<QuadraticIrrational> unstable_slope;
    std::vector<Int> period;  // minimal period of the slope's minus-CF
};

// Slope of the eigendirection for the eigenvalue of |.| > 1, read as
// first coordinate over second (the projective variable of the Mobius
// action x -> (a x + b)/(c x + d), matching the duality lemma's bases):
// the attracting fixed point ((a - d) + sign(t) sqrt(t^2-4)) / (2 c).
inline QuadraticIrrational unstable_slope(const SL2Mat& A) {
    Int t = A.trace();
    if (t * t <= 4) throw std::invalid_argument("unstable_slope: not hyperbolic");
    // c = 0 forces a*d = 1 and |trace| = 2, so c != 0 here.
    Int D = t * t - 4;
    int eps = sign_int(t);
    return QuadraticIrrational(eps * (A.a - A.d), D, 2 * eps * A.c);
}

namespace detail_sl2 {

// Trace of the j-th power as a function of the trace s: D_0 = 2, D_1 = s,
// D_{j+1} = s D_j - D_{j-1} (Dickson / trace recurrence, det = 1).
inline Int dickson(const Int& s, const Int& j) {
    Int prev = 2, cur = s;
    if (j == 0) return prev;
    for (Int i = 1; i < j; ++i) {
        Int next = s * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// Second-kind companion F_j: mu^j = (D_j + F_j sqrt(s^2-4))/2 for the
// eigenvalue mu = (s + sqrt(s^2-4))/2. Same recurrence, F_0 = 0, F_1 = 1.
inline Int dickson_second(const Int& s, const Int& j) {
    Int prev = 0, cur = 1;
    if (j == 0) return prev;
    for (Int i = 1; i < j; ++i) {
        Int next = s * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// Maximal root of B with trace(B) > 2: the largest j admitting R in SL2(Z)
// with R^j = B. Candidate traces solve D_j(s) = trace(B); the candidate
// matrix is the rational combination u*I + v*B pinned by the eigenvalue
// field, accepted only when integral and verified by exact powering.
inline std::pair<SL2Mat, Int> max_root_positive(const SL2Mat& B) {
    Int t = B.trace();
    Int jmax = 1;
    while (dickson(3, jmax + 1) <= t) ++jmax;
    for (Int j = jmax; j >= 2; --j) {
        // monotone search for integer s >= 3 with D_j(s) = t; for j >= 2 any
        // solution has s^2 - 2 <= t, which keeps the search range small
        Int lo = 3, hi = isqrt(t + 2) + 1;
        std::optional<Int> found;
        while (lo <= hi) {
            Int mid = (lo + hi) / 2;
            Int val = dickson(mid, j);
            if (val == t) {
                found = mid;
                break;
            }
            if (val < t) {
                lo = mid + 1;
            } else {
                hi = mid - 1;
            }
        }
        if (!found) continue;
        Int s = *found;
        Int F = dickson_second(s, j);
        if (F == 0) continue;
        // R = u I + v B with v = 1/F, u = (s - t/F)/2
        Rational v(Int(1), F);
        Rational u = (Rational(s) - Rational(t) * v) * Rational(Int(1), Int(2));
        Rational ra = u + v * Rational(B.a);
        Rational rb = v * Rational(B.b);
        Rational rc = v * Rational(B.c);
        Rational rd = u + v * Rational(B.d);
        if (!(ra.is_integer() && rb.is_integer() && rc.is_integer() && rd.is_integer())) continue;
        SL2Mat R{ra.num(), rb.num(), rc.num(), rd.num()};
        if (R.det() != 1) continue;
        if (R.pow(j) == B) return {R, j};
    }
    return {B, Int(1)};
}

}  // namespace detail_sl2

// Primitive decomposition A = P^k with k maximal, defined for hyperbolic A.
inline std::pair<SL2Mat, Int> primitive_root(const SL2Mat& A) {
    if (A.det() != 1) throw std::invalid_argument("not in SL2(Z)");
    Int t = A.trace();
    if (t * t <= 4) {
        throw std::invalid_argument("primitive decomposition defined here only for hyperbolic A");
    }
    if (t > 2) return detail_sl2::max_root_positive(A);
    // trace < -2: -A = R^j with trace(R) > 2; odd exponents only can recover
    // the sign, so k is the odd part of j and P = -R^(j/k).
    auto [R, j] = detail_sl2::max_root_positive(-A);
    Int k = j;
    while (k % 2 == 0) k /= 2;
    SL2Mat P = -R.pow(j / k);
    return {P, k};
}

inline SL2Class classify_sl2(const SL2Mat& A) {
    if (A.det() != 1) throw std::invalid_argument("not in SL2(Z)");
    SL2Class out;
    out.trace = A.trace();
    Int t = out.trace;
    SL2Mat I{1, 0, 0, 1};
    if (t * t > 4) {
        out.kind = SL2Kind::Hyperbolic;
        auto [P, k] = primitive_root(A);
        out.primitive = P;
        out.power = k;
        out.unstable_slope = unstable_slope(A);
        out.period = quadratic_neg_cf(*out.unstable_slope).period;
        return out;
    }
    if ((t == 2 && A == I) || (t == -2 && A == -I)) {
        out.kind = SL2Kind::FiniteOrder;
        return out;
    }
    if (t == 2 || t == -2) {
        out.kind = SL2Kind::Parabolic;
        int eps = (t == 2) ? 1 : -1;
        out.parabolic_eps = eps;
        // M = eps*A - I is nilpotent nonzero; with u spanning ker M and z any
        // vector with z ^ u = 1, M z = k u pins the conjugacy class.
        Int ma = eps * A.a - 1, mb = eps * A.b;
        Int mc = eps * A.c, md = eps * A.d - 1;
        Int ux, uy;
        if (mb != 0 || ma != 0) {
            Int g = gcd_int(mb, ma);
            ux = mb / g;
            uy = -ma / g;
        } else {
            ux = 0;
            uy = 1;
        }
        // z with z_x u_y - z_y u_x = 1 via extended gcd
        Int zx, zy;
        {
            Int x0 = 1, x1 = 0, y0 = 0, y1 = 1, r0 = uy, r1 = ux;
            while (r1 != 0) {
                Int q = r0 / r1;
                Int r2 = r0 - q * r1;
                Int x2 = x0 - q * x1;
                Int y2 = y0 - q * y1;
                r0 = r1;
                r1 = r2;
                x0 = x1;
                x1 = x2;
                y0 = y1;
                y1 = y2;
            }
            // r0 = gcd = +-1 = x0*uy + y0*ux; scale so z_x uy - z_y ux = 1
            zx = x0 / r0;
            zy = -y0 / r0;
        }
        Int mzx = ma * zx + mb * zy;
        Int mzy = mc * zx + md * zy;
        Int k;
        if (ux != 0) {
            k = mzx / ux;
        } else {
            k = mzy / uy;
        }
        if (!(mzx == k * ux && mzy == k * uy)) {
            throw std::logic_error("classify_sl2: parabolic reduction failed");
        }
        out.parabolic_k = k;
        return out;
    }
    out.kind = SL2Kind::FiniteOrder;
    return out;
}

}  // namespace tightcensus
