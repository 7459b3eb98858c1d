#pragma once

// Independent reference implementations used only by the test suites. These
// deliberately avoid the library's walk/CF machinery: small-integer scans and
// textbook recurrences only.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "tightcensus/bigint.hpp"
#include "tightcensus/sl2.hpp"
#include "tightcensus/vec.hpp"

namespace oracles {

using std::int64_t;

// Greedy minus-CF of p/q by ceiling division; the defining recipe, kept
// separate from the library implementation.
inline std::vector<int64_t> greedy_neg_cf(int64_t p, int64_t q) {
    std::vector<int64_t> out;
    while (q != 0) {
        int64_t a = (p + q - 1) / q;  // p, q > 0 here
        out.push_back(a);
        int64_t nq = a * q - p;
        p = q;
        q = nq;
    }
    return out;
}

// Rational cone over int64 with open/closed flags; inputs must stay small
// enough that all products fit comfortably (checked by the caller).
struct SmallCone {
    int64_t lx, ly, rx, ry;
    bool l_closed, r_closed;

    bool contains(int64_t x, int64_t y) const {
        if (x == 0 && y == 0) return false;
        int64_t wl = lx * y - ly * x;   // dL ^ v
        int64_t wr = x * ry - y * rx;   // v ^ dR
        if (wl > 0 || wr > 0) return false;
        if (wl == 0) {
            bool pos = same_ray(lx, ly, x, y);
            if (!pos) return false;
            if (!l_closed) return false;
        }
        if (wr == 0) {
            bool pos = same_ray(rx, ry, x, y);
            if (!pos) return false;
            if (!r_closed) return false;
        }
        return true;
    }

    bool strictly_contains(int64_t x, int64_t y) const {
        if (x == 0 && y == 0) return false;
        return (lx * y - ly * x) < 0 && (x * ry - y * rx) < 0;
    }

  private:
    static bool same_ray(int64_t dx, int64_t dy, int64_t x, int64_t y) {
        auto sgn = [](int64_t v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); };
        return sgn(dx) == sgn(x) && sgn(dy) == sgn(y);
    }
};

// Existential interior test: does some lattice v in C have w - v in C too?
// Full scan over the exact x-extent of the feasible strip; a small-box probe
// first for the common case.
inline bool has_decomposition(const SmallCone& C, int64_t wx, int64_t wy) {
    for (int64_t x = -24; x <= 24; ++x) {
        for (int64_t y = -24; y <= 24; ++y) {
            if (C.contains(x, y) && C.contains(wx - x, wy - y)) return true;
        }
    }
    // exact x-extent of the feasible parallelogram {0, a(w) dL, w, b(w) dR}
    // in ray coordinates w = a dL + b dR: a = (w ^ dR)/det, b = (dL ^ w)/det
    int64_t det = C.lx * C.ry - C.ly * C.rx;  // dL ^ dR < 0
    int64_t dd = std::abs(det);
    int64_t aN = std::abs(wx * C.ry - wy * C.rx);
    int64_t bN = std::abs(C.lx * wy - C.ly * wx);
    int64_t reach = (aN * std::max(std::abs(C.lx), std::abs(C.ly)) +
                     bN * std::max(std::abs(C.rx), std::abs(C.ry))) / dd +
                    std::abs(wx) + 2;
    int64_t xlo = -reach, xhi = reach;
    for (int64_t x = xlo; x <= xhi; ++x) {
        // y-range of {v in C} for this x, intersected with {w - v in C}
        // constraints: lx*y - ly*x <= 0; x*ry - y*rx <= 0; and same for (wx-x, wy-y)
        int64_t ylo = INT64_MIN / 4, yhi = INT64_MAX / 4;
        bool bad = false;
        auto upper = [&](int64_t num, int64_t den, bool strict) {
            // y <= num/den (den > 0)
            int64_t b = num >= 0 ? num / den : -((-num + den - 1) / den);
            if (strict && b * den == num) --b;
            yhi = std::min(yhi, b);
        };
        auto lower = [&](int64_t num, int64_t den, bool strict) {
            int64_t b = num >= 0 ? (num + den - 1) / den : -((-num) / den);
            if (strict && b * den == num) ++b;
            ylo = std::max(ylo, b);
        };
        auto constrain = [&](int64_t cy, int64_t c0, bool strict) {
            // cy*y + c0 <= 0 (or < 0 when strict)
            if (cy == 0) {
                if (c0 > 0 || (strict && c0 == 0)) bad = true;
            } else if (cy > 0) {
                upper(-c0, cy, strict);
            } else {
                lower(c0, -cy, strict);  // y >= c0 / (-cy)
            }
        };
        // v in C: lx*y - ly*x <= 0  ->  cy = lx, c0 = -ly*x
        constrain(C.lx, -C.ly * x, !C.l_closed);
        // v in C: -rx*y + ry*x <= 0
        constrain(-C.rx, C.ry * x, !C.r_closed);
        // w - v in C: lx*(wy - y) - ly*(wx - x) <= 0 -> cy = -lx
        constrain(-C.lx, C.lx * wy - C.ly * (wx - x), !C.l_closed);
        // w - v in C: (wx - x)*ry - (wy - y)*rx <= 0 -> cy = rx
        constrain(C.rx, (wx - x) * C.ry - wy * C.rx, !C.r_closed);
        if (bad || ylo > yhi) continue;
        for (int64_t y = ylo; y <= yhi; ++y) {
            if (x == 0 && y == 0) continue;
            if (x == wx && y == wy) continue;
            if (C.contains(x, y) && C.contains(wx - x, wy - y)) return true;
        }
    }
    return false;
}

// Brute-force sail: all primitive lattice points of the cone inside the
// window that admit no decomposition (boundary-ray points always count).
inline std::vector<std::pair<int64_t, int64_t>> brute_sail(const SmallCone& C, int64_t window) {
    std::vector<std::pair<int64_t, int64_t>> out;
    for (int64_t x = -window; x <= window; ++x) {
        for (int64_t y = -window; y <= window; ++y) {
            if ((x == 0 && y == 0) || std::gcd(std::abs(x), std::abs(y)) != 1) continue;
            if (!C.contains(x, y)) continue;
            bool boundary;
            if (!C.strictly_contains(x, y)) {
                boundary = true;  // on a closed boundary ray
            } else {
                boundary = !has_decomposition(C, x, y);
            }
            if (boundary) out.push_back({x, y});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.first * b.second - a.second * b.first < 0;  // wedge order
    });
    return out;
}

inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    std::size_t k = c.size();
    for (std::size_t j = k; j-- > 0;) {
        if (c[j] < n - (k - j)) {
            ++c[j];
            for (std::size_t l = j + 1; l < k; ++l) c[l] = c[l - 1] + 1;
            return true;
        }
    }
    return false;
}

inline tightcensus::Int laplace_det(const std::vector<std::vector<tightcensus::Int>>& A) {
    using tightcensus::Int;
    std::size_t s = A.size();
    if (s == 1) return A[0][0];
    Int acc = 0;
    int sign = 1;
    for (std::size_t j = 0; j < s; ++j) {
        std::vector<std::vector<Int>> B(s - 1, std::vector<Int>(s - 1));
        for (std::size_t i = 1; i < s; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < s; ++c) {
                if (c == j) continue;
                B[i - 1][cc++] = A[i][c];
            }
        }
        acc += Int(sign) * A[0][j] * laplace_det(B);
        sign = -sign;
    }
    return acc;
}

// Determinantal-divisor Smith form oracle: k-th invariant factor equals
// gcd(k-minors)/gcd((k-1)-minors).
inline std::vector<tightcensus::Int> smith_factors_oracle(
    const std::vector<std::vector<tightcensus::Int>>& M) {
    using tightcensus::Int;
    std::size_t m = M.size(), n = M[0].size();
    std::size_t r = std::min(m, n);
    std::vector<Int> d(r + 1, 0);
    d[0] = 1;
    for (std::size_t k = 1; k <= r; ++k) {
        Int g = 0;
        std::vector<std::size_t> rows(k);
        for (std::size_t i = 0; i < k; ++i) rows[i] = i;
        do {
            std::vector<std::size_t> cols(k);
            for (std::size_t i = 0; i < k; ++i) cols[i] = i;
            do {
                std::vector<std::vector<Int>> sub(k, std::vector<Int>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub[i][j] = M[rows[i]][cols[j]];
                g = tightcensus::gcd_int(g, laplace_det(sub));
            } while (next_combination(cols, n));
        } while (next_combination(rows, m));
        d[k] = g;
    }
    std::vector<Int> factors;
    for (std::size_t k = 1; k <= r; ++k) {
        factors.push_back(d[k] == 0 ? Int(0) : d[k] / d[k - 1]);
    }
    return factors;
}

// random SL2(Z) element: product of up to `len` elementary generators
inline tightcensus::SL2Mat random_sl2(std::mt19937& rng, int len) {
    using tightcensus::SL2Mat;
    SL2Mat acc{1, 0, 0, 1};
    std::uniform_int_distribution<int> pick(0, 3);
    for (int i = 0; i < len; ++i) {
        SL2Mat g{1, 0, 0, 1};
        switch (pick(rng)) {
            case 0: g = SL2Mat{1, 1, 0, 1}; break;
            case 1: g = SL2Mat{1, -1, 0, 1}; break;
            case 2: g = SL2Mat{1, 0, 1, 1}; break;
            case 3: g = SL2Mat{1, 0, -1, 1}; break;
        }
        acc = acc * g;
    }
    return acc;
}

}  // namespace oracles
