#pragma once

// The ordered-subset function gamma(Q) = w_1 - w_2 + w_3 - ... over
// subsets of a sail, the relative Euler classes 2*gamma, and the invariant
// value sets X_u / X_v of the thick torus and their solid-torus analogues.

#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tightcensus/sail.hpp"

namespace tightcensus {

// Subset of a single sail's points, strictly ordered by w <= w' iff w ^ w' <= 0
// (collinear neighbours, which occur only on a half-plane sail, are ordered by
// position along the shared edge).
struct OrderedSubset {
    std::vector<Vec> points;

    static bool ordered(const std::vector<Vec>& pts) {
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            Int w = wedge(pts[i], pts[i + 1]);
            if (w > 0) return false;
            if (w == 0 && pts[i + 1] != -pts[i]) return false;
        }
        return true;
    }

    explicit OrderedSubset(std::vector<Vec> pts) : points(std::move(pts)) {
        if (!ordered(points)) throw std::invalid_argument("subset not ≼-sorted");
    }
    OrderedSubset() = default;
};

inline Vec gamma(const OrderedSubset& Q) {
    Vec acc{0, 0};
    int sign = 1;
    for (const Vec& w : Q.points) {
        acc = sign > 0 ? acc + w : acc - w;
        sign = -sign;
    }
    return acc;
}

// chi_boundary = 2 gamma(R) for a retournement locus R
inline Vec euler_from_retournement(const OrderedSubset& R) {
    Vec g = gamma(R);
    return {2 * g.x, 2 * g.y};
}

namespace detail_gamma {

// Enumeration guard: default 24 points, overridable through CENSUS_ENUM_CAP
// (clamped to 28).
inline std::size_t enum_cap() {
    std::size_t cap = 24;
    if (const char* env = std::getenv("CENSUS_ENUM_CAP")) {
        long v = std::atol(env);
        if (v > 0) cap = static_cast<std::size_t>(v);
    }
    if (cap > 28) cap = 28;
    return cap;
}

// Value sets of gamma over all subsets of the ordered point list, split by
// cardinality parity and by whether the subset meets the marked points.
// Equivalent to full subset enumeration: reachable partial sums are merged,
// which loses nothing when only the sets of values are wanted.
struct GammaValueSets {
    std::set<Vec> even_unmarked, even_marked, odd_unmarked, odd_marked;
    bool complete = true;  // false if the state cap was hit
};

inline GammaValueSets gamma_value_sets(const std::vector<Vec>& pts,
                                       const std::vector<bool>& marked,
                                       std::size_t state_cap = 2000000) {
    GammaValueSets out;
    // state index: parity (0 even, 1 odd) x met-marked (0 no, 1 yes)
    std::set<Vec> cur[2][2];
    cur[0][0].insert(Vec{0, 0});
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::set<Vec> nxt[2][2];
        for (int p = 0; p < 2; ++p) {
            for (int m = 0; m < 2; ++m) {
                for (const Vec& v : cur[p][m]) {
                    nxt[p][m].insert(v);  // skip pts[i]
                    Vec taken = (p == 0) ? v + pts[i] : v - pts[i];
                    int nm = (m == 1 || marked[i]) ? 1 : 0;
                    nxt[1 - p][nm].insert(taken);
                }
            }
        }
        std::size_t total = 0;
        for (int p = 0; p < 2; ++p)
            for (int m = 0; m < 2; ++m) total += nxt[p][m].size();
        if (total > state_cap) {
            out.complete = false;
            break;
        }
        for (int p = 0; p < 2; ++p)
            for (int m = 0; m < 2; ++m) cur[p][m] = std::move(nxt[p][m]);
    }
    out.even_unmarked = std::move(cur[0][0]);
    out.even_marked = std::move(cur[0][1]);
    out.odd_unmarked = std::move(cur[1][0]);
    out.odd_marked = std::move(cur[1][1]);
    return out;
}

inline std::set<Vec> set_union(const std::set<Vec>& a, const std::set<Vec>& b) {
    std::set<Vec> u = a;
    u.insert(b.begin(), b.end());
    return u;
}

}  // namespace detail_gamma

enum class Parity { Even, Odd };

struct GammaCount {
    Int count;
    std::set<Vec> values;        // empty when the closed form was used
    bool from_closed_form = false;
    std::string provenance;
};

// Number of distinct gamma values over subsets of B-hat of the given parity.
// Beyond the enumeration guard the caller may request the closed form
// prod(a_i - 1) instead by passing the facet numbers.
inline GammaCount gamma_value_count(const std::vector<Vec>& bhat, Parity parity,
                                    const std::optional<std::vector<Int>>& closed_form_a = {}) {
    GammaCount out;
    if (bhat.size() > detail_gamma::enum_cap()) {
        if (!closed_form_a) {
            throw std::runtime_error("gamma_value_count: subset enumeration guard exceeded");
        }
        Int prod = 1;
        for (const Int& a : *closed_form_a) prod *= (a - 1);
        out.count = prod;
        out.from_closed_form = true;
        out.provenance = "product formula prod(a_i - 1)";
        return out;
    }
    if (!OrderedSubset::ordered(bhat)) {
        throw std::invalid_argument("gamma_value_count: points not ≼-sorted");
    }
    std::vector<bool> marked(bhat.size(), false);
    auto sets = detail_gamma::gamma_value_sets(bhat, marked);
    std::set<Vec> vals = (parity == Parity::Even)
                             ? detail_gamma::set_union(sets.even_unmarked, sets.even_marked)
                             : detail_gamma::set_union(sets.odd_unmarked, sets.odd_marked);
    if (parity == Parity::Odd && bhat.empty()) vals.clear();
    out.count = Int(vals.size());
    out.values = std::move(vals);
    out.provenance = "subset enumeration";
    return out;
}

// Unguarded even-parity gamma value set over an ordered point list; the
// geometric leg of the two-path census check.
inline std::set<Vec> gamma_even_values(const std::vector<Vec>& pts) {
    if (!OrderedSubset::ordered(pts)) {
        throw std::invalid_argument("gamma_even_values: points not ≼-sorted");
    }
    std::vector<bool> marked(pts.size(), false);
    auto sets = detail_gamma::gamma_value_sets(pts, marked);
    if (!sets.complete) throw std::runtime_error("gamma_even_values: state cap exceeded");
    return detail_gamma::set_union(sets.even_unmarked, sets.even_marked);
}

struct XuXv {
    std::set<Vec> xu;               // 2 gamma(Q), Q inside the extremity set
    std::set<Vec> xv;               // 2 gamma(Q), Q meeting Int B (windowed)
    bool xu_exact = true;           // false when a closed-ray endpoint was cut
    bool xv_exact = true;           // false when B was window-truncated
    std::string xv_description;     // symbolic description when infinite
};

// Thm-1.5 value sets from a computed sail. X_u is exact (at most 2 extremity
// points); X_v is enumerated within the window and flagged when truncated.
inline XuXv xu_xv(const Sail& B) {
    XuXv out;
    std::vector<Vec> bd = B.boundary();
    // X_u: subsets of the extremities
    std::vector<bool> none(bd.size(), false);
    auto bd_sets = detail_gamma::gamma_value_sets(bd, none);
    for (const Vec& g : detail_gamma::set_union(
             detail_gamma::set_union(bd_sets.even_unmarked, bd_sets.odd_unmarked),
             detail_gamma::set_union(bd_sets.even_marked, bd_sets.odd_marked))) {
        out.xu.insert(Vec{2 * g.x, 2 * g.y});
    }
    // X_v: subsets meeting Int B
    std::vector<bool> marked(B.points.size(), false);
    for (std::size_t i = 0; i < B.points.size(); ++i) {
        marked[i] = B.interior_contains(B.points[i]);
    }
    auto sets = detail_gamma::gamma_value_sets(B.points, marked);
    for (const Vec& g : detail_gamma::set_union(sets.even_marked, sets.odd_marked)) {
        out.xv.insert(Vec{2 * g.x, 2 * g.y});
    }
    out.xu_exact = B.left_end_exact && B.right_end_exact;
    out.xv_exact = !B.truncated_left && !B.truncated_right && sets.complete &&
                   !B.empty_within_window;
    if (!out.xv_exact) {
        out.xv_description = "all 2*gamma(Q) over finite Q meeting Int B (window-bounded sample)";
    }
    return out;
}

struct XuXvSolid {
    std::set<Int> xu, xv;  // 1 + 2 i_* gamma(Q), even Q
    bool exact = true;
};

// Thm-1.6 value sets: even-cardinality subsets of B-hat, projected to the
// first homology factor, i_*(x, y) = x.
inline XuXvSolid xu_xv_solid(const std::vector<Vec>& bhat, const std::vector<Vec>& boundary_pts) {
    XuXvSolid out;
    std::vector<bool> marked(bhat.size(), true);
    for (std::size_t i = 0; i < bhat.size(); ++i) {
        for (const Vec& b : boundary_pts) {
            if (bhat[i] == b) marked[i] = false;
        }
    }
    auto sets = detail_gamma::gamma_value_sets(bhat, marked);
    for (const Vec& g : sets.even_unmarked) out.xu.insert(1 + 2 * g.x);
    for (const Vec& g : sets.even_marked) out.xv.insert(1 + 2 * g.x);
    out.exact = sets.complete;
    return out;
}

// All finite Q inside the sail's window with 2 gamma(Q) = chi, as explicit
// ordered subsets. Subject to the enumeration guard.
struct RetournementCandidates {
    std::vector<OrderedSubset> loci;
    bool window_exact = true;
};

inline RetournementCandidates retournement_candidates(const Sail& B, const Vec& chi) {
    if (chi.x % 2 != 0 || chi.y % 2 != 0) {
        throw std::invalid_argument("retournement_candidates: chi must be an even vector");
    }
    const std::size_t n = B.points.size();
    if (n > detail_gamma::enum_cap()) {
        throw std::runtime_error("retournement_candidates: subset enumeration guard exceeded");
    }
    RetournementCandidates out;
    out.window_exact = !B.truncated_left && !B.truncated_right;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        Vec acc{0, 0};
        int sign = 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask & (1ul << i))) continue;
            acc = sign > 0 ? acc + B.points[i] : acc - B.points[i];
            sign = -sign;
        }
        if (2 * acc.x == chi.x && 2 * acc.y == chi.y) {
            std::vector<Vec> pts;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (1ul << i)) pts.push_back(B.points[i]);
            }
            out.loci.push_back(OrderedSubset(std::move(pts)));
        }
    }
    return out;
}

}  // namespace tightcensus
