#pragma once

// Disjoint arc families on the punctured disk and the annulus.
//
// Punctured disk, 2n marked boundary points: an isotopy class of a disjoint
// pairing is exactly a non-crossing chord matching together with the choice
// of the complementary face holding the puncture (n + 1 faces per matching),
// and sum over matchings gives the central binomial C(2n, n).
//
// Annulus, 2n_i points on boundary i: a class with 2s traversing arcs is a
// choice of traversing points on each side whose complementary gaps carry
// non-crossing matchings, plus the cyclic offset of the traversing bundle
// modulo the Dehn twist along the core (2s values).

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tightcensus/bigint.hpp"

namespace tightcensus {

struct ArcProblem {
    enum class Surface { PuncturedDisk, Annulus } surface;
    Int n = 0;        // disk
    Int n0 = 0, n1 = 0;  // annulus

    static ArcProblem disk(Int n) {
        if (n < 0) throw std::invalid_argument("ArcProblem: n must be >= 0");
        return {Surface::PuncturedDisk, std::move(n), 0, 0};
    }
    static ArcProblem annulus(Int n0, Int n1) {
        if (n0 < 0 || n1 < 0) throw std::invalid_argument("ArcProblem: n_i must be >= 0");
        return {Surface::Annulus, 0, std::move(n0), std::move(n1)};
    }
};

struct ArcPair {
    int boundary_a = 0, index_a = 0;
    int boundary_b = 0, index_b = 0;
    bool traversing = false;
};

struct Matching {
    std::vector<ArcPair> pairs;
    int puncture_region = -1;  // disk only: face index carrying the puncture
    int twist_offset = -1;     // annulus only: traversing offset mod 2s
};

inline Int disk_count(const Int& n) {
    if (n < 0) throw std::invalid_argument("disk_count: n must be >= 0");
    return binomial(2 * n, n);
}

inline Int annulus_count(const Int& n0, const Int& n1) {
    if (n0 < 0 || n1 < 0) throw std::invalid_argument("annulus_count: n_i must be >= 0");
    Int total = 0;
    Int top = n0 < n1 ? n0 : n1;
    for (Int n = 1; n <= top; ++n) {
        total += 2 * n * binomial(2 * n0, n0 - n) * binomial(2 * n1, n1 - n);
    }
    return total;
}

namespace detail_arcs {

// all non-crossing perfect matchings of the points listed in circular order
inline void noncrossing_matchings(const std::vector<int>& pts,
                                  std::vector<std::pair<int, int>>& acc,
                                  std::vector<std::vector<std::pair<int, int>>>& out) {
    if (pts.empty()) {
        out.push_back(acc);
        return;
    }
    // match pts[0] with pts[j] for odd j, splitting the rest into two arcs
    for (std::size_t j = 1; j < pts.size(); j += 2) {
        acc.emplace_back(pts[0], pts[j]);
        std::vector<int> inside(pts.begin() + 1, pts.begin() + j);
        std::vector<int> outside(pts.begin() + j + 1, pts.end());
        std::vector<std::vector<std::pair<int, int>>> tmp;
        // enumerate inside then outside by nested recursion
        std::vector<std::vector<std::pair<int, int>>> ins;
        {
            std::vector<std::pair<int, int>> acc2;
            noncrossing_matchings(inside, acc2, ins);
        }
        for (const auto& mi : ins) {
            std::vector<std::pair<int, int>> acc3 = acc;
            acc3.insert(acc3.end(), mi.begin(), mi.end());
            std::vector<std::vector<std::pair<int, int>>> outs;
            {
                std::vector<std::pair<int, int>> acc4;
                noncrossing_matchings(outside, acc4, outs);
            }
            for (const auto& mo : outs) {
                std::vector<std::pair<int, int>> full = acc3;
                full.insert(full.end(), mo.begin(), mo.end());
                out.push_back(full);
            }
        }
        acc.pop_back();
    }
}

inline std::vector<std::vector<std::pair<int, int>>> noncrossing_matchings(int m) {
    std::vector<int> pts(m);
    for (int i = 0; i < m; ++i) pts[i] = i;
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<std::pair<int, int>> acc;
    noncrossing_matchings(pts, acc, out);
    return out;
}

// faces of a non-crossing matching on points 0..m-1: each boundary gap
// (i, i+1 mod m) lies in exactly one face; two gaps share a face iff no chord
// separates them. Returns for each gap a face id, plus the face count.
inline std::pair<std::vector<int>, int> matching_faces(
    const std::vector<std::pair<int, int>>& chords, int m) {
    // gap g sits between point g and point (g+1) mod m.
    // chord (a, b) with a < b separates gap g from gap h iff exactly one of
    // them lies in [a, b).
    auto inside = [](const std::pair<int, int>& c, int gap) {
        int a = std::min(c.first, c.second), b = std::max(c.first, c.second);
        return gap >= a && gap < b;
    };
    std::vector<int> face(static_cast<std::size_t>(m == 0 ? 1 : m), -1);
    if (m == 0) {
        face[0] = 0;
        return {face, 1};
    }
    int next_face = 0;
    for (int g = 0; g < m; ++g) {
        if (face[g] != -1) continue;
        int id = next_face++;
        for (int h = g; h < m; ++h) {
            if (face[h] != -1) continue;
            bool same = true;
            for (const auto& c : chords) {
                if (inside(c, g) != inside(c, h)) {
                    same = false;
                    break;
                }
            }
            if (same) face[h] = id;
        }
    }
    return {face, next_face};
}

}  // namespace detail_arcs

// Explicit enumeration of the isotopy classes; list length matches the closed
// forms. Guarded to 2n <= 12 marked points per the desk-scale budget.
inline std::vector<Matching> enumerate_matchings(const ArcProblem& problem) {
    std::vector<Matching> out;
    if (problem.surface == ArcProblem::Surface::PuncturedDisk) {
        if (2 * problem.n > 12) throw std::runtime_error("enumerate_matchings: size guard exceeded");
        int m = static_cast<int>(2 * problem.n);
        for (const auto& chords : detail_arcs::noncrossing_matchings(m)) {
            auto [face_of_gap, nfaces] = detail_arcs::matching_faces(chords, m);
            for (int f = 0; f < nfaces; ++f) {
                Matching M;
                for (const auto& c : chords) {
                    M.pairs.push_back({0, c.first, 0, c.second, false});
                }
                M.puncture_region = f;
                out.push_back(std::move(M));
            }
        }
        return out;
    }

    if (2 * (problem.n0 + problem.n1) > 12) {
        throw std::runtime_error("enumerate_matchings: size guard exceeded");
    }
    int m0 = static_cast<int>(2 * problem.n0);
    int m1 = static_cast<int>(2 * problem.n1);
    Int top = problem.n0 < problem.n1 ? problem.n0 : problem.n1;

    // all ways to pick the traversing points on one side so that every gap
    // between consecutive traversing points holds a non-crossing matching
    struct SideConfig {
        std::vector<int> traversing;                 // ascending positions
        std::vector<std::pair<int, int>> same_side;  // matched pairs
    };
    auto side_configs = [](int m, int s2) {
        std::vector<SideConfig> configs;
        std::vector<int> t;
        // choose s2 traversing positions out of m
        std::vector<int> idx(s2);
        auto rec = [&](auto&& self, int start, int k) -> void {
            if (k == s2) {
                // gaps between consecutive traversing points (cyclically)
                std::vector<std::vector<int>> gaps(s2);
                std::vector<bool> is_t(m, false);
                for (int v : idx) is_t[v] = true;
                for (int g = 0; g < s2; ++g) {
                    int from = idx[g];
                    int to = idx[(g + 1) % s2];
                    for (int p = (from + 1) % m; p != to; p = (p + 1) % m) gaps[g].push_back(p);
                }
                // every gap must be even; enumerate per-gap NC matchings
                for (const auto& gap : gaps) {
                    if (gap.size() % 2 != 0) return;
                }
                std::vector<std::vector<std::vector<std::pair<int, int>>>> per_gap;
                for (const auto& gap : gaps) {
                    std::vector<std::vector<std::pair<int, int>>> ms;
                    std::vector<std::pair<int, int>> acc;
                    detail_arcs::noncrossing_matchings(gap, acc, ms);
                    per_gap.push_back(std::move(ms));
                }
                // cartesian product
                std::vector<std::size_t> pick(per_gap.size(), 0);
                while (true) {
                    SideConfig sc;
                    sc.traversing = idx;
                    for (std::size_t g = 0; g < per_gap.size(); ++g) {
                        const auto& mm = per_gap[g][pick[g]];
                        sc.same_side.insert(sc.same_side.end(), mm.begin(), mm.end());
                    }
                    configs.push_back(std::move(sc));
                    std::size_t g = 0;
                    for (; g < per_gap.size(); ++g) {
                        if (++pick[g] < per_gap[g].size()) break;
                        pick[g] = 0;
                    }
                    if (g == per_gap.size()) break;
                }
                return;
            }
            for (int v = start; v < m; ++v) {
                idx[k] = v;
                self(self, v + 1, k + 1);
            }
        };
        if (s2 == 0) return configs;  // annulus classes need a traversing arc
        rec(rec, 0, 0);
        return configs;
    };

    for (Int s = 1; s <= top; ++s) {
        int s2 = static_cast<int>(2 * s);
        auto c0 = side_configs(m0, s2);
        auto c1 = side_configs(m1, s2);
        for (const auto& a : c0) {
            for (const auto& b : c1) {
                for (int shift = 0; shift < s2; ++shift) {
                    Matching M;
                    for (const auto& pr : a.same_side) {
                        M.pairs.push_back({0, pr.first, 0, pr.second, false});
                    }
                    for (const auto& pr : b.same_side) {
                        M.pairs.push_back({1, pr.first, 1, pr.second, false});
                    }
                    for (int k = 0; k < s2; ++k) {
                        M.pairs.push_back(
                            {0, a.traversing[k], 1, b.traversing[(k + shift) % s2], true});
                    }
                    M.twist_offset = shift;
                    out.push_back(std::move(M));
                }
            }
        }
    }
    return out;
}

}  // namespace tightcensus
