#pragma once

// Sails: the ordered chain B of primitive lattice points on the boundary of
// the convex hull E of a cone's integer points.
//
// The walk rests on one fact: consecutive points u, v of B satisfy
// u ^ v = -1, and among the lattice points of C on the line {u ^ v = -1}
// the successor of u is the one with the least coefficient t in v0 + t*u
// (any smaller-t candidate would sit strictly on the origin side of the
// supporting line through u and the successor, hence outside E). Walking
// that rule in both directions from a boundary anchor enumerates B exactly.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tightcensus/cone.hpp"
#include "tightcensus/negcf.hpp"

namespace tightcensus {

struct SailEdge {
    std::size_t first = 0, last = 0;  // index range into Sail::points
    bool infinite = false;            // unbounded edge of the hull boundary
};

struct Sail {
    std::vector<Vec> points;  // ordered left-to-right by  w <= w'  iff  w ^ w' <= 0
    std::vector<SailEdge> edges;
    bool left_natural = false;   // left end of B exists (closed rational ray)
    bool right_natural = false;
    bool truncated_left = false;  // window cut the walk on this side
    bool truncated_right = false;
    bool left_end_exact = true;   // the reported extremity structure is true
    bool right_end_exact = true;  // (false when a closed-ray endpoint was cut)
    bool empty_within_window = false;
    bool half_plane = false;
    Int window = 0;

    // extremities of B (0, 1 or 2 points)
    std::vector<Vec> boundary() const {
        std::vector<Vec> out;
        if (points.empty()) return out;
        bool left_end = left_natural || half_plane;
        bool right_end = right_natural || half_plane;
        if (left_end) out.push_back(points.front());
        if (right_end && !(left_end && points.size() == 1)) out.push_back(points.back());
        return out;
    }

    bool interior_contains(const Vec& v) const {  // v in Int B
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (points[i] != v) continue;
            bool is_left_end = (i == 0) && (left_natural || half_plane);
            bool is_right_end = (i + 1 == points.size()) && (right_natural || half_plane);
            return !is_left_end && !is_right_end;
        }
        return false;
    }
};

namespace detail_sail {

struct ExtGcd {
    Int g, x, y;  // a x + b y = g
};

inline ExtGcd ext_gcd(const Int& a, const Int& b) {
    Int r0 = a, r1 = b, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int x2 = x0 - q * x1;
        Int y2 = y0 - q * y1;
        r0 = r1; r1 = r2;
        x0 = x1; x1 = x2;
        y0 = y1; y1 = y2;
    }
    if (r0 < 0) { r0 = -r0; x0 = -x0; y0 = -y0; }
    return {r0, x0, y0};
}

// Exact value of the boundary functional of a ray at v: for a rational ray d
// this is d ^ v; for a surd half-line sx*(1, z) it is sx*(v_y - z v_x).
// Cone membership on the left side reads f_left(v) <= 0 (< 0 if open), and on
// the right side f_right(v) >= 0 (> 0 if open).
inline QuadExpr ray_functional(const RayBound& ray, const Vec& v) {
    if (ray.is_rational()) return QuadExpr::rational(Rational(wedge(ray.vec(), v)));
    const SurdRay& s = ray.surd();
    QuadExpr z = QuadExpr::from(s.slope);
    Rational sx{Int(s.x_sign)};
    return QuadExpr{sx * (Rational(v.y) - z.r * Rational(v.x)), sx * (-z.s * Rational(v.x)), z.D};
}

inline int quadexpr_compare(const QuadExpr& p, const QuadExpr& q) {
    if (q.s.sign() == 0) return QuadExpr{p.r - q.r, p.s, p.D}.sign();
    if (p.s.sign() == 0) return -quadexpr_compare(q, p);
    if (p.D == q.D) return QuadExpr{p.r - q.r, p.s - q.s, p.D}.sign();
    // sign of (p.r - q.r) + p.s sqrt(Dp) - q.s sqrt(Dq)
    Rational c = p.r - q.r;
    QuadExpr lhs{c, p.s, p.D};
    int sl = lhs.sign();
    int st = q.s.sign();
    if (sl <= 0 && st > 0) return -1;
    if (sl >= 0 && st < 0) return 1;
    QuadExpr lhs2{c * c + p.s * p.s * Rational(p.D), c * p.s * Rational(2), p.D};
    int cmp = QuadExpr{lhs2.r - q.s * q.s * Rational(q.D), lhs2.s, p.D}.sign();
    return sl > 0 ? cmp : -cmp;
}

// quotient (-A)/B of two functional values over the same surd field
inline QuadExpr neg_ratio(const QuadExpr& A, const QuadExpr& B) {
    if (B.s.sign() == 0) {
        if (B.r.sign() == 0) throw std::logic_error("neg_ratio: zero denominator");
        return QuadExpr{-A.r / B.r, -A.s / B.r, A.D};
    }
    // (a + b sqrt(D)) / (c + e sqrt(D)) with matching D
    if (A.s.sign() != 0 && A.D != B.D) throw std::logic_error("neg_ratio: mixed discriminants");
    Rational den = B.r * B.r - B.s * B.s * Rational(B.D);
    Rational a = -A.r, b = -A.s;
    return QuadExpr{(a * B.r - b * B.s * Rational(B.D)) / den, (b * B.r - a * B.s) / den, B.D};
}

struct StepBounds {
    bool feasible = true;
    bool has_lower = false;
    QuadExpr lower = QuadExpr::rational(Rational(0));
    bool lower_strict = false;
};

inline void apply_constraint(StepBounds& sb, const QuadExpr& c0, const QuadExpr& c1, bool strict) {
    int s1 = c1.sign();
    if (s1 == 0) {
        int s0 = c0.sign();
        if (s0 > 0 || (s0 == 0 && strict)) sb.feasible = false;
        return;
    }
    if (s1 > 0) {
        // the walk's functionals have nonpositive t-coefficients on the
        // closed cone, so an upper bound signals a broken invariant
        throw std::logic_error("sail walk: unexpected upper bound");
    }
    QuadExpr bound = neg_ratio(c0, c1);
    if (!sb.has_lower || quadexpr_compare(bound, sb.lower) > 0 ||
        (quadexpr_compare(bound, sb.lower) == 0 && strict)) {
        sb.has_lower = true;
        sb.lower = bound;
        sb.lower_strict = strict;
    }
}

inline Int first_integer_at_least(const QuadExpr& bound, bool strict) {
    if (bound.s.sign() == 0) {
        return strict ? bound.r.floor() + 1 : bound.r.ceil();
    }
    return bound.ceil();  // a surd is never an integer
}

// One walk step. dir = +1: successor (solve w ^ v = -1); dir = -1:
// predecessor (w ^ v = +1). Returns nothing at a natural end of B.
inline std::optional<Vec> step_point(const LatticeCone& C, const Vec& w, int dir) {
    ExtGcd eg = ext_gcd(w.x, w.y);  // w primitive: g = 1, w.x x + w.y y = 1
    Vec v0 = dir > 0 ? Vec{eg.y, -eg.x} : Vec{-eg.y, eg.x};
    // left side: f_L(v0 + t w) <= 0 (strict if open)
    QuadExpr l0 = ray_functional(C.left(), v0);
    QuadExpr l1 = ray_functional(C.left(), w);
    // right side: f_R(v) >= 0 becomes -f_R <= 0
    QuadExpr r0 = -ray_functional(C.right(), v0);
    QuadExpr r1 = -ray_functional(C.right(), w);

    StepBounds sb;
    apply_constraint(sb, l0, l1, !C.left().closed);
    if (!sb.feasible) return std::nullopt;
    apply_constraint(sb, r0, r1, !C.right().closed);
    if (!sb.feasible) return std::nullopt;
    if (!sb.has_lower) throw std::logic_error("sail walk: no lower bound");

    Int t = first_integer_at_least(sb.lower, sb.lower_strict);
    for (int tries = 0; tries < 3; ++tries) {
        Vec v = v0 + (t + Int(tries)) * w;
        if (C.contains(v)) return v;
    }
    throw std::logic_error("sail walk: step landed outside the cone");
}

// Rational primitive direction strictly inside the cone, by mediant descent.
// A cone wider than one octant contains a compass direction outright; a
// narrower one sits inside a single octant (u, v), where the Stern-Brocot
// mediants converge onto the opening.
inline Vec inside_direction(const LatticeCone& C) {
    static const Vec compass[8] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1},
                                   {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
    for (const Vec& d : compass) {
        if (C.strictly_contains(d)) return d;
    }
    for (int i = 0; i < 8; ++i) {
        Vec u = compass[i], v = compass[(i + 1) % 8];
        // both boundary rays weakly inside the CCW sector (u, v):
        // dR ^ u <= 0 (u precedes dR) and dL ^ v >= 0 (v follows dL)
        if (!(ray_wedge_sign(C.right().dir, u) <= 0 && ray_wedge_sign(C.left().dir, v) >= 0)) {
            continue;
        }
        if (!(ray_wedge_sign(C.left().dir, u) <= 0 && ray_wedge_sign(C.right().dir, v) >= 0)) {
            continue;  // sector does not bracket the whole cone
        }
        for (int iter = 0; iter < 20000; ++iter) {
            Vec m = u + v;
            if (C.strictly_contains(m)) return primitive_part(m);
            if (ray_wedge_sign(C.right().dir, m) <= 0) {
                u = m;  // m clockwise of the cone interior
            } else {
                v = m;  // m counterclockwise of it
            }
        }
        throw std::runtime_error("inside_direction: mediant descent did not converge");
    }
    throw std::logic_error("inside_direction: no octant brackets the cone");
}

// Existential decomposition v in C with m - v in C (the interior criterion).
// Bounded scan over x; per x the feasible y-range is an exact interval.
inline std::optional<Vec> find_decomposition(const LatticeCone& C, const Vec& m, const Int& xcap) {
    auto y_interval = [&](const Int& x, bool& ok) -> std::pair<Int, Int> {
        // four constraints: f_L(v) <= 0, -f_R(v) <= 0, f_L(m - v) <= 0, -f_R(m - v) <= 0,
        // strict where the side is open. Each is linear in y for fixed x.
        // Evaluate with v = (x, 0) + y * (0, 1).
        Int ylo_set = 0, yhi_set = 0;
        bool has_lo = false, has_hi = false;
        ok = true;
        auto handle = [&](const QuadExpr& c0, const QuadExpr& c1, bool strict) {
            int s1 = c1.sign();
            if (s1 == 0) {
                int s0 = c0.sign();
                if (s0 > 0 || (s0 == 0 && strict)) ok = false;
                return;
            }
            QuadExpr bound = neg_ratio(c0, c1);
            if (s1 < 0) {
                Int b = first_integer_at_least(bound, strict);
                if (!has_lo || b > ylo_set) { ylo_set = b; has_lo = true; }
            } else {
                // upper bound: largest integer <= bound (strictly below if strict)
                Int b;
                if (bound.s.sign() == 0) {
                    b = strict ? bound.r.ceil() - 1 : bound.r.floor();
                } else {
                    b = bound.floor();
                }
                if (!has_hi || b < yhi_set) { yhi_set = b; has_hi = true; }
            }
        };
        Vec base{x, 0}, ey{0, 1};
        // f_L(base + y ey) = f_L(base) + y f_L(ey)
        handle(ray_functional(C.left(), base), ray_functional(C.left(), ey), !C.left().closed);
        handle(-ray_functional(C.right(), base), -ray_functional(C.right(), ey), !C.right().closed);
        Vec mbase = m - base;
        // f_L(m - v) = f_L(mbase) - y f_L(ey)
        handle(ray_functional(C.left(), mbase), -ray_functional(C.left(), ey), !C.left().closed);
        handle(-ray_functional(C.right(), mbase), ray_functional(C.right(), ey), !C.right().closed);
        if (!ok) return {0, -1};
        if (!has_lo || !has_hi) {
            // the strip is a cone intersection of two opposite cones: always bounded
            throw std::logic_error("find_decomposition: unbounded y-range");
        }
        return {ylo_set, yhi_set};
    };

    for (Int x = -xcap; x <= xcap; ++x) {
        bool ok = true;
        auto [ylo, yhi] = y_interval(x, ok);
        if (!ok || ylo > yhi) continue;
        Vec v{x, ylo};
        if (v.is_zero()) {
            if (ylo == yhi) continue;
            v.y = ylo + 1;
        }
        if (v == m) {
            if (v.y + 1 <= yhi) v.y = v.y + 1; else continue;
            if (v.is_zero()) continue;
        }
        return v;
    }
    return std::nullopt;
}

inline Vec inside_direction(const LatticeCone& C);

// Exact x-extent of C cut at the level w0 ^ v <= K, where w0 lies strictly
// inside the dual cone. The cut is a triangle with apex 0; its extreme x
// values sit on the boundary rays at the level line.
inline Int level_cut_x_extent(const LatticeCone& C, const Vec& w0, const Int& K) {
    auto ray_extent = [&](const RayBound& ray) -> Int {
        if (ray.is_rational()) {
            const Vec& d = ray.vec();
            Int f = wedge(w0, d);  // > 0 for w0 in the open dual
            if (f <= 0) throw std::logic_error("level_cut_x_extent: bad dual direction");
            return abs_int(K * d.x) / f + 1;
        }
        const SurdRay& s = ray.surd();
        QuadExpr z = QuadExpr::from(s.slope);
        // d = sx (1, z): w0 ^ d = sx (w0.x z - w0.y); x-coordinate of the
        // level point s*d is K * sx / (w0 ^ d) = K / (w0.x z - w0.y)
        QuadExpr f{Rational(-w0.y), Rational(0), z.D};
        f = QuadExpr{f.r + z.r * Rational(w0.x), z.s * Rational(w0.x), z.D};
        QuadExpr xP = neg_ratio(QuadExpr::rational(Rational(-K)), f);
        Int lo = xP.floor();
        Int hi = xP.ceil();
        Int bound = abs_int(lo) > abs_int(hi) ? abs_int(lo) : abs_int(hi);
        return bound + 1;
    };
    Int a = ray_extent(C.left());
    Int b = ray_extent(C.right());
    return (a > b ? a : b);
}

// Drop an interior lattice point of C onto the hull boundary by repeatedly
// splitting off a summand. The decomposition scan is cut exactly: every
// candidate v satisfies 0 < w0 ^ v < w0 ^ m for a fixed dual direction w0.
inline Vec drop_to_boundary(const LatticeCone& C, Vec m) {
    Vec w0 = inside_direction(dual_cone(C));
    for (int iter = 0; iter < 100000; ++iter) {
        Int K = wedge(w0, m);
        if (K <= 0) throw std::logic_error("drop_to_boundary: point outside the dual level");
        Int xcap = level_cut_x_extent(C, w0, K) + abs_int(m.x) + 2;
        auto v = find_decomposition(C, m, xcap);
        if (!v) return m;
        m = *v;
    }
    throw std::runtime_error("drop_to_boundary: descent did not terminate");
}

}  // namespace detail_sail

// All primitive points of the hull boundary with coordinates bounded by
// window, ordered left-to-right, with the edge structure annotated.
inline Sail sail_points(const LatticeCone& C, const Int& window) {
    if (window < 1) throw std::invalid_argument("sail_points: window must be >= 1");
    Sail sail;
    sail.window = window;

    auto in_window = [&](const Vec& v) {
        return abs_int(v.x) <= window && abs_int(v.y) <= window;
    };

    if (C.is_half_plane()) {
        if (!(C.left().closed && C.right().closed)) {
            throw std::invalid_argument("sail_points: open half-plane cones are not supported");
        }
        sail.half_plane = true;
        Vec d = C.left().vec();
        if (in_window(d)) sail.points.push_back(d);
        if (in_window(-d)) sail.points.push_back(-d);
        if (sail.points.empty()) {
            sail.empty_within_window = true;
            return sail;
        }
        sail.left_natural = sail.right_natural = true;
        sail.edges.push_back({0, sail.points.size() - 1, true});
        return sail;
    }

    // anchor on the hull boundary
    std::optional<Vec> anchor;
    if (C.left().is_rational()) {
        anchor = C.left().closed ? std::optional<Vec>(C.left().vec())
                                 : detail_sail::step_point(C, C.left().vec(), +1);
    } else if (C.right().is_rational()) {
        anchor = C.right().closed ? std::optional<Vec>(C.right().vec())
                                  : detail_sail::step_point(C, C.right().vec(), -1);
    } else {
        anchor = detail_sail::drop_to_boundary(C, detail_sail::inside_direction(C));
    }
    if (!anchor) throw std::logic_error("sail_points: no anchor");

    const long max_steps = 1 << 17;
    Int excursion = 8 * (window + abs_int(anchor->x) + abs_int(anchor->y)) + 64;

    // walk one direction from the anchor; collects the contiguous in-window
    // block (the sail meets the window box in one angular run)
    auto walk = [&](const Vec& start, int dir, std::vector<Vec>& out, bool& natural,
                    bool& truncated) {
        natural = false;
        truncated = false;
        Vec cur = start;
        bool entered = in_window(cur);
        long steps = 0;
        while (true) {
            auto nxt = detail_sail::step_point(C, cur, dir);
            if (!nxt) {
                natural = true;
                return;
            }
            cur = *nxt;
            if (in_window(cur)) {
                out.push_back(cur);
                entered = true;
            } else if (entered) {
                truncated = true;
                return;
            } else if (abs_int(cur.x) > excursion || abs_int(cur.y) > excursion) {
                truncated = true;
                return;
            }
            if (++steps >= max_steps) {
                truncated = true;
                return;
            }
        }
    };

    std::vector<Vec> leftward, rightward;
    bool nat_l = false, nat_r = false, trunc_l = false, trunc_r = false;
    walk(*anchor, -1, leftward, nat_l, trunc_l);
    walk(*anchor, +1, rightward, nat_r, trunc_r);

    std::vector<Vec>& pts = sail.points;
    pts.assign(leftward.rbegin(), leftward.rend());
    if (in_window(*anchor)) pts.push_back(*anchor);
    pts.insert(pts.end(), rightward.begin(), rightward.end());

    bool left_has_endpoint = C.left().is_rational() && C.left().closed;
    bool right_has_endpoint = C.right().is_rational() && C.right().closed;
    if (pts.empty()) {
        sail.empty_within_window = true;
        sail.left_end_exact = !left_has_endpoint;
        sail.right_end_exact = !right_has_endpoint;
        return sail;
    }

    // a natural end that fell outside the window counts as truncation
    sail.left_natural = nat_l && left_has_endpoint && pts.front() == C.left().vec();
    sail.right_natural = nat_r && right_has_endpoint && pts.back() == C.right().vec();
    sail.truncated_left = !sail.left_natural && (trunc_l || nat_l);
    sail.truncated_right = !sail.right_natural && (trunc_r || nat_r);
    sail.left_end_exact = !left_has_endpoint || sail.left_natural;
    sail.right_end_exact = !right_has_endpoint || sail.right_natural;

    // group collinear runs into edges (consecutive edges share their vertex)
    std::vector<SailEdge>& edges = sail.edges;
    auto dir_parallel = [](const Vec& step, const RayBound& ray) {
        return ray.is_rational() && wedge(step, ray.vec()) == 0;
    };
    if (sail.left_natural) edges.push_back({0, 0, true});  // ray edge beyond the left endpoint
    if (pts.size() >= 2) {
        std::size_t run_start = 0;
        Vec run_step = pts[1] - pts[0];
        for (std::size_t i = 2; i <= pts.size(); ++i) {
            bool boundary = (i == pts.size()) || wedge(pts[i] - pts[i - 1], run_step) != 0;
            if (!boundary) continue;
            SailEdge e{run_start, i - 1, false};
            if (run_start == 0 && !sail.left_natural && dir_parallel(run_step, C.left())) {
                e.infinite = true;
            }
            if (i == pts.size() && !sail.right_natural && dir_parallel(run_step, C.right())) {
                e.infinite = true;
            }
            edges.push_back(e);
            if (i < pts.size()) {
                run_start = i - 1;
                run_step = pts[i] - pts[i - 1];
            }
        }
    }
    if (sail.right_natural) edges.push_back({pts.size() - 1, pts.size() - 1, true});
    // a lone collected point on an open rational side sits on an infinite edge
    if (pts.size() == 1 && edges.empty()) {
        bool l_inf = C.left().is_rational() && !C.left().closed;
        bool r_inf = C.right().is_rational() && !C.right().closed;
        if (l_inf || r_inf) edges.push_back({0, 0, true});
    }
    return sail;
}

// Hull test: is the primitive point w (strictly inside C) an interior point
// of the hull E? Equivalently, w is not on the sail.
inline bool is_interior_point(const LatticeCone& C, const Vec& w) {
    if (!is_primitive(w)) throw std::invalid_argument("is_interior_point: not primitive");
    if (!C.strictly_contains(w)) throw std::invalid_argument("not interior to cone");
    if (C.is_half_plane()) return true;  // Int C = Int E for the closed half-plane

    // bracket w between consecutive sail points by walking from an anchor
    std::optional<Vec> anchor;
    if (C.left().is_rational()) {
        anchor = C.left().closed ? std::optional<Vec>(C.left().vec())
                                 : detail_sail::step_point(C, C.left().vec(), +1);
    } else if (C.right().is_rational()) {
        anchor = C.right().closed ? std::optional<Vec>(C.right().vec())
                                  : detail_sail::step_point(C, C.right().vec(), -1);
    } else {
        anchor = detail_sail::drop_to_boundary(C, detail_sail::inside_direction(C));
    }
    if (!anchor) throw std::logic_error("is_interior_point: no anchor");

    Vec cur = *anchor;
    if (cur == w) return false;
    const long max_steps = 1 << 20;
    long steps = 0;
    // move left while w is strictly left of cur
    while (wedge(w, cur) < 0) {
        auto prv = detail_sail::step_point(C, cur, -1);
        if (!prv) return false;  // w left of the leftmost sail point: impossible in Int C
        if (*prv == w) return false;
        cur = *prv;
        if (++steps >= max_steps) throw std::runtime_error("is_interior_point: walk diverged");
    }
    // now cur <= w; move right until the bracket [cur, nxt] straddles w
    while (true) {
        if (cur == w) return false;
        auto nxt = detail_sail::step_point(C, cur, +1);
        if (!nxt) {
            // w strictly right of the right end of B: cannot happen inside C
            throw std::logic_error("is_interior_point: unbracketed point");
        }
        if (*nxt == w) return false;
        if (wedge(w, *nxt) < 0) {
            // cur < w < nxt: boundary between them is the chord
            Vec e = *nxt - cur;
            return wedge(e, w - cur) != 0;
        }
        cur = *nxt;
        if (++steps >= max_steps) throw std::runtime_error("is_interior_point: walk diverged");
    }
}

// Integer solutions of w' ^ w = 1 lying in C, ordered along the sail.
inline std::vector<Vec> facet_solutions(const LatticeCone& C, const Vec& w_prime,
                                        const Int& window) {
    if (!is_primitive(w_prime)) throw std::invalid_argument("facet_solutions: w' not primitive");
    detail_sail::ExtGcd eg = detail_sail::ext_gcd(w_prime.x, w_prime.y);
    // w' ^ v = 1: v0 = (-y, x) of the Bezout pair
    Vec v0{-eg.y, eg.x};
    // solutions v0 + t w', constrained to C; collect integer t with the point
    // inside the window
    std::vector<Vec> out;
    // bounds: f_L(v) <= 0 and -f_R(v) <= 0 (strict when open)
    struct Lin {
        QuadExpr c0, c1;
        bool strict;
    };
    std::vector<Lin> cons;
    cons.push_back({detail_sail::ray_functional(C.left(), v0),
                    detail_sail::ray_functional(C.left(), w_prime), !C.left().closed});
    cons.push_back({-detail_sail::ray_functional(C.right(), v0),
                    -detail_sail::ray_functional(C.right(), w_prime), !C.right().closed});
    bool has_lo = false, has_hi = false, infeasible = false;
    Int lo = 0, hi = 0;
    for (const Lin& L : cons) {
        int s1 = L.c1.sign();
        if (s1 == 0) {
            int s0 = L.c0.sign();
            if (s0 > 0 || (s0 == 0 && L.strict)) infeasible = true;
            continue;
        }
        QuadExpr bound = detail_sail::neg_ratio(L.c0, L.c1);
        if (s1 < 0) {
            Int b = detail_sail::first_integer_at_least(bound, L.strict);
            if (!has_lo || b > lo) { lo = b; has_lo = true; }
        } else {
            Int b = bound.s.sign() == 0 ? (L.strict ? bound.r.ceil() - 1 : bound.r.floor())
                                        : bound.floor();
            if (!has_hi || b < hi) { hi = b; has_hi = true; }
        }
    }
    if (!infeasible) {
        // cut any unbounded direction by the window box
        Int span = 4 * window + abs_int(v0.x) + abs_int(v0.y) + 4;
        Int tlo = has_lo ? lo : -span;
        Int thi = has_hi ? hi : span;
        for (Int t = tlo; t <= thi; ++t) {
            Vec v = v0 + t * w_prime;
            if (abs_int(v.x) > window || abs_int(v.y) > window) continue;
            if (C.contains(v)) out.push_back(v);
        }
    }
    if (out.empty()) throw std::runtime_error("facet_solutions: window too small");
    return out;
}

// The subset of sail points lying on finite edges; edges parallel to
// exclude_parallel_to (when given) are dropped as well.
struct EdgePointSet {
    std::vector<Vec> points;
    bool exact = true;  // false when window truncation may hide part of the set
};

inline EdgePointSet finite_edge_points(const Sail& S,
                                       const std::optional<Vec>& exclude_parallel_to = {}) {
    EdgePointSet out;
    std::vector<bool> keep(S.points.size(), false);
    for (const SailEdge& e : S.edges) {
        if (e.infinite || e.last <= e.first) continue;
        if (exclude_parallel_to) {
            Vec step = S.points[e.first + 1] - S.points[e.first];
            if (wedge(step, *exclude_parallel_to) == 0) continue;
        }
        for (std::size_t i = e.first; i <= e.last; ++i) keep[i] = true;
    }
    for (std::size_t i = 0; i < S.points.size(); ++i) {
        if (keep[i]) out.points.push_back(S.points[i]);
    }
    auto side_complete = [&](bool natural, bool first_side) {
        if (natural) return true;
        if (S.edges.empty()) return false;
        const SailEdge& e = first_side ? S.edges.front() : S.edges.back();
        return e.infinite;
    };
    out.exact = side_complete(S.left_natural, true) && side_complete(S.right_natural, false);
    if (S.empty_within_window) out.exact = false;
    return out;
}

// Dual sail in the indexing of the duality lemma: points w'_i with
// w'_i ^ w'_{i+1} > 0, interior points carrying a_i = |S(w'_i)| + 1.
struct DualSail {
    std::vector<Vec> points;          // ordered with increasing wedge
    std::vector<bool> interior;       // marks Int I
    std::vector<Int> a;               // a_i for interior points (0 elsewhere)
    Sail raw;                         // sail of the dual cone (its own order)
};

inline DualSail dual_sail(const LatticeCone& C, const Int& window) {
    LatticeCone D = dual_cone(C);
    DualSail out;
    out.raw = sail_points(D, window);
    out.points.assign(out.raw.points.rbegin(), out.raw.points.rend());
    std::size_t n = out.points.size();
    out.interior.assign(n, false);
    out.a.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        bool left_end = (i == 0) && out.raw.right_natural;   // reversed order
        bool right_end = (i + 1 == n) && out.raw.left_natural;
        out.interior[i] = !left_end && !right_end;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!out.interior[i]) continue;
        std::vector<Vec> sols = facet_solutions(C, out.points[i], window);
        out.a[i] = Int(sols.size()) + 1;
    }
    return out;
}

// Truncated continued fraction a_i - 1/(a_{i+1} - ...) of the given depth
// read off the facet cardinalities; at full depth (rational D_1) this is the
// exact slope of D_1 in the basis (w'_i, -w'_{i-1}).
inline Rational slope_from_facets(const LatticeCone& C, std::size_t i, std::size_t depth,
                                  const Int& window) {
    if (depth == 0) throw std::invalid_argument("slope_from_facets: depth must be positive");
    DualSail ds = dual_sail(C, window);
    // collect interior indices
    std::vector<std::size_t> interior;
    for (std::size_t k = 0; k < ds.points.size(); ++k) {
        if (ds.interior[k]) interior.push_back(k);
    }
    if (i + depth > interior.size()) {
        throw std::runtime_error("slope_from_facets: insufficient dual-sail depth");
    }
    NegCF cf;
    for (std::size_t k = 0; k < depth; ++k) cf.coeffs.push_back(ds.a[interior[i + k]]);
    return neg_cf_eval(cf);
}

}  // namespace tightcensus
