#pragma once

// Per-manifold classifiers: lens spaces, torus bundles over the circle, the
// thick torus and the solid torus, plus the Legendrian realizability test and
// the surgery presentation data.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tightcensus/arcs.hpp"
#include "tightcensus/gamma.hpp"
#include "tightcensus/sail.hpp"
#include "tightcensus/sl2.hpp"
#include "tightcensus/smith.hpp"

namespace tightcensus {

// ---------------------------------------------------------------------------
// Lens spaces
// ---------------------------------------------------------------------------

struct LensReport {
    Int p, q;
    NegCF cf;
    Int oriented_count;            // prod(a_i - 1)
    Int unoriented_count;          // ceil(oriented/2)
    int universally_tight_oriented;  // 2 if q < p-1, 1 if q = p-1
    std::vector<Int> surgery_weights;  // -a_0 ... -a_n
    Int homology_order;            // |H_1| = p
    std::vector<Int> mu_images;    // image of mu_i: p_i mod p
    std::set<Int> euler_classes;   // sum (2 - a_i + 2 b_i) p_i mod p
    std::set<Int> homotopy_invariants;  // sum b_i p_i, pairwise distinct
    bool sets_complete = true;     // false when the b-tuple sweep was skipped
    std::string euler_note;
};

namespace detail_census {
constexpr long kLensSetCap = 100000;  // b-tuple sweep guard
}

inline LensReport lens_census(const Int& p, const Int& q) {
    LensReport rep;
    rep.p = p;
    rep.q = q;
    rep.cf = neg_cf_expand(p, q);  // validates the (p, q) range
    const std::vector<Int>& a = rep.cf.coeffs;

    rep.oriented_count = 1;
    for (const Int& ai : a) rep.oriented_count *= (ai - 1);
    rep.unoriented_count = (rep.oriented_count + 1) / 2;
    rep.universally_tight_oriented = (q < p - 1) ? 2 : 1;
    for (const Int& ai : a) rep.surgery_weights.push_back(-ai);

    SmithPresentation pres = smith_presentation(chain_relation_matrix(a));
    rep.homology_order = pres.group_order;

    std::vector<Int> cont = continuants(rep.cf);  // p_0 ... p_{n+1}
    for (std::size_t i = 0; i < a.size(); ++i) {
        Int v = cont[i] % p;
        if (v < 0) v += p;
        rep.mu_images.push_back(v);
    }

    // The surgery statement pairs the Euler class with the Maslov numbers
    // m_i = 2 - a_i + 2 b_i; the alternative displayed coefficient 2 - a_i + b_i
    // is inconsistent with those and is not used.
    rep.euler_note = "euler classes use sum (2 - a_i + 2 b_i) mu_i";

    if (rep.oriented_count <= detail_census::kLensSetCap) {
        std::vector<Int> b(a.size(), 0);
        while (true) {
            Int euler = 0, homotopy = 0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                euler += (2 - a[i] + 2 * b[i]) * cont[i];
                homotopy += b[i] * cont[i];
            }
            Int e = euler % p;
            if (e < 0) e += p;
            rep.euler_classes.insert(e);
            rep.homotopy_invariants.insert(homotopy);
            std::size_t i = 0;
            for (; i < a.size(); ++i) {
                if (b[i] + 1 <= a[i] - 2) {
                    ++b[i];
                    break;
                }
                b[i] = 0;
            }
            if (i == a.size()) break;
        }
    } else {
        rep.sets_complete = false;
    }
    return rep;
}

// Weighted chain-link surgery data for L(p, q).
struct ChainLink {
    std::vector<Int> weights;  // -a_0 ... -a_n
    IntMatrix relation_matrix;
};

inline ChainLink chain_link_weights(const Int& p, const Int& q) {
    NegCF cf = neg_cf_expand(p, q);
    ChainLink out;
    for (const Int& ai : cf.coeffs) out.weights.push_back(-ai);
    out.relation_matrix = chain_relation_matrix(cf.coeffs);
    return out;
}

// Realizability of (tb, m) by a topologically trivial Legendrian knot:
// tb + |m| <= -1 and tb + |m| odd.
inline bool legendrian_check(const Int& tb, const Int& m) {
    Int s = tb + abs_int(m);
    return s <= -1 && abs_int(s) % 2 == 1;
}

// The geometric leg of the lens count: distinct gamma values on even-parity
// subsets of the finite-edge point set of the cone spanned by (0,1) and (p,q),
// both sides open.
inline Int lens_geometric_count(const Int& p, const Int& q) {
    if (gcd_int(p, q) != 1 || q <= 0 || q >= p) {
        throw std::invalid_argument("lens_geometric_count: invalid (p, q)");
    }
    LatticeCone C(RayBound(Vec{0, 1}, false), RayBound(Vec{p, q}, false));
    Sail S = sail_points(C, 2 * (p + q) + 2);
    EdgePointSet bhat = finite_edge_points(S);
    if (!bhat.exact) throw std::runtime_error("lens_geometric_count: window too small");
    return Int(gamma_even_values(bhat.points).size());
}

// ---------------------------------------------------------------------------
// Torus bundles
// ---------------------------------------------------------------------------

struct BundleN {
    Int lo, hi;
    bool exact;  // lo == hi and settled by the classification
};

struct BundleReport {
    SL2Class cls;
    BundleN N;
    std::string n_case;  // clause that produced N
    bool finite_order_exceptional = false;

    // universally tight family
    std::string ut_description;
    bool ut_unique_per_torsion;

    // image of the asymptotic-direction map on the projective line
    std::string delta_description;
    std::optional<QuadraticIrrational> delta_stable, delta_unstable;
    std::optional<Vec> delta_fixed_direction;
};

namespace detail_census {

// SL2(Z)-conjugacy of a finite-order matrix of trace 0 or -1 to
// [[0,-1],[1,0]] resp. [[-1,-1],[1,0]]: the associated binary quadratic form
// c x^2 + (d - a) x y - b y^2 has negative discriminant and class number one,
// so the conjugacy class is pinned by its definiteness sign, i.e. sign(c).
inline bool finite_order_exceptional(const SL2Mat& A) {
    Int t = A.trace();
    if (t != 0 && t != -1) return false;
    return A.c > 0;
}

}  // namespace detail_census

inline BundleReport bundle_census(const SL2Mat& A) {
    if (A.det() != 1) throw std::invalid_argument("not in SL2(Z)");
    BundleReport rep;
    rep.cls = classify_sl2(A);
    Int t = rep.cls.trace;

    auto exact_n = [&](Int n, std::string which) {
        rep.N = BundleN{n, n, true};
        rep.n_case = std::move(which);
    };
    auto open_n = [&](std::string which) {
        rep.N = BundleN{Int(0), Int(2), false};
        rep.n_case = std::move(which);
    };

    switch (rep.cls.kind) {
        case SL2Kind::Hyperbolic: {
            Int prod = 1;
            for (const Int& ai : rep.cls.period) prod *= (ai - 1);
            Int prod_k = 1;
            for (Int i = 0; i < rep.cls.power; ++i) prod_k *= prod;
            if (t > 2) {
                exact_n(prod_k - 2, "hyperbolic trace > 2: prod(a_i - 1)^k - 2");
            } else {
                exact_n(prod_k, "hyperbolic trace < -2: prod(a_i - 1)^k");
            }
            break;
        }
        case SL2Kind::Parabolic: {
            if (rep.cls.parabolic_eps == 1) {
                if (rep.cls.parabolic_k < 0) {
                    exact_n(-rep.cls.parabolic_k - 1, "parabolic eps = 1, k < 0: |k| - 1");
                } else if (rep.cls.parabolic_k % 2 != 0) {
                    exact_n(0, "parabolic eps = 1, k > 0 odd: 0");
                } else {
                    open_n("parabolic eps = 1, k > 0 even: at most 2, not settled");
                }
            } else {
                open_n("parabolic trace -2: not settled");
            }
            break;
        }
        case SL2Kind::FiniteOrder: {
            rep.finite_order_exceptional = detail_census::finite_order_exceptional(A);
            if (rep.finite_order_exceptional) {
                open_n("finite order conjugate to [[0,-1],[1,0]] or [[-1,-1],[1,0]]: "
                       "at most 2, not settled");
            } else {
                exact_n(0, "finite order, non-exceptional: 0");
            }
            break;
        }
    }

    rep.ut_unique_per_torsion = (t != -2);
    rep.ut_description =
        "universally tight structures: one infinite family, the 2pi-torsion takes every "
        "value n >= 0";
    if (!rep.ut_unique_per_torsion) {
        rep.ut_description += " (classes per torsion value not unique for trace -2)";
    }

    switch (rep.cls.kind) {
        case SL2Kind::Hyperbolic: {
            rep.delta_description =
                "interval of P^1 from the stable direction (left) to the unstable direction "
                "(right)";
            rep.delta_unstable = rep.cls.unstable_slope;
            // stable slope: conjugate root (P - sqrt(D))/Q = ((-P) + sqrt(D))/(-Q)
            const QuadraticIrrational& u = *rep.cls.unstable_slope;
            rep.delta_stable = QuadraticIrrational(-u.P, u.D, -u.Q);
            break;
        }
        case SL2Kind::Parabolic: {
            if (rep.cls.parabolic_k >= 0) {
                rep.delta_description = "all of P^1";
            } else {
                rep.delta_description = "P^1 minus the fixed direction of A";
                // fixed direction = kernel of eps A - I
                Int eps = rep.cls.parabolic_eps;
                Int ma = eps * A.a - 1, mb = eps * A.b;
                Vec u = (mb != 0 || ma != 0) ? primitive_part(Vec{mb, -ma}) : Vec{0, 1};
                rep.delta_fixed_direction = u;
            }
            break;
        }
        case SL2Kind::FiniteOrder:
            rep.delta_description = "all of P^1";
            break;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Thick torus
// ---------------------------------------------------------------------------

struct SuspensionSpec {
    RayDir direction;   // asymptotic half-line of the oriented suspension
    int kind;           // 0: linearizable, 1: two nondegenerate closed orbits
    Int dividing_pairs; // n_i: 0 for type 0, >= 1 for type 1

    SuspensionSpec(RayDir d, int k, Int pairs = Int(-1))
        : direction(std::move(d)), kind(k), dividing_pairs(std::move(pairs)) {
        if (kind != 0 && kind != 1) throw std::invalid_argument("SuspensionSpec: kind is 0 or 1");
        if (dividing_pairs < 0) dividing_pairs = (kind == 0) ? 0 : 1;
        if ((kind == 0) != (dividing_pairs == 0)) {
            throw std::invalid_argument("SuspensionSpec: kind 0 iff dividing_pairs = 0");
        }
        if (std::holds_alternative<Vec>(direction)) {
            direction = RayDir{primitive_part(std::get<Vec>(direction))};
        }
    }
};

struct ThickReport {
    Sail sail;
    XuXv xs;
    Int torsion_max;            // universally tight family listed for n = 0 .. torsion_max
    bool exceptional = false;   // both type 1 with the same asymptotic line
    std::optional<Vec> exceptional_w;  // primitive point on the left boundary (-w equally valid)
    std::vector<std::pair<Vec, Int>> exceptional_fibers;  // (chi, torsion) pairs
    Int ut_components_per_fiber;
    std::optional<Int> extra_orbit_count;
};

inline ThickReport thick_torus_census(const SuspensionSpec& s0, const SuspensionSpec& s1,
                                      const Int& n_max, const Int& window) {
    bool closed0 = s0.kind == 1, closed1 = s1.kind == 1;

    // same asymptotic line: the exceptional configuration when both are type 1
    if (std::holds_alternative<Vec>(s0.direction) && std::holds_alternative<Vec>(s1.direction)) {
        const Vec& d0 = std::get<Vec>(s0.direction);
        const Vec& d1 = std::get<Vec>(s1.direction);
        if (wedge(d0, d1) == 0) {
            if (!(closed0 && closed1)) {
                throw std::invalid_argument("thick_torus_census: degenerate direction data");
            }
            // exceptional half-plane cone, right boundary the opposite half-line
            ThickReport rep;
            LatticeCone C(RayBound(d0, true), RayBound(-d0, true));
            rep.sail = sail_points(C, window);
            rep.xs = xu_xv(rep.sail);
            rep.torsion_max = n_max;
            rep.exceptional = true;
            rep.exceptional_w = d0;
            rep.exceptional_fibers.push_back({Vec{0, 0}, Int(0)});
            rep.exceptional_fibers.push_back({Vec{2 * d0.x, 2 * d0.y}, Int(0)});
            rep.ut_components_per_fiber =
                binomial(2 * s0.dividing_pairs, s0.dividing_pairs) *
                binomial(2 * s1.dividing_pairs, s1.dividing_pairs);
            rep.extra_orbit_count = annulus_count(s0.dividing_pairs, s1.dividing_pairs);
            return rep;
        }
    }

    ThickReport rep;
    LatticeCone C(make_bound(s0.direction, closed0), make_bound(s1.direction, closed1));
    rep.sail = sail_points(C, window);
    rep.xs = xu_xv(rep.sail);
    rep.torsion_max = n_max;
    rep.ut_components_per_fiber = binomial(2 * s0.dividing_pairs, s0.dividing_pairs) *
                                  binomial(2 * s1.dividing_pairs, s1.dividing_pairs);
    return rep;
}

// ---------------------------------------------------------------------------
// Solid torus
// ---------------------------------------------------------------------------

struct SolidReport {
    Sail sail;
    std::vector<Vec> bhat;      // primitive points on non-vertical edges (windowed)
    std::vector<Vec> bhat_boundary;  // real extremities of bhat
    bool bhat_exact = true;
    XuXvSolid xs;               // all members odd
};

namespace detail_census {

// Points of the sail lying on a non-vertical edge (vertical = parallel to the
// meridian (0, -1)); infinite non-vertical edges contribute their windowed
// points.
inline void nonvertical_edge_points(const Sail& S, std::vector<Vec>& pts, bool& exact,
                                    bool& left_end_real, bool& right_end_real) {
    const Vec meridian{0, 1};
    std::vector<bool> keep(S.points.size(), false);
    for (const SailEdge& e : S.edges) {
        bool vertical;
        if (e.last > e.first) {
            Vec step = S.points[e.first + 1] - S.points[e.first];
            vertical = wedge(step, meridian) == 0;
        } else {
            // degenerate ray edge along a closed boundary: direction = the ray
            vertical = false;
            if (e.infinite) {
                // endpoint rays: vertical iff the point is on the meridian line
                vertical = S.points[e.first].x == 0;
            }
        }
        if (vertical) continue;
        for (std::size_t i = e.first; i <= e.last; ++i) keep[i] = true;
    }
    for (std::size_t i = 0; i < S.points.size(); ++i) {
        if (keep[i]) pts.push_back(S.points[i]);
    }
    // exactness: truncation only hides points when the cut side carries
    // non-vertical structure
    auto side_ok = [&](bool natural, bool truncated, bool first_side) {
        if (natural) return true;
        if (!truncated) return true;
        if (S.edges.empty()) return false;
        const SailEdge& e = first_side ? S.edges.front() : S.edges.back();
        if (!e.infinite) return false;  // unseen finite edges beyond the window
        if (e.last > e.first) {
            Vec step = S.points[e.first + 1] - S.points[e.first];
            return wedge(step, meridian) == 0;  // vertical infinite edge hides nothing
        }
        return false;
    };
    exact = side_ok(S.left_natural, S.truncated_left, true) &&
            side_ok(S.right_natural, S.truncated_right, false) && !S.empty_within_window;
    // ends of bhat are real extremities unless the window cut a non-vertical edge
    left_end_real = true;
    right_end_real = side_ok(S.right_natural, S.truncated_right, false);
    if (!pts.empty() && !S.points.empty() && pts.front() == S.points.front() &&
        S.truncated_left) {
        left_end_real = false;
    }
}

}  // namespace detail_census

inline SolidReport solid_torus_census(const SuspensionSpec& s, const Int& window) {
    // meridian side: left boundary R+(0,-1), open (the meridian foliation is type 0)
    if (std::holds_alternative<Vec>(s.direction)) {
        const Vec& d = std::get<Vec>(s.direction);
        if (d.x == 0) throw std::invalid_argument("degenerate boundary slope");
        if (d.x > 0) {
            throw std::invalid_argument(
                "solid_torus_census: the asymptotic half-line must bound the cone on the right "
                "(x < 0)");
        }
    } else {
        if (std::get<SurdRay>(s.direction).x_sign > 0) {
            throw std::invalid_argument(
                "solid_torus_census: the asymptotic half-line must bound the cone on the right "
                "(x < 0)");
        }
    }
    SolidReport rep;
    LatticeCone C(RayBound(Vec{0, -1}, false), make_bound(s.direction, s.kind == 1));
    rep.sail = sail_points(C, window);
    bool left_real = true, right_real = true;
    detail_census::nonvertical_edge_points(rep.sail, rep.bhat, rep.bhat_exact, left_real,
                                           right_real);
    if (!rep.bhat.empty()) {
        if (left_real) rep.bhat_boundary.push_back(rep.bhat.front());
        if (right_real && (rep.bhat.size() > 1 || !left_real)) {
            rep.bhat_boundary.push_back(rep.bhat.back());
        }
    }
    rep.xs = xu_xv_solid(rep.bhat, rep.bhat_boundary);
    if (!rep.bhat_exact) rep.xs.exact = false;
    return rep;
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

struct SweepRow {
    Int p, q;
    Int oriented, unoriented;
    Int euler_class_count;
    bool two_path_agree;
};

inline std::vector<SweepRow> lens_sweep(const Int& p_max) {
    if (p_max > 500) throw std::invalid_argument("lens_sweep: p_max must be <= 500");
    std::vector<SweepRow> rows;
    for (Int p = 2; p <= p_max; ++p) {
        for (Int q = 1; q < p; ++q) {
            if (gcd_int(p, q) != 1) continue;
            LensReport rep = lens_census(p, q);
            SweepRow row;
            row.p = p;
            row.q = q;
            row.oriented = rep.oriented_count;
            row.unoriented = rep.unoriented_count;
            row.euler_class_count = Int(rep.euler_classes.size());
            row.two_path_agree = (lens_geometric_count(p, q) == rep.oriented_count);
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace tightcensus
