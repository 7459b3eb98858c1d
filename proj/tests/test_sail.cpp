#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "tightcensus/cone.hpp"
#include "tightcensus/sail.hpp"

using namespace tightcensus;

static LatticeCone quadrant(bool l_closed, bool r_closed) {
    return LatticeCone(RayBound(Vec{0, 1}, l_closed), RayBound(Vec{1, 0}, r_closed));
}

TEST_CASE("cone membership with flags") {
    LatticeCone cc = quadrant(true, true);
    CHECK(cone_contains(cc, Vec{2, 3}));
    CHECK(cone_contains(cc, Vec{0, 5}));
    CHECK(!cone_contains(cc, Vec{-1, 2}));
    CHECK_THROWS_AS(cone_contains(cc, Vec{0, 0}), std::invalid_argument);

    LatticeCone oc = quadrant(false, true);
    CHECK(!cone_contains(oc, Vec{0, 5}));
    CHECK(cone_contains(oc, Vec{1, 5}));
    CHECK(cone_contains(oc, Vec{1, 0}));
}

TEST_CASE("cone membership against a surd boundary") {
    // right boundary of slope (3+sqrt5)/2: (1,2) falls outside, (1,3) inside
    QuadraticIrrational z(3, 5, 2);
    LatticeCone C(RayBound(Vec{0, 1}, true), RayBound(SurdRay(z, +1), false));
    CHECK(!cone_contains(C, Vec{1, 2}));
    CHECK(cone_contains(C, Vec{1, 3}));
    CHECK(cone_contains(C, Vec{0, 1}));
}

TEST_CASE("dual cone flips sides and flags") {
    LatticeCone cc = quadrant(true, true);
    LatticeCone d = dual_cone(cc);
    // open-open cone {x > 0, y < 0}
    CHECK(d.left().vec() == Vec{1, 0});
    CHECK(!d.left().closed);
    CHECK(d.right().vec() == Vec{0, -1});
    CHECK(!d.right().closed);
    CHECK(cone_contains(d, Vec{1, -1}));
    CHECK(!cone_contains(d, Vec{1, 0}));

    LatticeCone oo = quadrant(false, false);
    LatticeCone d2 = dual_cone(oo);
    CHECK(d2.left().closed);
    CHECK(d2.right().closed);
    CHECK(cone_contains(d2, Vec{1, 0}));
    CHECK(cone_contains(d2, Vec{0, -1}));

    // double dual = -C with the original flags
    LatticeCone dd = dual_cone(d);
    CHECK(dd.left().vec() == Vec{0, -1});
    CHECK(dd.left().closed);
    CHECK(dd.right().vec() == Vec{-1, 0});
    CHECK(dd.right().closed);
}

TEST_CASE("sail of the closed quadrant") {
    Sail S = sail_points(quadrant(true, true), 10);
    REQUIRE(S.points.size() == 2);
    CHECK(S.points[0] == Vec{0, 1});
    CHECK(S.points[1] == Vec{1, 0});
    CHECK(S.left_natural);
    CHECK(S.right_natural);
    REQUIRE(S.edges.size() == 3);
    CHECK(S.edges[0].infinite);
    CHECK(!S.edges[1].infinite);
    CHECK(S.edges[1].first == 0);
    CHECK(S.edges[1].last == 1);
    CHECK(S.edges[2].infinite);
    CHECK(S.boundary() == std::vector<Vec>{Vec{0, 1}, Vec{1, 0}});
}

TEST_CASE("sail of the open quadrant") {
    Sail S = sail_points(quadrant(false, false), 4);
    // hull boundary of {x >= 1, y >= 1}
    std::vector<Vec> want = {{1, 4}, {1, 3}, {1, 2}, {1, 1}, {2, 1}, {3, 1}, {4, 1}};
    CHECK(S.points == want);
    CHECK(!S.left_natural);
    CHECK(!S.right_natural);
    CHECK(S.truncated_left);
    CHECK(S.truncated_right);
    CHECK(S.left_end_exact);   // open sides have no endpoint to miss
    CHECK(S.right_end_exact);
    REQUIRE(S.edges.size() == 2);
    CHECK(S.edges[0].infinite);
    CHECK(S.edges[1].infinite);
    CHECK(S.boundary().empty());
    // the lone vertex sits on two infinite edges: no finite-edge points
    CHECK(finite_edge_points(S).points.empty());
}

TEST_CASE("window too small to reach a closed endpoint is flagged") {
    LatticeCone C(RayBound(Vec{0, 1}, true), RayBound(Vec{12, 1}, true));
    Sail S = sail_points(C, 4);
    CHECK(!S.right_natural);
    CHECK(!S.right_end_exact);  // the (12,1) endpoint was cut off
    CHECK(S.left_end_exact);
}

TEST_CASE("sail of the 7/3 lens cone") {
    LatticeCone C(RayBound(Vec{0, 1}, false), RayBound(Vec{7, 3}, false));
    Sail S = sail_points(C, 20);
    // vertical run x = 1 down to (1,1), corner (2,1), then along (7,3)
    REQUIRE(S.points.size() >= 4);
    std::size_t n = S.points.size();
    CHECK(S.points[0] == Vec{1, 20});
    CHECK(S.points[n - 4] == Vec{1, 1});
    CHECK(S.points[n - 3] == Vec{2, 1});
    CHECK(S.points[n - 2] == Vec{9, 4});
    CHECK(S.points[n - 1] == Vec{16, 7});

    EdgePointSet bhat = finite_edge_points(S);
    CHECK(bhat.exact);
    CHECK(bhat.points == std::vector<Vec>{Vec{1, 1}, Vec{2, 1}});

    // excluding edges parallel to the meridian changes nothing here
    EdgePointSet bhat2 = finite_edge_points(S, Vec{0, -1});
    CHECK(bhat2.points == bhat.points);
}

TEST_CASE("sail of the degenerate half-plane") {
    LatticeCone H(RayBound(Vec{1, 0}, true), RayBound(Vec{-1, 0}, true));
    CHECK(H.is_half_plane());
    CHECK(cone_contains(H, Vec{0, -3}));
    CHECK(cone_contains(H, Vec{1, 0}));
    CHECK(cone_contains(H, Vec{-1, 0}));
    CHECK(!cone_contains(H, Vec{0, 3}));
    Sail S = sail_points(H, 10);
    CHECK(S.points == std::vector<Vec>{Vec{1, 0}, Vec{-1, 0}});
    CHECK(S.boundary().size() == 2);
    REQUIRE(S.edges.size() == 1);
    CHECK(S.edges[0].infinite);
}

TEST_CASE("interior point test on quadrants") {
    LatticeCone cc = quadrant(true, true);
    CHECK(is_interior_point(cc, Vec{1, 1}));
    CHECK(is_interior_point(cc, Vec{2, 1}));
    CHECK_THROWS_WITH_AS(is_interior_point(cc, Vec{1, 0}), "not interior to cone",
                         std::invalid_argument);

    LatticeCone oo = quadrant(false, false);
    CHECK(!is_interior_point(oo, Vec{1, 1}));  // hull vertex of {x,y >= 1}
    CHECK(!is_interior_point(oo, Vec{1, 7}));  // on the x = 1 edge
    CHECK(is_interior_point(oo, Vec{2, 3}));
}

TEST_CASE("facet solutions on the closed quadrant") {
    LatticeCone cc = quadrant(true, true);
    auto s1 = facet_solutions(cc, Vec{1, -1}, 20);
    CHECK(s1 == std::vector<Vec>{Vec{0, 1}, Vec{1, 0}});
    auto s2 = facet_solutions(cc, Vec{2, -1}, 20);
    CHECK(s2 == std::vector<Vec>{Vec{1, 0}});
}

TEST_CASE("dual sail of the 7/3 cone: recurrence, facet counts, extremities") {
    LatticeCone C(RayBound(Vec{0, 1}, false), RayBound(Vec{7, 3}, false));
    DualSail ds = dual_sail(C, 30);
    std::vector<Vec> want = {{0, -1}, {1, 0}, {3, 1}, {5, 2}, {7, 3}};
    CHECK(ds.points == want);
    REQUIRE(ds.points.size() == 5);
    CHECK(!ds.interior[0]);
    CHECK(!ds.interior[4]);
    CHECK(ds.a[1] == 3);
    CHECK(ds.a[2] == 2);
    CHECK(ds.a[3] == 2);
    // w'_{i+1} + w'_{i-1} = a_i w'_i
    for (std::size_t i = 1; i + 1 < ds.points.size(); ++i) {
        CHECK(ds.points[i + 1] + ds.points[i - 1] == ds.a[i] * ds.points[i]);
    }
    // extremities of S(w'_i) are w'_i - w'_{i-1} and w'_{i+1} - w'_i
    for (std::size_t i = 1; i + 1 < ds.points.size(); ++i) {
        auto sols = facet_solutions(C, ds.points[i], 30);
        REQUIRE(!sols.empty());
        CHECK(sols.front() == ds.points[i] - ds.points[i - 1]);
        CHECK(sols.back() == ds.points[i + 1] - ds.points[i]);
    }
}

TEST_CASE("slope from facet cardinalities") {
    LatticeCone C(RayBound(Vec{0, 1}, false), RayBound(Vec{7, 3}, false));
    CHECK(slope_from_facets(C, 0, 3, 30) == Rational(7, 3));
    CHECK(slope_from_facets(C, 0, 1, 30) == Rational(3));
    CHECK(slope_from_facets(C, 0, 2, 30) == Rational(5, 2));

    // right boundary of slope (3-sqrt5)/2, whose x/y reading is (3+sqrt5)/2
    // with minus-CF [3, 3, 3, ...]: truncations strictly decrease to the surd
    QuadraticIrrational z(-3, 5, -2);
    LatticeCone H(RayBound(Vec{0, 1}, false), RayBound(SurdRay(z, +1), false));
    Rational prev(0);
    for (std::size_t depth = 1; depth <= 4; ++depth) {
        Rational r = slope_from_facets(H, 0, depth, 400);
        // exact comparison against (3 + sqrt 5)/2
        QuadExpr diff{r - Rational(Int(3), Int(2)), Rational(Int(-1), Int(2)), Int(5)};
        CHECK(diff.sign() > 0);
        if (depth > 1) CHECK(r < prev);
        prev = r;
    }
}

TEST_CASE("window stability: doubling extends only the ends") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long long> coord(-12, 12);
    int done = 0;
    while (done < 30) {
        Vec l{coord(rng), coord(rng)}, r{coord(rng), coord(rng)};
        if (l.is_zero() || r.is_zero() || wedge(l, r) >= 0) continue;
        bool lc = rng() % 2, rc = rng() % 2;
        LatticeCone C(RayBound(l, lc), RayBound(r, rc));
        Sail a = sail_points(C, 16);
        Sail b = sail_points(C, 32);
        if (a.points.empty()) {
            ++done;
            continue;
        }
        // a.points must be a contiguous subsequence of b.points
        auto it = std::search(b.points.begin(), b.points.end(), a.points.begin(), a.points.end());
        REQUIRE(it != b.points.end());
        ++done;
    }
}

TEST_CASE("sails are unimodular chains, ordered by wedge") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<long long> coord(-15, 15);
    int done = 0;
    while (done < 60) {
        Vec l{coord(rng), coord(rng)}, r{coord(rng), coord(rng)};
        if (l.is_zero() || r.is_zero() || wedge(l, r) >= 0) continue;
        bool lc = rng() % 2, rc = rng() % 2;
        LatticeCone C(RayBound(l, lc), RayBound(r, rc));
        Sail S = sail_points(C, 24);
        for (std::size_t i = 0; i + 1 < S.points.size(); ++i) {
            REQUIRE(wedge(S.points[i], S.points[i + 1]) == -1);
        }
        for (const Vec& p : S.points) REQUIRE(is_primitive(p));
        ++done;
    }
}

TEST_CASE("oracle equivalence on 200 random rational cones") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long long> coord(-15, 15);
    std::uniform_int_distribution<long long> win(12, 34);
    int done = 0;
    while (done < 200) {
        long long lx = coord(rng), ly = coord(rng), rx = coord(rng), ry = coord(rng);
        if ((lx == 0 && ly == 0) || (rx == 0 && ry == 0)) continue;
        long long g1 = std::gcd(std::abs(lx), std::abs(ly));
        long long g2 = std::gcd(std::abs(rx), std::abs(ry));
        lx /= g1; ly /= g1; rx /= g2; ry /= g2;
        if (lx * ry - ly * rx >= 0) continue;
        bool lc = rng() % 2, rc = rng() % 2;

        LatticeCone C(RayBound(Vec{lx, ly}, lc), RayBound(Vec{rx, ry}, rc));
        oracles::SmallCone OC{lx, ly, rx, ry, lc, rc};
        const long long W = (done % 20 == 0) ? 60 : win(rng);

        Sail S = sail_points(C, W);
        auto want = oracles::brute_sail(OC, W);
        REQUIRE(S.points.size() == want.size());
        for (std::size_t i = 0; i < want.size(); ++i) {
            REQUIRE(S.points[i] == Vec{want[i].first, want[i].second});
        }

        // interior test vs existential search on strict primitives in range
        const long long IW = std::min<long long>(W, 18);
        for (long long x = -IW; x <= IW; ++x) {
            for (long long y = -IW; y <= IW; ++y) {
                if ((x == 0 && y == 0) || std::gcd(std::abs(x), std::abs(y)) != 1) continue;
                if (!OC.strictly_contains(x, y)) continue;
                bool lib = is_interior_point(C, Vec{x, y});
                bool ora = oracles::has_decomposition(OC, x, y);
                REQUIRE(lib == ora);
            }
        }
        ++done;
    }
}

TEST_CASE("dual-chain injectivity of bounded combinations") {
    // sums b_i w'_i with 0 <= b_i <= a_i - 2 are pairwise distinct
    std::vector<std::pair<long long, long long>> pqs = {{7, 3}, {11, 4}, {17, 5}, {25, 9}};
    for (auto [p, q] : pqs) {
        LatticeCone C(RayBound(Vec{0, 1}, false), RayBound(Vec{p, q}, false));
        DualSail ds = dual_sail(C, 4 * (p + q));
        std::vector<std::size_t> interior;
        for (std::size_t i = 0; i < ds.points.size(); ++i) {
            if (ds.interior[i]) interior.push_back(i);
        }
        Int combos = 1;
        for (std::size_t i : interior) combos *= (ds.a[i] - 1);
        REQUIRE(combos <= 10000);
        std::set<Vec> sums;
        std::vector<Int> b(interior.size(), 0);
        while (true) {
            Vec s{0, 0};
            for (std::size_t i = 0; i < interior.size(); ++i) {
                s = s + b[i] * ds.points[interior[i]];
            }
            REQUIRE(sums.insert(s).second);  // no collision
            std::size_t i = 0;
            for (; i < interior.size(); ++i) {
                if (b[i] + 1 <= ds.a[interior[i]] - 2) {
                    ++b[i];
                    break;
                }
                b[i] = 0;
            }
            if (i == interior.size()) break;
        }
        REQUIRE(Int(sums.size()) == combos);
    }
}

TEST_CASE("sail with a surd boundary accumulates vertices") {
    QuadraticIrrational z(3, 5, 2);
    LatticeCone C(RayBound(Vec{0, 1}, false), RayBound(SurdRay(z, +1), false));
    Sail S = sail_points(C, 60);
    REQUIRE(S.points.size() >= 4);
    for (std::size_t i = 0; i + 1 < S.points.size(); ++i) {
        CHECK(wedge(S.points[i], S.points[i + 1]) == -1);
    }
    CHECK(S.truncated_right);  // irrational side never ends
    for (const Vec& p : S.points) CHECK(cone_contains(C, p));
}

TEST_CASE("both-irrational cone sail") {
    // left slope sqrt 8 ~ 2.83, right slope (3+sqrt5)/2 ~ 2.62, both x > 0
    QuadraticIrrational zl(0, 8, 1);
    QuadraticIrrational zr(3, 5, 2);
    LatticeCone C(RayBound(SurdRay(zl, +1), false), RayBound(SurdRay(zr, +1), false));
    Sail S = sail_points(C, 80);
    REQUIRE(!S.points.empty());
    for (const Vec& p : S.points) CHECK(cone_contains(C, p));
    for (std::size_t i = 0; i + 1 < S.points.size(); ++i) {
        CHECK(wedge(S.points[i], S.points[i + 1]) == -1);
    }
    CHECK(cone_contains(C, Vec{3, 8}));
}

TEST_CASE("wide both-irrational cone sail") {
    // left ~ 125 degrees: direction (-1, sqrt 2); right ~ 21 degrees: slope (3-sqrt5)/2
    QuadraticIrrational zl(0, 2, -1);   // -sqrt 2
    QuadraticIrrational zr(-3, 5, -2);  // (3-sqrt5)/2
    LatticeCone C(RayBound(SurdRay(zl, -1), false), RayBound(SurdRay(zr, +1), false));
    CHECK(cone_contains(C, Vec{0, 1}));
    CHECK(cone_contains(C, Vec{2, 1}));
    CHECK(!cone_contains(C, Vec{3, 1}));  // slope 1/3 < 0.381...
    CHECK(cone_contains(C, Vec{-1, 2}));
    Sail S = sail_points(C, 40);
    REQUIRE(S.points.size() >= 3);
    for (const Vec& p : S.points) CHECK(cone_contains(C, p));
    for (std::size_t i = 0; i + 1 < S.points.size(); ++i) {
        CHECK(wedge(S.points[i], S.points[i + 1]) == -1);
    }
    // window stability holds here too
    Sail S2 = sail_points(C, 80);
    auto it = std::search(S2.points.begin(), S2.points.end(), S.points.begin(), S.points.end());
    CHECK(it != S2.points.end());
}
