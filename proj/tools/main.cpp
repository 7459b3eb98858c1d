// tightcensus: exact census calculator for tight contact structures on lens
// spaces, torus bundles, solid tori and thick tori, computed through
// minus-sign continued fractions and lattice-cone sails.

#include <cstdlib>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tightcensus/arcs.hpp"
#include "tightcensus/census.hpp"

using namespace tightcensus;
using nlohmann::json;

namespace {

json jint(const Int& v) {
    // numbers that fit in 64 bits stay numeric; larger ones become strings
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
        return json(static_cast<long long>(v));
    }
    return json(v.str());
}

json jvec(const Vec& v) { return json::array({jint(v.x), jint(v.y)}); }

json jints(const std::vector<Int>& vs) {
    json a = json::array();
    for (const Int& v : vs) a.push_back(jint(v));
    return a;
}

json jvecs(const std::vector<Vec>& vs) {
    json a = json::array();
    for (const Vec& v : vs) a.push_back(jvec(v));
    return a;
}

template <typename T, typename F>
json jset(const std::set<T>& s, F f) {
    json a = json::array();
    for (const T& v : s) a.push_back(f(v));
    return a;
}

json jsurd(const QuadraticIrrational& z) {
    return json{{"P", jint(z.P)}, {"D", jint(z.D)}, {"Q", jint(z.Q)}};
}

void emit(const json& j, const std::string& format) {
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    // flat table rendering of the top-level fields
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::cout << it.key() << ": " << it.value().dump() << "\n";
    }
}

json lens_json(const LensReport& r) {
    json j;
    j["schema"] = "census/1";
    j["command"] = "lens";
    j["provenance"] = "oriented tight-structure count prod(a_i - 1) over the minus-CF of p/q";
    j["exact"] = r.sets_complete;
    j["p"] = jint(r.p);
    j["q"] = jint(r.q);
    j["cf"] = jints(r.cf.coeffs);
    j["oriented_count"] = jint(r.oriented_count);
    j["unoriented_count"] = jint(r.unoriented_count);
    j["universally_tight_oriented"] = r.universally_tight_oriented;
    j["surgery_weights"] = jints(r.surgery_weights);
    j["homology_order"] = jint(r.homology_order);
    j["mu_images"] = jints(r.mu_images);
    j["euler_classes"] = jset(r.euler_classes, jint);
    j["homotopy_invariants"] = jset(r.homotopy_invariants, jint);
    j["sets_complete"] = r.sets_complete;
    j["euler_note"] = r.euler_note;
    return j;
}

json bundle_json(const BundleReport& r) {
    json j;
    j["schema"] = "census/1";
    j["command"] = "bundle";
    j["provenance"] = std::string("virtually overtwisted count, case: ") + r.n_case;
    j["exact"] = r.N.exact;
    switch (r.cls.kind) {
        case SL2Kind::Hyperbolic: j["kind"] = "hyperbolic"; break;
        case SL2Kind::Parabolic: j["kind"] = "parabolic"; break;
        case SL2Kind::FiniteOrder: j["kind"] = "finite_order"; break;
    }
    j["trace"] = jint(r.cls.trace);
    if (r.N.exact) {
        j["N"] = jint(r.N.lo);
    } else {
        j["N"] = json{{"lo", jint(r.N.lo)}, {"hi", jint(r.N.hi)}};
    }
    if (r.cls.kind == SL2Kind::Parabolic) {
        j["parabolic_eps"] = r.cls.parabolic_eps;
        j["parabolic_k"] = jint(r.cls.parabolic_k);
    }
    if (r.cls.kind == SL2Kind::Hyperbolic) {
        const SL2Mat& P = *r.cls.primitive;
        j["primitive"] = json::array({jint(P.a), jint(P.b), jint(P.c), jint(P.d)});
        j["power"] = jint(r.cls.power);
        j["period"] = jints(r.cls.period);
        j["unstable_slope"] = jsurd(*r.cls.unstable_slope);
    }
    if (r.cls.kind == SL2Kind::FiniteOrder) {
        j["finite_order_exceptional"] = r.finite_order_exceptional;
    }
    j["universally_tight"] = r.ut_description;
    j["unique_per_torsion"] = r.ut_unique_per_torsion;
    j["delta_image"] = r.delta_description;
    if (r.delta_stable) j["delta_stable_slope"] = jsurd(*r.delta_stable);
    if (r.delta_unstable) j["delta_unstable_slope"] = jsurd(*r.delta_unstable);
    if (r.delta_fixed_direction) j["delta_fixed_direction"] = jvec(*r.delta_fixed_direction);
    return j;
}

json sail_json(const Sail& s) {
    json j;
    j["points"] = jvecs(s.points);
    json edges = json::array();
    for (const SailEdge& e : s.edges) {
        edges.push_back(json{{"first", e.first}, {"last", e.last}, {"infinite", e.infinite}});
    }
    j["edges"] = edges;
    j["left_natural"] = s.left_natural;
    j["right_natural"] = s.right_natural;
    j["truncated_left"] = s.truncated_left;
    j["truncated_right"] = s.truncated_right;
    j["empty_within_window"] = s.empty_within_window;
    j["window"] = jint(s.window);
    return j;
}

// large value sets are listed up to a cap; the count stays exact for the
// window-bounded enumeration
constexpr std::size_t kListCap = 256;

template <typename T, typename F>
void emit_capped_set(json& j, const std::string& key, const std::set<T>& s, F f) {
    json a = json::array();
    std::size_t n = 0;
    for (const T& v : s) {
        if (n++ >= kListCap) break;
        a.push_back(f(v));
    }
    j[key] = a;
    j[key + "_count"] = s.size();
    if (s.size() > kListCap) j[key + "_listed"] = kListCap;
}

json thick_json(const ThickReport& r) {
    json j;
    j["schema"] = "census/1";
    j["command"] = "thick";
    j["provenance"] =
        "thick-torus classification: euler classes 2*gamma(Q) split into X_u / X_v";
    j["exact"] = r.xs.xv_exact;
    j["X_u"] = jset(r.xs.xu, jvec);
    j["X_u_exact"] = r.xs.xu_exact;
    emit_capped_set(j, "X_v", r.xs.xv, jvec);
    j["X_v_exact"] = r.xs.xv_exact;
    if (!r.xs.xv_description.empty()) j["X_v_description"] = r.xs.xv_description;
    j["torsion_values"] = json{{"from", 0}, {"to", jint(r.torsion_max)},
                               {"note", "universally tight classes exist for every torsion n >= 0"}};
    j["ut_components_per_fiber"] = jint(r.ut_components_per_fiber);
    j["exceptional"] = r.exceptional;
    if (r.exceptional) {
        j["exceptional_w"] = jvec(*r.exceptional_w);
        j["exceptional_w_opposite"] = jvec(-*r.exceptional_w);
        json fibers = json::array();
        for (const auto& [chi, n] : r.exceptional_fibers) {
            fibers.push_back(json{{"chi", jvec(chi)}, {"torsion", jint(n)}});
        }
        j["exceptional_fibers"] = fibers;
        j["extra_orbit_count"] = jint(*r.extra_orbit_count);
    }
    j["sail"] = sail_json(r.sail);
    return j;
}

json solid_json(const SolidReport& r) {
    json j;
    j["schema"] = "census/1";
    j["command"] = "solid";
    j["provenance"] = "solid-torus euler classes 1 + 2 i_* gamma(Q) over even Q";
    j["exact"] = r.xs.exact;
    j["bhat"] = jvecs(r.bhat);
    j["bhat_boundary"] = jvecs(r.bhat_boundary);
    j["bhat_exact"] = r.bhat_exact;
    emit_capped_set(j, "X_u", r.xs.xu, jint);
    emit_capped_set(j, "X_v", r.xs.xv, jint);
    j["sail"] = sail_json(r.sail);
    return j;
}

int run_selftest() {
    int failures = 0;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
        if (!ok) ++failures;
    };
    {
        bool ok = true;
        for (long long p = 2; p <= 60 && ok; ++p) {
            for (long long q = 1; q < p && ok; ++q) {
                if (std::gcd(p, q) != 1) continue;
                NegCF cf = neg_cf_expand(p, q);
                ok = neg_cf_eval(cf) == Rational(p, q) && continuants(cf).back() == Int(p);
            }
        }
        report("minus-CF round trip and continuants, p <= 60", ok);
    }
    {
        bool ok = true;
        for (long long p = 2; p <= 15 && ok; ++p) {
            for (long long q = 1; q < p && ok; ++q) {
                if (std::gcd(p, q) != 1) continue;
                ok = lens_geometric_count(p, q) == lens_census(p, q).oriented_count;
            }
        }
        report("lens two-path agreement, p <= 15", ok);
    }
    {
        bool ok = bundle_census(SL2Mat{1, 0, -3, 1}).N.lo == 2 &&
                  bundle_census(SL2Mat{1, 0, 3, 1}).N.lo == 0 &&
                  bundle_census(SL2Mat{2, 1, 1, 1}).N.lo == 0 &&
                  bundle_census(SL2Mat{5, 3, 3, 2}).N.lo == 2;
        report("torus-bundle spot values", ok);
    }
    {
        bool ok = true;
        for (long long n = 0; n <= 3 && ok; ++n) {
            ok = Int(enumerate_matchings(ArcProblem::disk(n)).size()) == disk_count(n);
        }
        for (long long a = 0; a <= 3 && ok; ++a) {
            for (long long b = 0; a + b <= 4 && ok; ++b) {
                ok = Int(enumerate_matchings(ArcProblem::annulus(a, b)).size()) ==
                     annulus_count(a, b);
            }
        }
        report("arc-family enumeration equals closed forms", ok);
    }
    {
        bool ok = true;
        Sail S = sail_points(LatticeCone(RayBound(Vec{0, 1}, true), RayBound(Vec{1, 0}, true)), 8);
        ok = S.points == std::vector<Vec>{Vec{0, 1}, Vec{1, 0}};
        XuXv x = xu_xv(S);
        ok = ok && x.xu.size() == 4 && x.xv.empty();
        report("quadrant sail and X_u kernel", ok);
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tight-contact-structure census calculator"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand arguments

    std::string format = "json";
    long long window = 64;
    long long torsion_max = 3;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--window", window, "lattice window for sail enumeration")
        ->check(CLI::PositiveNumber);
    app.add_option("--torsion-max", torsion_max, "largest torsion value listed")
        ->check(CLI::NonNegativeNumber);

    long long p = 0, q = 0;
    auto* lens = app.add_subcommand("lens", "census of a lens space L(p, q)");
    lens->add_option("p", p)->required();
    lens->add_option("q", q)->required();

    long long ba = 0, bb = 0, bc = 0, bd = 0;
    auto* bundle = app.add_subcommand("bundle", "census of a torus bundle with monodromy A");
    bundle->add_option("a", ba)->required();
    bundle->add_option("b", bb)->required();
    bundle->add_option("c", bc)->required();
    bundle->add_option("d", bd)->required();

    long long d0x = 0, d0y = 0, d1x = 0, d1y = 0;
    int type0 = 0, type1 = 0;
    long long pairs0 = -1, pairs1 = -1;
    auto* thick = app.add_subcommand("thick", "census of the thick torus");
    thick->add_option("d0x", d0x)->required();
    thick->add_option("d0y", d0y)->required();
    thick->add_option("type0", type0)->required()->check(CLI::Range(0, 1));
    thick->add_option("d1x", d1x)->required();
    thick->add_option("d1y", d1y)->required();
    thick->add_option("type1", type1)->required()->check(CLI::Range(0, 1));
    thick->add_option("--pairs0", pairs0, "dividing pairs on side 0");
    thick->add_option("--pairs1", pairs1, "dividing pairs on side 1");

    long long sx = 0, sy = 0;
    int stype = 0;
    auto* solid = app.add_subcommand("solid", "census of the solid torus");
    solid->add_option("dx", sx)->required();
    solid->add_option("dy", sy)->required();
    solid->add_option("type", stype)->required()->check(CLI::Range(0, 1));

    auto* cf = app.add_subcommand("cf", "minus-sign continued fraction of p/q");
    long long cp = 0, cq = 0;
    cf->add_option("p", cp)->required();
    cf->add_option("q", cq)->required();

    long long slx = 0, sly = 0, srx = 0, sry = 0;
    std::string flags = "cc";
    auto* sailc = app.add_subcommand("sail", "sail of a rational lattice cone");
    sailc->add_option("lx", slx)->required();
    sailc->add_option("ly", sly)->required();
    sailc->add_option("rx", srx)->required();
    sailc->add_option("ry", sry)->required();
    sailc->add_option("--flags", flags, "boundary flags: c(losed)/o(pen) per side")
        ->check(CLI::IsMember({"cc", "co", "oc", "oo"}));

    auto* arcs = app.add_subcommand("arcs", "arc-family counts on the disk or annulus");
    std::string surface;
    long long an = 0, an1 = -1;
    bool do_enum = false;
    arcs->add_option("surface", surface)->required()->check(CLI::IsMember({"disk", "annulus"}));
    arcs->add_option("n", an)->required();
    arcs->add_option("n1", an1);
    arcs->add_flag("--enumerate", do_enum, "list the classes explicitly");

    long long p_max = 0;
    auto* sweep = app.add_subcommand("sweep", "lens census sweep over all (p, q), p <= p_max");
    sweep->add_option("p_max", p_max)->required();

    app.add_subcommand("selftest", "run the built-in oracle checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // argument errors exit 2; --help stays 0
    }

    try {
        if (lens->parsed()) {
            emit(lens_json(lens_census(p, q)), format);
        } else if (bundle->parsed()) {
            emit(bundle_json(bundle_census(SL2Mat{ba, bb, bc, bd})), format);
        } else if (thick->parsed()) {
            SuspensionSpec s0(RayDir{Vec{d0x, d0y}}, type0, pairs0);
            SuspensionSpec s1(RayDir{Vec{d1x, d1y}}, type1, pairs1);
            emit(thick_json(thick_torus_census(s0, s1, torsion_max, window)), format);
        } else if (solid->parsed()) {
            SuspensionSpec s(RayDir{Vec{sx, sy}}, stype);
            emit(solid_json(solid_torus_census(s, window)), format);
        } else if (cf->parsed()) {
            NegCF v = neg_cf_expand(cp, cq);
            json j;
            j["schema"] = "census/1";
            j["command"] = "cf";
            j["provenance"] = "greedy minus-sign continued fraction expansion";
            j["exact"] = true;
            j["p"] = jint(cp);
            j["q"] = jint(cq);
            j["cf"] = jints(v.coeffs);
            j["continuants"] = jints(continuants(v));
            emit(j, format);
        } else if (sailc->parsed()) {
            LatticeCone C(RayBound(Vec{slx, sly}, flags[0] == 'c'),
                          RayBound(Vec{srx, sry}, flags[1] == 'c'));
            Sail s = sail_points(C, window);
            json j;
            j["schema"] = "census/1";
            j["command"] = "sail";
            j["provenance"] = "primitive lattice points on the hull boundary of the cone";
            j["exact"] = !s.truncated_left && !s.truncated_right && !s.empty_within_window;
            j["sail"] = sail_json(s);
            auto bhat = finite_edge_points(s);
            j["finite_edge_points"] = jvecs(bhat.points);
            j["finite_edge_points_exact"] = bhat.exact;
            emit(j, format);
        } else if (arcs->parsed()) {
            json j;
            j["schema"] = "census/1";
            j["command"] = "arcs";
            j["exact"] = true;
            if (surface == "disk") {
                j["provenance"] = "punctured-disk arc families: central binomial";
                j["count"] = jint(disk_count(an));
                if (do_enum) {
                    auto ms = enumerate_matchings(ArcProblem::disk(an));
                    j["enumerated"] = ms.size();
                }
            } else {
                if (an1 < 0) throw std::invalid_argument("arcs annulus needs n0 and n1");
                j["provenance"] = "annulus arc families with a traversing arc";
                j["count"] = jint(annulus_count(an, an1));
                if (do_enum) {
                    auto ms = enumerate_matchings(ArcProblem::annulus(an, an1));
                    j["enumerated"] = ms.size();
                }
            }
            emit(j, format);
        } else if (sweep->parsed()) {
            auto rows = lens_sweep(p_max);
            if (format == "json") {
                json j;
                j["schema"] = "census/1";
                j["command"] = "sweep";
                j["provenance"] = "lens census sweep with two-path consistency";
                bool all = true;
                json arr = json::array();
                for (const auto& r : rows) {
                    arr.push_back(json{{"p", jint(r.p)},
                                       {"q", jint(r.q)},
                                       {"oriented", jint(r.oriented)},
                                       {"unoriented", jint(r.unoriented)},
                                       {"euler_classes", jint(r.euler_class_count)},
                                       {"two_path", r.two_path_agree ? "agree" : "MISMATCH"}});
                    all = all && r.two_path_agree;
                }
                j["exact"] = all;
                j["rows"] = arr;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "p\tq\toriented\tunoriented\teuler\ttwo-path\n";
                for (const auto& r : rows) {
                    std::cout << r.p << "\t" << r.q << "\t" << r.oriented << "\t" << r.unoriented
                              << "\t" << r.euler_class_count << "\t"
                              << (r.two_path_agree ? "agree" : "MISMATCH") << "\n";
                }
            }
        } else {
            return run_selftest();
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::string what = e.what();
        return what.find("guard") != std::string::npos ? 3 : 1;
    }
    return 0;
}
