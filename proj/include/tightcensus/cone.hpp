#pragma once

// Planar lattice cones bounded by two rays, each open or closed, sweeping
// clockwise from the left ray to the right ray through an angle in (0, pi].
// Rays are rational (a primitive integer half-line) or quadratic-irrational
// (a surd slope plus the sign of x selecting the half-line); irrational rays
// are always open since no lattice point lies on them.

#include <optional>
#include <stdexcept>
#include <variant>

#include "tightcensus/quadratic.hpp"
#include "tightcensus/vec.hpp"

namespace tightcensus {

struct SurdRay {
    QuadraticIrrational slope;  // y/x of the line, irrational
    int x_sign;                 // +1 or -1: which half-line of the line

    SurdRay(QuadraticIrrational z, int sgn) : slope(std::move(z)), x_sign(sgn) {
        if (sgn != 1 && sgn != -1) throw std::invalid_argument("SurdRay: x_sign must be +-1");
    }
};

using RayDir = std::variant<Vec, SurdRay>;

struct RayBound {
    RayDir dir;
    bool closed;

    RayBound(Vec v, bool cl) : dir(primitive_part(v)), closed(cl) {}
    RayBound(SurdRay s, bool cl) : dir(std::move(s)), closed(cl) {
        if (cl) throw std::invalid_argument("RayBound: irrational ray cannot be closed");
    }

    bool is_rational() const { return std::holds_alternative<Vec>(dir); }
    const Vec& vec() const { return std::get<Vec>(dir); }
    const SurdRay& surd() const { return std::get<SurdRay>(dir); }
};

// sign of d ^ v for the ray direction d (exact for surd rays)
inline int ray_wedge_sign(const RayDir& d, const Vec& v) {
    if (std::holds_alternative<Vec>(d)) {
        return sign_int(wedge(std::get<Vec>(d), v));
    }
    const SurdRay& s = std::get<SurdRay>(d);
    // d = x_sign * (1, z): d ^ v = x_sign * (v_y - z v_x)
    QuadExpr z = QuadExpr::from(s.slope);
    QuadExpr e{Rational(v.y) - z.r * Rational(v.x), -z.s * Rational(v.x), z.D};
    return s.x_sign * e.sign();
}

// true when v is a positive multiple of the rational ray direction
inline bool on_ray(const Vec& d, const Vec& v) {
    if (wedge(d, v) != 0) return false;
    return sign_int(d.x) == sign_int(v.x) && sign_int(d.y) == sign_int(v.y) && !v.is_zero();
}

class LatticeCone {
  public:
    LatticeCone(RayBound left, RayBound right)
        : left_(std::move(left)), right_(std::move(right)) {
        if (left_.is_rational() && right_.is_rational()) {
            Int w = wedge(left_.vec(), right_.vec());
            if (w == 0) {
                if (right_.vec() == left_.vec()) {
                    throw std::invalid_argument("LatticeCone: zero angular span");
                }
                half_plane_ = true;  // right = -left, span exactly pi
                return;
            }
            if (w > 0) throw std::invalid_argument("LatticeCone: span exceeds pi");
            return;
        }
        // at least one irrational ray: span pi is impossible, require strict order
        int s = side_sign(left_.dir, right_.dir);
        if (s >= 0) throw std::invalid_argument("LatticeCone: rays not in clockwise position");
    }

    const RayBound& left() const { return left_; }
    const RayBound& right() const { return right_; }
    bool is_half_plane() const { return half_plane_; }

    bool contains(const Vec& v) const {
        if (v.is_zero()) throw std::invalid_argument("cone membership: zero vector");
        if (half_plane_) {
            int s = ray_wedge_sign(left_.dir, v);
            if (s < 0) return true;
            if (s > 0) return false;
            return on_ray(left_.vec(), v) ? left_.closed : right_.closed;
        }
        int sl = ray_wedge_sign(left_.dir, v);
        if (sl > 0) return false;
        if (sl == 0) {
            if (!on_ray(left_.vec(), v)) return false;  // opposite half-line
            return left_.closed;
        }
        int sr = ray_wedge_sign(right_.dir, v);
        if (sr < 0) return false;
        if (sr == 0) {
            if (!on_ray(right_.vec(), v)) return false;
            return right_.closed;
        }
        return true;
    }

    bool strictly_contains(const Vec& v) const {
        if (v.is_zero()) throw std::invalid_argument("cone membership: zero vector");
        if (half_plane_) return ray_wedge_sign(left_.dir, v) < 0;
        return ray_wedge_sign(left_.dir, v) < 0 && ray_wedge_sign(right_.dir, v) > 0;
    }

  private:
    // sign of dl ^ dr, handling surd combinations exactly
    static int side_sign(const RayDir& dl, const RayDir& dr) { return surd_pair_sign(dl, dr); }

    static int surd_pair_sign(const RayDir& dl, const RayDir& dr);

    RayBound left_, right_;
    bool half_plane_ = false;
};

// d ^ e where each direction may be rational or a surd half-line.
inline int LatticeCone::surd_pair_sign(const RayDir& dl, const RayDir& dr) {
    if (std::holds_alternative<Vec>(dl) && std::holds_alternative<Vec>(dr)) {
        return sign_int(wedge(std::get<Vec>(dl), std::get<Vec>(dr)));
    }
    if (std::holds_alternative<Vec>(dl)) {
        // dl ^ dr = -(dr ^ dl)
        return -ray_wedge_sign(dr, std::get<Vec>(dl));
    }
    if (std::holds_alternative<Vec>(dr)) {
        return ray_wedge_sign(dl, std::get<Vec>(dr));
    }
    // two surds: dl = s1 (1, z1), dr = s2 (1, z2): dl ^ dr = s1 s2 (z2 - z1)
    const SurdRay& l = std::get<SurdRay>(dl);
    const SurdRay& r = std::get<SurdRay>(dr);
    return l.x_sign * r.x_sign * surd_compare(r.slope, l.slope);
}

// true iff v in C, per the open/closed flags; exact for surd rays.
inline bool cone_contains(const LatticeCone& C, const Vec& v) { return C.contains(v); }

// Negate a ray direction (the opposite half-line of the same line).
inline RayDir negate_dir(const RayDir& d) {
    if (std::holds_alternative<Vec>(d)) return RayDir{-std::get<Vec>(d)};
    SurdRay s = std::get<SurdRay>(d);
    s.x_sign = -s.x_sign;
    return RayDir{s};
}

inline RayBound make_bound(RayDir d, bool closed) {
    if (std::holds_alternative<Vec>(d)) return RayBound(std::get<Vec>(d), closed);
    return RayBound(std::get<SurdRay>(d), closed);
}

// Dual cone C' = { w' : w' ^ w > 0 for all w in C }: bounded left by D_1 and
// right by D_0 with open/closed flags flipped; dual(dual(C)) = -C. Flags on
// irrational rays carry no lattice content and stay open.
inline LatticeCone dual_cone(const LatticeCone& C) {
    RayDir new_left = C.right().dir;
    RayDir new_right = negate_dir(C.left().dir);
    bool left_closed = std::holds_alternative<Vec>(new_left) && !C.right().closed;
    bool right_closed = std::holds_alternative<Vec>(new_right) && !C.left().closed;
    return LatticeCone(make_bound(new_left, left_closed), make_bound(new_right, right_closed));
}

}  // namespace tightcensus
