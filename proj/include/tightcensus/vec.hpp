#pragma once

#include <ostream>
#include <stdexcept>
#include <tuple>

#include "tightcensus/bigint.hpp"

namespace tightcensus {

// Integer vector in the rank-2 lattice. The plane is oriented by the
// intersection form; wedge(u, v) = u_x v_y - u_y v_x.
struct Vec {
    Int x, y;

    friend Vec operator+(const Vec& u, const Vec& v) { return {u.x + v.x, u.y + v.y}; }
    friend Vec operator-(const Vec& u, const Vec& v) { return {u.x - v.x, u.y - v.y}; }
    Vec operator-() const { return {-x, -y}; }
    friend Vec operator*(const Int& k, const Vec& v) { return {k * v.x, k * v.y}; }

    friend bool operator==(const Vec& u, const Vec& v) { return u.x == v.x && u.y == v.y; }
    friend bool operator!=(const Vec& u, const Vec& v) { return !(u == v); }
    friend bool operator<(const Vec& u, const Vec& v) {
        return std::tie(u.x, u.y) < std::tie(v.x, v.y);
    }

    bool is_zero() const { return x == 0 && y == 0; }

    friend std::ostream& operator<<(std::ostream& os, const Vec& v) {
        return os << "(" << v.x << "," << v.y << ")";
    }
};

inline Int wedge(const Vec& u, const Vec& v) { return u.x * v.y - u.y * v.x; }

inline bool is_primitive(const Vec& v) {
    if (v.is_zero()) return false;
    return gcd_int(v.x, v.y) == 1;
}

inline Vec primitive_part(const Vec& v) {
    if (v.is_zero()) throw std::invalid_argument("primitive_part: zero vector");
    Int g = gcd_int(v.x, v.y);
    return {v.x / g, v.y / g};
}

// Primitive vector with validated invariants; the atoms of sails.
struct PrimVec : Vec {
    explicit PrimVec(Vec v) : Vec(std::move(v)) {
        if (!is_primitive(*this)) throw std::invalid_argument("PrimVec: not primitive");
    }
    PrimVec(Int px, Int py) : PrimVec(Vec{std::move(px), std::move(py)}) {}
};

}  // namespace tightcensus
