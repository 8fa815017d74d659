#pragma once

#include <array>
#include <string>

#include "mobius4/rational.hpp"

namespace mobius4 {

struct Vec3 {
    Rational x, y, z;

    Vec3() = default;
    Vec3(Rational px, Rational py, Rational pz) : x(px), y(py), z(pz) {}

    Rational& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    const Rational& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator*(const Rational& s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }

    bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }

    friend bool operator==(const Vec3& a, const Vec3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
    friend bool operator!=(const Vec3& a, const Vec3& b) { return !(a == b); }
    friend bool operator<(const Vec3& a, const Vec3& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.y != b.y) return a.y < b.y;
        return a.z < b.z;
    }

    std::string str() const { return "(" + x.str() + "," + y.str() + "," + z.str() + ")"; }
};

inline Rational dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline Rational det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(cross(a, b), c); }

inline Rational length_squared(const Vec3& v) { return dot(v, v); }

inline Vec3 midpoint(const Vec3& a, const Vec3& b) { return Rational(1, 2) * (a + b); }

struct Vec2 {
    Rational x, y;

    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(const Rational& s, const Vec2& v) { return {s * v.x, s * v.y}; }

    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }
    friend bool operator<(const Vec2& a, const Vec2& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

inline Rational cross2(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot2(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

// Integer-triple shorthand for lattice points ("103" in the tables reads as (1,0,3)).
inline Vec3 pt(std::int64_t x, std::int64_t y, std::int64_t z) {
    return {Rational(x), Rational(y), Rational(z)};
}

// Cube center O = (3/2, 3/2, 3/2)
inline Vec3 cube_center() { return {Rational(3, 2), Rational(3, 2), Rational(3, 2)}; }

}  // namespace mobius4
