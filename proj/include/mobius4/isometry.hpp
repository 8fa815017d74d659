#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "mobius4/vec.hpp"

namespace mobius4 {

// One of the 48 isometries of the cube [0,3]^3 fixing its center: a signed
// 3x3 permutation matrix M acting by p -> O + M (p - O).
struct CubeIsometry {
    std::array<std::array<int, 3>, 3> m{};

    static CubeIsometry identity() {
        CubeIsometry g;
        for (int i = 0; i < 3; ++i) g.m[i][i] = 1;
        return g;
    }

    // rows: exactly one entry of +-1 each, one per column
    bool valid() const {
        std::array<int, 3> col_used{};
        for (int i = 0; i < 3; ++i) {
            int nz = 0;
            for (int j = 0; j < 3; ++j) {
                int e = m[i][j];
                if (e != 0 && e != 1 && e != -1) return false;
                if (e != 0) { ++nz; ++col_used[j]; }
            }
            if (nz != 1) return false;
        }
        return col_used[0] == 1 && col_used[1] == 1 && col_used[2] == 1;
    }

    Vec3 apply(const Vec3& p) const {
        Vec3 c = cube_center();
        Vec3 d = p - c;
        Vec3 r;
        for (int i = 0; i < 3; ++i) {
            Rational s(0);
            for (int j = 0; j < 3; ++j)
                if (m[i][j] != 0) s += Rational(m[i][j]) * d[j];
            r[i] = s;
        }
        return c + r;
    }

    // (a.compose(b))(p) == a(b(p))
    CubeIsometry compose(const CubeIsometry& b) const {
        CubeIsometry r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int s = 0;
                for (int k = 0; k < 3; ++k) s += m[i][k] * b.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }

    CubeIsometry inverse() const {
        CubeIsometry r;  // orthogonal: inverse is transpose
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
        return r;
    }

    int det() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }

    bool is_rotation() const { return det() == 1; }

    // Corner l = b1 + 2 b2 + 4 b3 sits at (3 b1, 3 b2, 3 b3).
    static Vec3 corner(int label) {
        return pt(3 * (label & 1), 3 * ((label >> 1) & 1), 3 * ((label >> 2) & 1));
    }

    std::array<int, 8> corner_permutation() const {
        std::array<int, 8> perm{};
        for (int l = 0; l < 8; ++l) {
            Vec3 img = apply(corner(l));
            int out = 0;
            for (int i = 0; i < 3; ++i) {
                if (img[i] == Rational(3)) out |= 1 << i;
                else if (img[i] != Rational(0)) throw std::logic_error("corner image off the corner set");
            }
            perm[l] = out;
        }
        return perm;
    }

    std::array<int, 9> flat() const {
        return {m[0][0], m[0][1], m[0][2], m[1][0], m[1][1], m[1][2], m[2][0], m[2][1], m[2][2]};
    }

    friend bool operator==(const CubeIsometry& a, const CubeIsometry& b) { return a.m == b.m; }
    friend bool operator!=(const CubeIsometry& a, const CubeIsometry& b) { return !(a == b); }
    friend bool operator<(const CubeIsometry& a, const CubeIsometry& b) { return a.flat() < b.flat(); }

    std::string str() const {
        std::string s = "[";
        for (int i = 0; i < 3; ++i) {
            s += "[";
            for (int j = 0; j < 3; ++j) s += std::to_string(m[i][j]) + (j < 2 ? "," : "");
            s += i < 2 ? "]," : "]";
        }
        return s + "]";
    }
};

// All 48 signed permutation matrices, lexicographic by flattened matrix.
inline const std::vector<CubeIsometry>& all_cube_isometries() {
    static const std::vector<CubeIsometry> table = [] {
        std::vector<CubeIsometry> v;
        int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (auto& p : perms)
            for (int s0 : {1, -1})
                for (int s1 : {1, -1})
                    for (int s2 : {1, -1}) {
                        CubeIsometry g;
                        int sign[3] = {s0, s1, s2};
                        for (int i = 0; i < 3; ++i) g.m[i][p[i]] = sign[i];
                        v.push_back(g);
                    }
        std::sort(v.begin(), v.end());
        return v;
    }();
    return table;
}

namespace iso {

// F_O, the central inversion
inline CubeIsometry central_inversion() {
    CubeIsometry g;
    for (int i = 0; i < 3; ++i) g.m[i][i] = -1;
    return g;
}

// R_d, 90-degree turn about the in-depth axis x1=x2=3/2: (x,y,z) -> (3-y, x, z)
inline CubeIsometry quarter_turn_depth() {
    CubeIsometry g;
    g.m[0][1] = -1;
    g.m[1][0] = 1;
    g.m[2][2] = 1;
    return g;
}

// R_v, 90-degree turn about the vertical axis x1=x3=3/2: (x,y,z) -> (3-z, y, x)
inline CubeIsometry quarter_turn_vertical() {
    CubeIsometry g;
    g.m[0][2] = -1;
    g.m[1][1] = 1;
    g.m[2][0] = 1;
    return g;
}

// R_h, 90-degree turn about the horizontal axis x2=x3=3/2: (x,y,z) -> (x, 3-z, y)
inline CubeIsometry quarter_turn_horizontal() {
    CubeIsometry g;
    g.m[0][0] = 1;
    g.m[1][2] = -1;
    g.m[2][1] = 1;
    return g;
}

inline CubeIsometry half_turn_depth() { return quarter_turn_depth().compose(quarter_turn_depth()); }
inline CubeIsometry half_turn_vertical() { return quarter_turn_vertical().compose(quarter_turn_vertical()); }
inline CubeIsometry half_turn_horizontal() { return quarter_turn_horizontal().compose(quarter_turn_horizontal()); }

// Mirror in the coordinate plane z = 3/2: (x,y,z) -> (x, y, 3-z)
inline CubeIsometry coordinate_reflection_z() {
    CubeIsometry g;
    g.m[0][0] = 1;
    g.m[1][1] = 1;
    g.m[2][2] = -1;
    return g;
}

// The two 120-degree rotations about the cube diagonal through the given
// pair of opposite corners of the inner cube Q (exact axis direction).
inline std::pair<CubeIsometry, CubeIsometry> diagonal_rotations(const Vec3& axis_a, const Vec3& axis_b) {
    Vec3 dir = axis_b - axis_a;
    std::vector<CubeIsometry> found;
    for (const CubeIsometry& g : all_cube_isometries()) {
        if (!g.is_rotation() || g == CubeIsometry::identity()) continue;
        int trace = g.m[0][0] + g.m[1][1] + g.m[2][2];
        if (trace != 0) continue;  // 120-degree rotations have trace 0
        Vec3 img;
        for (int i = 0; i < 3; ++i) {
            Rational s(0);
            for (int j = 0; j < 3; ++j)
                if (g.m[i][j] != 0) s += Rational(g.m[i][j]) * dir[j];
            img[i] = s;
        }
        if (img == dir) found.push_back(g);
    }
    if (found.size() != 2) throw std::logic_error("diagonal_rotations: expected a rotation pair");
    return {found[0], found[1]};
}

}  // namespace iso

}  // namespace mobius4
