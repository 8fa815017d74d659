#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mobius4/polylink.hpp"
#include "mobius4/strips.hpp"

namespace mobius4::sym {

using CornerPerm = std::array<int, 8>;

struct IsometryGroup {
    std::vector<CubeIsometry> elements;  // sorted

    int order() const { return (int)elements.size(); }
    bool contains(const CubeIsometry& g) const {
        return std::binary_search(elements.begin(), elements.end(), g);
    }
    bool closed() const {
        for (const CubeIsometry& g : elements) {
            if (!contains(g.inverse())) return false;
            for (const CubeIsometry& h : elements)
                if (!contains(g.compose(h))) return false;
        }
        return contains(CubeIsometry::identity());
    }
    IsometryGroup intersect(const IsometryGroup& other) const {
        IsometryGroup out;
        for (const CubeIsometry& g : elements)
            if (other.contains(g)) out.elements.push_back(g);
        return out;
    }
    friend bool operator==(const IsometryGroup& a, const IsometryGroup& b) {
        return a.elements == b.elements;
    }
};

// Exhaustive stabilizer of anything with an exact key: Key must be
// equality-comparable, and apply(g, key) produces the transformed key.
template <typename Key, typename Apply>
IsometryGroup stabilizer_of(const Key& key, Apply&& apply) {
    IsometryGroup out;
    for (const CubeIsometry& g : all_cube_isometries())
        if (apply(g, key) == key) out.elements.push_back(g);
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

using PointSetKey = std::set<Vec3>;

inline PointSetKey apply_points(const CubeIsometry& g, const PointSetKey& pts) {
    PointSetKey out;
    for (const Vec3& p : pts) out.insert(g.apply(p));
    return out;
}

// --- concrete stabilizers -------------------------------------------------

inline strips::QuadSetKey compound_key(const std::array<strips::StripFaceSet, 4>& s) {
    strips::QuadSetKey key;
    for (const strips::StripFaceSet& f : s)
        for (const PlanarQuad& q : f.faces) key.insert(q.sorted_vertices());
    return key;
}

inline IsometryGroup stabilizer_strip_compound(const std::array<strips::StripFaceSet, 4>& s) {
    return stabilizer_of(compound_key(s), strips::apply_to_key);
}

inline IsometryGroup stabilizer_strip(const strips::StripFaceSet& f) {
    return stabilizer_of(strips::quad_set_key(f), strips::apply_to_key);
}

using TriangleSetKey = std::set<std::array<Vec3, 3>>;

inline std::array<Vec3, 3> sorted_triangle(const poly::Triangle3& t) {
    std::array<Vec3, 3> v = t.v;
    std::sort(v.begin(), v.end());
    return v;
}

inline TriangleSetKey apply_triangles(const CubeIsometry& g, const TriangleSetKey& key) {
    TriangleSetKey out;
    for (const std::array<Vec3, 3>& t : key) {
        std::array<Vec3, 3> img = {g.apply(t[0]), g.apply(t[1]), g.apply(t[2])};
        std::sort(img.begin(), img.end());
        out.insert(img);
    }
    return out;
}

inline IsometryGroup stabilizer_triangle_compound(const std::array<poly::Triangle3, 4>& tris) {
    TriangleSetKey key;
    for (const poly::Triangle3& t : tris) key.insert(sorted_triangle(t));
    return stabilizer_of(key, apply_triangles);
}

inline IsometryGroup stabilizer_triangle(const poly::Triangle3& t) {
    return stabilizer_of(PointSetKey(t.v.begin(), t.v.end()), apply_points);
}

// Orbit of the compound under all 48 isometries; the claim is that there
// are exactly two images: the compound and its mirror.
struct CompoundOrbit {
    int distinct_images = 0;
    bool non_members_hit_one_mirror = false;
    bool mirror_is_reflection_image = false;
};

inline CompoundOrbit compound_orbit(const std::array<strips::StripFaceSet, 4>& s) {
    strips::QuadSetKey self = compound_key(s);
    std::set<strips::QuadSetKey> images;
    std::set<strips::QuadSetKey> non_member_images;
    for (const CubeIsometry& g : all_cube_isometries()) {
        strips::QuadSetKey img = strips::apply_to_key(g, self);
        images.insert(img);
        if (!(img == self)) non_member_images.insert(img);
    }
    CompoundOrbit o;
    o.distinct_images = (int)images.size();
    o.non_members_hit_one_mirror = non_member_images.size() == 1;
    o.mirror_is_reflection_image =
        non_member_images.count(strips::apply_to_key(iso::coordinate_reflection_z(), self)) == 1;
    return o;
}

// --- printed symbol tables -------------------------------------------------

// Cube-corner labels; the published list assigns 033 twice, the corrected
// labeling sets 7 = 333.
inline const std::array<Vec3, 8>& printed_vertex_labels() {
    static const std::array<Vec3, 8> t = {pt(0, 0, 0), pt(3, 0, 0), pt(0, 3, 0), pt(3, 3, 0),
                                          pt(0, 0, 3), pt(3, 0, 3), pt(0, 3, 3), pt(0, 3, 3)};
    return t;
}

inline const std::array<Vec3, 8>& corrected_vertex_labels() {
    static const std::array<Vec3, 8> t = {pt(0, 0, 0), pt(3, 0, 0), pt(0, 3, 0), pt(3, 3, 0),
                                          pt(0, 0, 3), pt(3, 0, 3), pt(0, 3, 3), pt(3, 3, 3)};
    return t;
}

// The corrected labeling is exactly the binary encoding used by
// CubeIsometry::corner.
inline bool labeling_is_binary() {
    for (int l = 0; l < 8; ++l)
        if (corrected_vertex_labels()[l] != CubeIsometry::corner(l)) return false;
    return true;
}

struct PrintedRotation {
    int color;
    CornerPerm perm, perm_inverse;
    Segment3 axis;
};

inline const std::array<PrintedRotation, 4>& printed_rotations() {
    auto h = [](int n) { return Rational(4 * n + 1, 2); };
    auto P = [&](int x, int y, int z) { return Vec3(h(x), h(y), h(z)); };
    static const std::array<PrintedRotation, 4> t = {{
        {1, {0, 2, 4, 6, 1, 3, 5, 7}, {0, 4, 1, 5, 2, 6, 3, 7}, Segment3(P(0, 0, 0), P(1, 1, 1))},
        {2, {3, 7, 2, 6, 1, 5, 0, 4}, {6, 4, 2, 0, 7, 5, 3, 1}, Segment3(P(0, 1, 0), P(1, 0, 1))},
        {3, {6, 2, 7, 3, 4, 0, 5, 1}, {5, 7, 1, 3, 4, 6, 0, 2}, Segment3(P(0, 0, 1), P(1, 1, 0))},
        {4, {5, 1, 4, 0, 7, 3, 6, 2}, {3, 1, 7, 5, 2, 0, 6, 4}, Segment3(P(1, 0, 0), P(0, 1, 1))},
    }};
    return t;
}

struct PrintedReflection {
    int color, index;  // F_{color,index}
    CornerPerm perm;
};

inline const std::array<PrintedReflection, 12>& printed_reflections() {
    static const std::array<PrintedReflection, 12> t = {{
        {1, 1, {7, 6, 3, 2, 5, 4, 1, 0}},
        {1, 2, {7, 3, 5, 1, 6, 2, 4, 0}},
        {1, 3, {7, 5, 6, 4, 3, 1, 2, 0}},
        {2, 1, {1, 0, 5, 4, 3, 2, 7, 6}},
        {2, 2, {7, 3, 5, 1, 6, 2, 4, 0}},
        {2, 3, {4, 6, 5, 7, 0, 2, 1, 3}},
        {3, 1, {7, 5, 6, 4, 3, 1, 2, 0}},
        {3, 2, {2, 6, 0, 4, 3, 7, 1, 5}},
        {3, 3, {1, 0, 5, 4, 3, 2, 7, 6}},
        {4, 1, {7, 6, 3, 2, 5, 4, 1, 0}},
        {4, 2, {2, 6, 0, 4, 3, 7, 1, 5}},
        {4, 3, {4, 6, 5, 7, 0, 2, 1, 3}},
    }};
    return t;
}

// the published identities F_{1,1}=F_{4,1}, F_{1,2}=F_{2,2}, F_{1,3}=F_{3,1},
// F_{2,1}=F_{3,3}, F_{2,3}=F_{4,3}, F_{3,2}=F_{4,2}
inline const std::array<std::pair<std::pair<int, int>, std::pair<int, int>>, 6>& printed_reflection_identities() {
    static const std::array<std::pair<std::pair<int, int>, std::pair<int, int>>, 6> t = {{
        {{1, 1}, {4, 1}}, {{1, 2}, {2, 2}}, {{1, 3}, {3, 1}},
        {{2, 1}, {3, 3}}, {{2, 3}, {4, 3}}, {{3, 2}, {4, 2}},
    }};
    return t;
}

inline std::optional<CubeIsometry> isometry_from_corner_perm(const CornerPerm& p) {
    for (const CubeIsometry& g : all_cube_isometries())
        if (g.corner_permutation() == p) return g;
    return std::nullopt;
}

// --- verification reports ---------------------------------------------------

struct RotationCheck {
    int color = 0;
    bool pair_matches = false;       // {computed pair} == {printed pair}
    bool in_triangle_stabilizer = false;
    bool in_strip_stabilizer = false;
};

inline std::array<RotationCheck, 4> verify_rotation_display() {
    std::array<strips::StripFaceSet, 4> all_strips = strips::build_all_strips();
    std::array<poly::Triangle3, 4> tris = poly::build_triangles();
    std::array<RotationCheck, 4> out{};
    for (int c = 0; c < 4; ++c) {
        const PrintedRotation& pr = printed_rotations()[c];
        auto [r1, r2] = iso::diagonal_rotations(pr.axis.a, pr.axis.b);
        std::set<CornerPerm> computed = {r1.corner_permutation(), r2.corner_permutation()};
        std::set<CornerPerm> printed = {pr.perm, pr.perm_inverse};
        out[c].color = pr.color;
        out[c].pair_matches = computed == printed;
        IsometryGroup gt = stabilizer_triangle(tris[c]);
        IsometryGroup gm = stabilizer_strip(all_strips[c]);
        out[c].in_triangle_stabilizer = gt.contains(r1) && gt.contains(r2);
        out[c].in_strip_stabilizer = gm.contains(r1) && gm.contains(r2);
    }
    return out;
}

struct ReflectionCheck {
    int color = 0, index = 0;
    bool realizable = false;       // printed permutation comes from a cube isometry
    bool involution = false;
    bool is_rotation = false;      // as a spatial map (the "reflections" are half-turns)
    int fixes_vertex = 0;          // which B_{color,j} it fixes, 0 if none
    bool in_triangle_stabilizer = false;
    bool in_strip_stabilizer = false;
    bool in_compound_stabilizer = false;
};

inline std::array<ReflectionCheck, 12> verify_reflection_display() {
    std::array<strips::StripFaceSet, 4> all_strips = strips::build_all_strips();
    std::array<poly::Triangle3, 4> tris = poly::build_triangles();
    IsometryGroup g_compound = stabilizer_strip_compound(all_strips);
    std::array<ReflectionCheck, 12> out{};
    for (int k = 0; k < 12; ++k) {
        const PrintedReflection& pr = printed_reflections()[k];
        ReflectionCheck& r = out[k];
        r.color = pr.color;
        r.index = pr.index;
        std::optional<CubeIsometry> g = isometry_from_corner_perm(pr.perm);
        r.realizable = g.has_value();
        if (!g) continue;
        r.involution = g->compose(*g) == CubeIsometry::identity();
        r.is_rotation = g->is_rotation();
        for (int j = 0; j < 3; ++j)
            if (g->apply(tris[pr.color - 1].v[j]) == tris[pr.color - 1].v[j]) r.fixes_vertex = j + 1;
        r.in_triangle_stabilizer = stabilizer_triangle(tris[pr.color - 1]).contains(*g);
        r.in_strip_stabilizer = stabilizer_strip(all_strips[pr.color - 1]).contains(*g);
        r.in_compound_stabilizer = g_compound.contains(*g);
    }
    return out;
}

inline bool verify_reflection_identities() {
    std::map<std::pair<int, int>, CornerPerm> table;
    for (const PrintedReflection& pr : printed_reflections()) table[{pr.color, pr.index}] = pr.perm;
    for (const auto& [lhs, rhs] : printed_reflection_identities())
        if (table.at(lhs) != table.at(rhs)) return false;
    return true;
}

struct SubgroupIntersections {
    std::array<int, 5> g_with_gi{};              // |G meet G_i|, index 1..4
    std::map<std::pair<int, int>, int> gi_gj;    // |G_i meet G_j|, i<j
};

inline SubgroupIntersections subgroup_intersections() {
    std::array<strips::StripFaceSet, 4> all_strips = strips::build_all_strips();
    IsometryGroup g = stabilizer_strip_compound(all_strips);
    std::array<IsometryGroup, 4> gi;
    for (int i = 0; i < 4; ++i) gi[i] = stabilizer_strip(all_strips[i]);
    SubgroupIntersections out;
    for (int i = 0; i < 4; ++i) out.g_with_gi[i + 1] = g.intersect(gi[i]).order();
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) out.gi_gj[{i + 1, j + 1}] = gi[i].intersect(gi[j]).order();
    return out;
}

}  // namespace mobius4::sym
