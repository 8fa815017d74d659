#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mobius4/curves.hpp"
#include "mobius4/knots.hpp"

namespace mobius4::poly {

// Quarter-integer shorthand: qpt(6,3,9) is (1.5, 0.75, 2.25).
inline Vec3 qpt(int x4, int y4, int z4) { return {Rational(x4, 4), Rational(y4, 4), Rational(z4, 4)}; }

struct Triangle3 {
    int color = 0;
    std::array<Vec3, 3> v;  // B_{i,1}, B_{i,2}, B_{i,3} in table order
};

// The published tables. The "(2,25,...)" token of the inner table, where a
// comma stands for a decimal point, is transcribed as 2.25 (ledgered).
inline const std::array<Triangle3, 4>& printed_triangle_vertices() {
    static const std::array<Triangle3, 4> t = {{
        {1, {qpt(6, 0, 12), qpt(12, 6, 0), qpt(0, 12, 6)}},
        {2, {qpt(6, 0, 0), qpt(0, 6, 12), qpt(12, 12, 6)}},
        {3, {qpt(6, 12, 12), qpt(0, 6, 0), qpt(12, 0, 6)}},
        {4, {qpt(6, 12, 0), qpt(12, 6, 12), qpt(0, 0, 6)}},
    }};
    return t;
}

inline const std::array<Triangle3, 4>& printed_inner_vertices() {
    static const std::array<Triangle3, 4> t = {{
        {1, {qpt(6, 3, 9), qpt(9, 6, 3), qpt(3, 9, 6)}},
        {2, {qpt(6, 3, 3), qpt(3, 6, 9), qpt(9, 9, 6)}},
        {3, {qpt(6, 9, 9), qpt(3, 6, 3), qpt(9, 3, 6)}},
        {4, {qpt(6, 9, 3), qpt(9, 6, 9), qpt(3, 3, 6)}},
    }};
    return t;
}

inline const std::array<Triangle3, 4>& printed_side_midpoints() {
    static const std::array<Triangle3, 4> t = {{
        {1, {qpt(9, 3, 6), qpt(6, 9, 3), qpt(3, 6, 9)}},
        {2, {qpt(3, 3, 6), qpt(6, 9, 9), qpt(9, 6, 3)}},
        {3, {qpt(3, 9, 6), qpt(6, 3, 3), qpt(9, 6, 9)}},
        {4, {qpt(9, 9, 6), qpt(6, 3, 9), qpt(3, 6, 3)}},
    }};
    return t;
}

// The large triangles: vertices are the centers of the unit boundary
// segments, ordered as in the published vertex table.
inline std::array<Triangle3, 4> build_triangles() {
    std::array<Triangle3, 4> out = printed_triangle_vertices();
    for (int i = 0; i < 4; ++i) {
        std::vector<Vec3> centers = curves::unit_segment_centers(curves::canonical_curve(i + 1).cycle);
        std::set<Vec3> have(centers.begin(), centers.end());
        std::set<Vec3> printed(out[i].v.begin(), out[i].v.end());
        if (have != printed)
            throw std::logic_error("triangle " + std::to_string(i + 1) +
                                   ": printed vertices differ from the unit-segment centers");
        // equilateral with centroid at the cube center
        for (int j = 0; j < 3; ++j)
            if (length_squared(out[i].v[j] - out[i].v[(j + 1) % 3]) != Rational(27, 2))
                throw std::logic_error("triangle side with squared length != 13.5");
        Vec3 centroid = Rational(1, 3) * (out[i].v[0] + out[i].v[1] + out[i].v[2]);
        if (centroid != cube_center()) throw std::logic_error("triangle centroid is not the cube center");
    }
    return out;
}

// Inner triangle vertices A_{i,j} = midpoint(B_{i,j}, O).
inline std::array<Triangle3, 4> build_inner_triangles() {
    std::array<Triangle3, 4> out{};
    std::array<Triangle3, 4> big = build_triangles();
    for (int i = 0; i < 4; ++i) {
        out[i].color = i + 1;
        for (int j = 0; j < 3; ++j) out[i].v[j] = midpoint(big[i].v[j], cube_center());
    }
    return out;
}

struct TableComparison {
    bool matches = true;
    std::vector<std::string> diffs;
};

inline TableComparison compare_triangles(const std::array<Triangle3, 4>& computed,
                                         const std::array<Triangle3, 4>& printed) {
    TableComparison cmp;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 3; ++j)
            if (computed[i].v[j] != printed[i].v[j]) {
                cmp.matches = false;
                cmp.diffs.push_back("color " + std::to_string(i + 1) + " entry " + std::to_string(j + 1) +
                                    ": computed " + computed[i].v[j].str() + ", printed " +
                                    printed[i].v[j].str());
            }
    return cmp;
}

// Side midpoints B_{i,12}, B_{i,23}, B_{i,31} of each large triangle.
inline std::array<Triangle3, 4> side_midpoints() {
    std::array<Triangle3, 4> big = build_triangles();
    std::array<Triangle3, 4> out{};
    for (int i = 0; i < 4; ++i) {
        out[i].color = i + 1;
        for (int j = 0; j < 3; ++j) out[i].v[j] = midpoint(big[i].v[j], big[i].v[(j + 1) % 3]);
    }
    return out;
}

// A label into the inner-vertex table: A_{color, index}.
struct InnerLabel {
    int color = 0, index = 0;  // 1..4, 1..3
    friend bool operator==(const InnerLabel& a, const InnerLabel& b) {
        return a.color == b.color && a.index == b.index;
    }
    friend bool operator<(const InnerLabel& a, const InnerLabel& b) {
        return std::pair(a.color, a.index) < std::pair(b.color, b.index);
    }
    std::string str() const { return "A" + std::to_string(color) + "," + std::to_string(index); }
};

// The coincidence table: side midpoint (i, jk) -> inner vertex label.
struct MidpointCorrespondence {
    std::array<std::array<InnerLabel, 3>, 4> cell;  // [i-1][k]: k=0 is B_{i,12}, 1 is B_{i,23}, 2 is B_{i,31}
};

inline const MidpointCorrespondence& printed_correspondence() {
    static const MidpointCorrespondence t = {{{
        {{{3, 3}, {4, 1}, {2, 2}}},
        {{{4, 3}, {3, 1}, {1, 2}}},
        {{{1, 3}, {2, 1}, {4, 2}}},
        {{{2, 3}, {1, 1}, {3, 2}}},
    }}};
    return t;
}

// Brute-force 12x12 exact point matching of side midpoints against inner
// vertices; each must hit exactly one.
inline MidpointCorrespondence build_correspondence() {
    std::array<Triangle3, 4> mids = side_midpoints();
    std::array<Triangle3, 4> inner = build_inner_triangles();
    MidpointCorrespondence out;
    std::set<InnerLabel> used;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 3; ++k) {
            std::vector<InnerLabel> hits;
            for (int i2 = 0; i2 < 4; ++i2)
                for (int j2 = 0; j2 < 3; ++j2)
                    if (mids[i].v[k] == inner[i2].v[j2]) hits.push_back({i2 + 1, j2 + 1});
            if (hits.size() != 1)
                throw std::logic_error("side midpoint matches " + std::to_string(hits.size()) +
                                       " inner vertices");
            out.cell[i][k] = hits[0];
            if (!used.insert(hits[0]).second) throw std::logic_error("correspondence is not injective");
        }
    return out;
}

// One token of a 6-cycle line: a large-triangle vertex B_{i,j} or an inner
// vertex A_{i,j}.
struct CycleToken {
    char kind = 'B';  // 'B' or 'A'
    int color = 0, index = 0;
    friend bool operator==(const CycleToken& a, const CycleToken& b) {
        return a.kind == b.kind && a.color == b.color && a.index == b.index;
    }
    std::string str() const {
        return std::string(1, kind) + std::to_string(color) + "," + std::to_string(index);
    }
};

using SixCycle = std::array<CycleToken, 6>;

inline const std::array<SixCycle, 4>& printed_six_cycles() {
    auto B = [](int i, int j) { return CycleToken{'B', i, j}; };
    auto A = [](int i, int j) { return CycleToken{'A', i, j}; };
    static const std::array<SixCycle, 4> t = {{
        {B(1, 1), A(3, 3), B(1, 2), A(4, 1), B(1, 3), A(2, 2)},
        {B(2, 1), A(1, 2), B(2, 3), A(3, 1), B(2, 2), A(4, 1)},
        {B(3, 1), A(1, 3), B(3, 2), A(2, 1), B(3, 3), A(4, 2)},
        {B(4, 1), A(1, 1), B(4, 2), A(2, 3), B(4, 1), A(3, 2)},
    }};
    return t;
}

// Canonical alternating walk around T_i: vertex, side midpoint (as its
// inner-vertex label), vertex, ...
inline std::array<SixCycle, 4> six_cycles() {
    MidpointCorrespondence corr = build_correspondence();
    std::array<SixCycle, 4> out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 3; ++j) {
            out[i][2 * j] = {'B', i + 1, j + 1};
            InnerLabel a = corr.cell[i][j];
            out[i][2 * j + 1] = {'A', a.color, a.index};
        }
    return out;
}

struct SixCycleDiff {
    int color = 0;
    int mismatches = 0;  // under the best dihedral alignment
    std::vector<std::string> details;
};

// Token diff of the printed line against the computed cycle, minimized
// over the 6 alignments that keep vertices in vertex positions.
inline SixCycleDiff compare_six_cycle(const SixCycle& computed, const SixCycle& printed, int color) {
    SixCycleDiff best;
    best.color = color;
    best.mismatches = 7;
    for (int rot = 0; rot < 3; ++rot)
        for (int rev = 0; rev < 2; ++rev) {
            SixCycle cand{};
            for (int p = 0; p < 6; ++p) {
                int src = rev == 0 ? (p + 2 * rot) % 6 : (2 * rot - p + 12) % 6;
                // reversal maps even positions to even positions when read
                // starting from a vertex
                cand[p] = computed[src];
            }
            SixCycleDiff d;
            d.color = color;
            for (int p = 0; p < 6; ++p)
                if (!(cand[p] == printed[p])) {
                    ++d.mismatches;
                    d.details.push_back("position " + std::to_string(p + 1) + ": printed " +
                                        printed[p].str() + ", computed " + cand[p].str());
                }
            if (d.mismatches < best.mismatches) best = d;
        }
    return best;
}

struct CuboctahedronReport {
    bool all_equidistant = false;
    Rational circumradius_squared;
    int edge_count = 0;
    bool edges_equal_radius = false;
    int neighbors_per_vertex = 0;
    int triangle_faces = 0;
    int square_faces = 0;
    bool ok() const {
        return all_equidistant && edge_count == 24 && neighbors_per_vertex == 4 &&
               triangle_faces == 8 && square_faces == 6 && edges_equal_radius;
    }
};

// The 12 large-triangle vertices form an Archimedean cuboctahedron: all on
// one sphere about the center, nearest-neighbor graph 4-regular with 24
// edges of length equal to the circumradius, faces 8 triangles + 6 squares.
inline CuboctahedronReport cuboctahedron_check() {
    std::vector<Vec3> pts;
    for (const Triangle3& t : build_triangles())
        for (const Vec3& v : t.v) pts.push_back(v);
    CuboctahedronReport r;
    int n = (int)pts.size();
    r.circumradius_squared = length_squared(pts[0] - cube_center());
    r.all_equidistant = true;
    for (const Vec3& p : pts)
        if (length_squared(p - cube_center()) != r.circumradius_squared) r.all_equidistant = false;

    Rational min_d2;
    bool first = true;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rational d2 = length_squared(pts[i] - pts[j]);
            if (first || d2 < min_d2) { min_d2 = d2; first = false; }
        }
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (length_squared(pts[i] - pts[j]) == min_d2) {
                adj[i][j] = adj[j][i] = true;
                ++r.edge_count;
            }
    r.edges_equal_radius = (min_d2 == r.circumradius_squared);
    r.neighbors_per_vertex = 0;
    for (int i = 0; i < n; ++i) {
        int deg = 0;
        for (int j = 0; j < n; ++j) deg += adj[i][j];
        if (i == 0) r.neighbors_per_vertex = deg;
        else if (deg != r.neighbors_per_vertex) r.neighbors_per_vertex = -1;
    }
    // faces: 3-cliques and induced 4-cycles
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (adj[a][b] && adj[b][c] && adj[a][c]) ++r.triangle_faces;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    int quad[4] = {a, b, c, d};
                    int edges = 0, deg[4] = {0, 0, 0, 0};
                    for (int x = 0; x < 4; ++x)
                        for (int y = x + 1; y < 4; ++y)
                            if (adj[quad[x]][quad[y]]) { ++edges; ++deg[x]; ++deg[y]; }
                    if (edges == 4 && deg[0] == 2 && deg[1] == 2 && deg[2] == 2 && deg[3] == 2)
                        ++r.square_faces;
                }
    return r;
}

// Annulus mesh between a large triangle and its inner triangle, as six
// triangles; used by the OFF export.
struct AnnulusMesh {
    std::array<Vec3, 6> vertices;  // B1 B2 B3 A1 A2 A3
    std::array<std::array<int, 3>, 6> triangles;
};

inline AnnulusMesh hollow_triangle_mesh(int i) {
    std::array<Triangle3, 4> big = build_triangles();
    std::array<Triangle3, 4> inner = build_inner_triangles();
    AnnulusMesh m;
    for (int j = 0; j < 3; ++j) {
        m.vertices[j] = big[i - 1].v[j];
        m.vertices[3 + j] = inner[i - 1].v[j];
    }
    for (int j = 0; j < 3; ++j) {
        int jn = (j + 1) % 3;
        m.triangles[2 * j] = {j, jn, 3 + j};
        m.triangles[2 * j + 1] = {jn, 3 + jn, 3 + j};
    }
    return m;
}

struct LinkingReport {
    // lk[i][j] for 1 <= i < j <= 4, from the diagram route; the disk route
    // must agree in both argument orders
    std::map<std::pair<int, int>, long long> lk;
    bool methods_agree = true;
    bool all_unit = true;
};

inline LinkingReport pairwise_linking() {
    std::array<Triangle3, 4> tris = build_triangles();
    LinkingReport rep;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            knots::Polyline3 pi(tris[i].v.begin(), tris[i].v.end());
            knots::Polyline3 pj(tris[j].v.begin(), tris[j].v.end());
            knots::KnotDiagram d = knots::generic_projection({pi, pj});
            Rational via_diagram = knots::linking_number(d, 0, 1);
            long long via_disk = knots::linking_number_disk(tris[i].v, pj);
            long long via_disk_rev = knots::linking_number_disk(tris[j].v, pi);
            if (!via_diagram.is_integer() || via_diagram != Rational(via_disk) || via_disk != via_disk_rev)
                rep.methods_agree = false;
            rep.lk[{i + 1, j + 1}] = via_disk;
            if (via_disk != 1 && via_disk != -1) rep.all_unit = false;
        }
    return rep;
}

}  // namespace mobius4::poly
