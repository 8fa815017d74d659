#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mobius4/curves.hpp"
#include "mobius4/geometry.hpp"
#include "mobius4/isometry.hpp"

namespace mobius4::strips {

// The six maximal planar faces of a strip. Face k spans boundary segments
// k and k+6; even 0-based faces are the 1:3 trapezoids, odd ones the
// parallelograms. Legs (the connecting sides) all have squared length 3.
struct StripFaceSet {
    int owner = 0;  // 1..4
    std::vector<PlanarQuad> faces;
};

inline StripFaceSet build_faces(int i) {
    curves::PLCycle c = curves::canonical_curve(i).cycle;
    StripFaceSet out;
    out.owner = i;
    for (int k = 0; k < 6; ++k) {
        const Segment3& top = c.segments[k];
        const Segment3& bottom = c.segments[k + 6];
        PlanarQuad q(top.a, top.b, bottom.b, bottom.a);
        if (length_squared(q.v[2] - q.v[1]) != Rational(3) || length_squared(q.v[0] - q.v[3]) != Rational(3))
            throw std::logic_error("build_faces: leg of strip " + std::to_string(i) +
                                   " face " + std::to_string(k) + " does not have squared length 3");
        QuadKind expect = (k % 2 == 0) ? QuadKind::Trapezoid : QuadKind::Parallelogram;
        if (q.kind != expect)
            throw std::logic_error("build_faces: face kinds of strip " + std::to_string(i) +
                                   " do not alternate");
        out.faces.push_back(q);
    }
    // adjacent faces share one leg: leg v1->v2 of face k is leg v3->v0 of face k+1
    for (int k = 0; k < 6; ++k) {
        const PlanarQuad& a = out.faces[k];
        const PlanarQuad& b = out.faces[(k + 1) % 6];
        Segment3 leg_a(a.v[1], a.v[2]);
        Segment3 leg_b(b.v[3], b.v[0]);
        if (!(leg_a == leg_b))
            throw std::logic_error("build_faces: faces " + std::to_string(k) + " and next do not share a leg");
    }
    return out;
}

// Mid-segment of a face: joins the midpoints of its two legs. For the
// trapezoids and parallelograms of the four strips these are exactly the
// twelve edges of the inner cube Q.
inline Segment3 face_midsegment(const PlanarQuad& q) {
    return Segment3(midpoint(q.v[3], q.v[0]), midpoint(q.v[1], q.v[2]));
}

enum class DiagonalChoice { FromV0, FromV1 };

struct StripMesh {
    int owner = 0;
    std::vector<Vec3> vertices;                 // the 12 boundary corners
    std::vector<std::array<int, 3>> triangles;  // 12 oriented triples
};

inline StripMesh build_mesh(const StripFaceSet& f, DiagonalChoice choice = DiagonalChoice::FromV0) {
    StripMesh mesh;
    mesh.owner = f.owner;
    auto index_of = [&](const Vec3& p) {
        for (size_t i = 0; i < mesh.vertices.size(); ++i)
            if (mesh.vertices[i] == p) return (int)i;
        mesh.vertices.push_back(p);
        return (int)mesh.vertices.size() - 1;
    };
    for (const PlanarQuad& q : f.faces) {
        int a = index_of(q.v[0]), b = index_of(q.v[1]), c = index_of(q.v[2]), d = index_of(q.v[3]);
        if (choice == DiagonalChoice::FromV0) {
            mesh.triangles.push_back({a, b, c});
            mesh.triangles.push_back({a, c, d});
        } else {
            mesh.triangles.push_back({a, b, d});
            mesh.triangles.push_back({b, c, d});
        }
    }
    return mesh;
}

struct MeshReport {
    int vertex_count = 0;
    int edge_count = 0;
    int triangle_count = 0;
    int boundary_edge_count = 0;
    int boundary_components = 0;
    int euler_characteristic = 0;
    bool edge_manifold = false;
    bool orientable = false;
};

inline MeshReport analyze_mesh(const StripMesh& m) {
    MeshReport r;
    r.vertex_count = (int)m.vertices.size();
    r.triangle_count = (int)m.triangles.size();

    std::map<std::pair<int, int>, std::vector<int>> edge_tris;
    auto key = [](int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
    for (int t = 0; t < (int)m.triangles.size(); ++t)
        for (int e = 0; e < 3; ++e)
            edge_tris[key(m.triangles[t][e], m.triangles[t][(e + 1) % 3])].push_back(t);

    r.edge_count = (int)edge_tris.size();
    r.edge_manifold = true;
    std::map<int, std::vector<int>> boundary_adj;
    for (const auto& [e, tris] : edge_tris) {
        if (tris.size() > 2) r.edge_manifold = false;
        if (tris.size() == 1) {
            ++r.boundary_edge_count;
            boundary_adj[e.first].push_back(e.second);
            boundary_adj[e.second].push_back(e.first);
        }
    }
    r.euler_characteristic = r.vertex_count - r.edge_count + r.triangle_count;

    // boundary cycles
    std::set<int> seen;
    for (const auto& [v, adj] : boundary_adj) {
        if (seen.count(v)) continue;
        ++r.boundary_components;
        int cur = v, prev = -1;
        while (!seen.count(cur)) {
            seen.insert(cur);
            const std::vector<int>& nb = boundary_adj[cur];
            int nxt = (nb.size() > 0 && nb[0] != prev) ? nb[0] : (nb.size() > 1 ? nb[1] : -1);
            prev = cur;
            cur = nxt;
            if (cur < 0) break;
        }
    }

    // orientability by propagation: adjacent triangles must traverse their
    // common edge in opposite directions once flips are applied
    int n = (int)m.triangles.size();
    std::vector<int> flip(n, -1);
    r.orientable = true;
    auto traverses = [&](int t, int a, int b) {
        // +1 if triangle t (possibly flipped) walks a->b, -1 if b->a
        for (int e = 0; e < 3; ++e) {
            int u = m.triangles[t][e], v = m.triangles[t][(e + 1) % 3];
            if (u == a && v == b) return flip[t] == 1 ? -1 : 1;
            if (u == b && v == a) return flip[t] == 1 ? 1 : -1;
        }
        return 0;
    };
    for (int start = 0; start < n && r.orientable; ++start) {
        if (flip[start] != -1) continue;
        flip[start] = 0;
        std::vector<int> stack = {start};
        while (!stack.empty() && r.orientable) {
            int t = stack.back();
            stack.pop_back();
            for (const auto& [e, tris] : edge_tris) {
                if (tris.size() != 2) continue;
                if (tris[0] != t && tris[1] != t) continue;
                int other = tris[0] == t ? tris[1] : tris[0];
                int need;  // other must traverse e opposite to t
                int mine = traverses(t, e.first, e.second);
                int theirs_unflipped;
                {
                    int saved = flip[other];
                    flip[other] = 0;
                    theirs_unflipped = traverses(other, e.first, e.second);
                    flip[other] = saved;
                }
                need = (theirs_unflipped == -mine) ? 0 : 1;
                if (flip[other] == -1) {
                    flip[other] = need;
                    stack.push_back(other);
                } else if (flip[other] != need) {
                    r.orientable = false;
                    break;
                }
            }
        }
    }
    return r;
}

// The boundary of the mesh must be the owner curve, segment for segment.
inline bool boundary_matches_curve(const StripMesh& m, const curves::PLCycle& c) {
    std::map<std::pair<int, int>, int> edge_count;
    auto key = [](int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
    for (const auto& t : m.triangles)
        for (int e = 0; e < 3; ++e) ++edge_count[key(t[e], t[(e + 1) % 3])];
    std::set<std::pair<Vec3, Vec3>> boundary;
    for (const auto& [e, cnt] : edge_count)
        if (cnt == 1) boundary.insert(Segment3(m.vertices[e.first], m.vertices[e.second]).sorted());
    return boundary == c.segment_set();
}

// Exact value multiplier * sqrt(radicand), radicand squarefree.
struct ExactRadical {
    Rational multiplier;
    std::int64_t radicand = 1;

    friend bool operator==(const ExactRadical& a, const ExactRadical& b) {
        return a.multiplier == b.multiplier && a.radicand == b.radicand;
    }
    std::string str() const {
        if (radicand == 1) return multiplier.str();
        return multiplier.str() + "*sqrt(" + std::to_string(radicand) + ")";
    }
};

// Total area of the six faces. All faces have one common squared area, so
// the sum collapses to an exact radical: 6 * sqrt(8) = 12 sqrt(2).
inline ExactRadical strip_area(const StripFaceSet& f) {
    Rational common = quad_area_squared(f.faces[0]);
    for (const PlanarQuad& q : f.faces)
        if (quad_area_squared(q) != common)
            throw std::logic_error("strip_area: faces of unequal area");
    Rational total2 = Rational(36) * common;  // (6*sqrt(common))^2
    if (!total2.is_integer()) throw std::logic_error("strip_area: non-integer squared total");
    std::int64_t n = total2.num, square = 1, rest = 1;
    for (std::int64_t p = 2; p * p <= n; ++p)
        while (n % (p * p) == 0) { n /= p * p; square *= p; }
    rest = n;
    return {Rational(square), rest};
}

struct FacePairIntersection {
    int face_i = 0, face_j = 0;  // 0..5 within each strip
    QuadKind kind_i, kind_j;
    Segment3 seg;
    // true for the full mid-segment intersections, i.e. the cube-Q edges;
    // false for the shorter contacts running along a leg of one strip
    bool on_cube_q = false;
};

struct StripPairResult {
    int owner_i = 0, owner_j = 0;
    std::vector<FacePairIntersection> segments;
    std::vector<Vec3> touch_points;      // isolated boundary contacts
    std::vector<std::string> overlaps;   // 2-dimensional face overlaps (refutations)
};

inline StripPairResult strip_pair_intersection(const StripFaceSet& a, const StripFaceSet& b) {
    if (a.owner == b.owner) throw std::invalid_argument("strip_pair_intersection: distinct strips required");
    StripPairResult out;
    out.owner_i = a.owner;
    out.owner_j = b.owner;
    std::set<Vec3> touch;
    auto on_lattice = [](const Vec3& p) {
        for (int c = 0; c < 3; ++c)
            if (p[c] != Rational(1, 2) && p[c] != Rational(5, 2)) return false;
        return true;
    };
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            QuadIntersection r = quad_quad_intersection(a.faces[i], b.faces[j]);
            switch (r.kind) {
                case QuadIntersection::Kind::Empty: break;
                case QuadIntersection::Kind::Point: touch.insert(r.pts[0]); break;
                case QuadIntersection::Kind::Segment: {
                    Segment3 s(r.pts[0], r.pts[1]);
                    bool q_edge = on_lattice(s.a) && on_lattice(s.b) && s.length_squared() == Rational(4);
                    out.segments.push_back({i, j, a.faces[i].kind, b.faces[j].kind, s, q_edge});
                    break;
                }
                case QuadIntersection::Kind::Region:
                    out.overlaps.push_back("faces " + std::to_string(i) + "/" + std::to_string(j) +
                                           " overlap in dimension 2");
                    break;
            }
        }
    out.touch_points.assign(touch.begin(), touch.end());
    return out;
}

// The contacts that are not cube edges all run along the interior creases:
// each is a sub-segment of a leg of one of the two strips.
inline bool is_leg_contact(const Segment3& s, const StripFaceSet& a, const StripFaceSet& b) {
    for (const StripFaceSet* f : {&a, &b})
        for (const PlanarQuad& q : f->faces) {
            Segment3 leg(q.v[1], q.v[2]);
            if (leg.contains(s.a) && leg.contains(s.b)) return true;
        }
    return false;
}

struct CubeQEdge {
    Segment3 seg;
    int trapezoid_color = 0;
    int parallelogram_color = 0;
};

struct CubeQ {
    std::vector<CubeQEdge> edges;  // 12, sorted by segment key

    const CubeQEdge& find(const Segment3& s) const {
        for (const CubeQEdge& e : edges)
            if (e.seg == s) return e;
        throw std::out_of_range("CubeQ: no such edge");
    }
};

inline std::array<StripFaceSet, 4> build_all_strips() {
    return {build_faces(1), build_faces(2), build_faces(3), build_faces(4)};
}

// Each cube edge is the mid-segment of exactly one trapezoid and one
// parallelogram across the four strips; the owners are its bicoloring.
inline CubeQ derive_cube_bicoloring() {
    std::array<StripFaceSet, 4> strips = build_all_strips();
    std::map<std::pair<Vec3, Vec3>, CubeQEdge> edges;
    for (const StripFaceSet& f : strips)
        for (const PlanarQuad& q : f.faces) {
            Segment3 mid = face_midsegment(q);
            for (const Vec3& p : {mid.a, mid.b})
                for (int i = 0; i < 3; ++i)
                    if (p[i] != Rational(1, 2) && p[i] != Rational(5, 2))
                        throw std::logic_error("cube edge endpoint off the {1/2,5/2} lattice: " + p.str());
            CubeQEdge& e = edges[mid.sorted()];
            e.seg = Segment3(mid.sorted().first, mid.sorted().second);
            int& slot = q.kind == QuadKind::Trapezoid ? e.trapezoid_color : e.parallelogram_color;
            if (slot != 0)
                throw std::logic_error("cube edge covered twice in the same role at " + mid.a.str());
            slot = f.owner;
        }
    if (edges.size() != 12) throw std::logic_error("expected 12 cube edges");
    CubeQ q;
    for (auto& [k, e] : edges) {
        if (e.trapezoid_color == 0 || e.parallelogram_color == 0)
            throw std::logic_error("cube edge missing a role at " + e.seg.a.str());
        if (e.trapezoid_color == e.parallelogram_color)
            throw std::logic_error("cube edge with equal colors at " + e.seg.a.str());
        q.edges.push_back(e);
    }
    return q;
}

// The published cube-edge table, verbatim: subscript then superscript.
struct PrintedQEdge {
    Segment3 seg;
    int sub = 0, sup = 0;
};

inline const std::array<PrintedQEdge, 12>& printed_cube_table() {
    auto h = [](int n) { return Rational(4 * n + 1, 2); };  // 0 -> 1/2, 1 -> 5/2
    auto P = [&](int x, int y, int z) { return Vec3(h(x), h(y), h(z)); };
    static const std::array<PrintedQEdge, 12> table = {{
        {Segment3(P(0, 0, 0), P(1, 0, 0)), 2, 3},
        {Segment3(P(0, 1, 0), P(1, 1, 0)), 1, 4},
        {Segment3(P(0, 0, 1), P(1, 0, 1)), 3, 2},
        {Segment3(P(0, 1, 1), P(1, 1, 1)), 4, 1},
        {Segment3(P(0, 0, 0), P(0, 1, 0)), 3, 4},
        {Segment3(P(1, 0, 0), P(1, 1, 0)), 1, 2},
        {Segment3(P(0, 0, 1), P(0, 1, 1)), 4, 3},
        {Segment3(P(1, 0, 1), P(1, 1, 1)), 2, 1},
        {Segment3(P(0, 0, 0), P(0, 0, 1)), 4, 2},
        {Segment3(P(1, 0, 0), P(1, 0, 1)), 1, 3},
        {Segment3(P(0, 1, 0), P(0, 1, 1)), 2, 4},
        {Segment3(P(1, 1, 0), P(1, 1, 1)), 3, 1},
    }};
    return table;
}

struct BicoloringComparison {
    int direct_matches = 0;   // subscript read as trapezoid color
    int swapped_matches = 0;  // subscript read as parallelogram color
    std::vector<std::string> diffs;  // per-edge mismatch lines, direct reading
};

inline BicoloringComparison compare_bicoloring_with_print(const CubeQ& q) {
    BicoloringComparison cmp;
    for (const PrintedQEdge& pe : printed_cube_table()) {
        const CubeQEdge& ge = q.find(pe.seg);
        bool direct = (pe.sub == ge.trapezoid_color && pe.sup == ge.parallelogram_color);
        bool swapped = (pe.sup == ge.trapezoid_color && pe.sub == ge.parallelogram_color);
        if (direct) ++cmp.direct_matches;
        if (swapped) ++cmp.swapped_matches;
        if (!direct)
            cmp.diffs.push_back("[" + pe.seg.a.str() + "," + pe.seg.b.str() + "] printed (" +
                                std::to_string(pe.sub) + "," + std::to_string(pe.sup) + ") computed (" +
                                std::to_string(ge.trapezoid_color) + "," +
                                std::to_string(ge.parallelogram_color) + ")");
    }
    return cmp;
}

// Face-level point-set key of a strip: the set of its faces, each as a
// sorted vertex quadruple. The 24 face planes are pairwise distinct (a
// tested invariant), so equal keys mean equal point sets.
using QuadKey = std::array<Vec3, 4>;
using QuadSetKey = std::set<QuadKey>;

inline QuadSetKey quad_set_key(const StripFaceSet& f) {
    QuadSetKey k;
    for (const PlanarQuad& q : f.faces) k.insert(q.sorted_vertices());
    return k;
}

inline QuadSetKey apply_to_key(const CubeIsometry& g, const QuadSetKey& key) {
    QuadSetKey out;
    for (const QuadKey& q : key) {
        QuadKey img = {g.apply(q[0]), g.apply(q[1]), g.apply(q[2]), g.apply(q[3])};
        std::sort(img.begin(), img.end());
        out.insert(img);
    }
    return out;
}

// sigma with g(M_i) = M_sigma(i) as point sets, if g maps strips to strips.
inline std::optional<std::array<int, 5>> induced_strip_permutation(
    const CubeIsometry& g, const std::array<StripFaceSet, 4>& strips) {
    std::array<QuadSetKey, 5> keys;
    for (int i = 1; i <= 4; ++i) keys[i] = quad_set_key(strips[i - 1]);
    std::array<int, 5> sigma{};
    for (int i = 1; i <= 4; ++i) {
        QuadSetKey img = apply_to_key(g, keys[i]);
        sigma[i] = 0;
        for (int j = 1; j <= 4; ++j)
            if (img == keys[j]) sigma[i] = j;
        if (sigma[i] == 0) return std::nullopt;
    }
    return sigma;
}

}  // namespace mobius4::strips
