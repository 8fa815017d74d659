#include "doctest.h"

#include <map>
#include <set>

#include "mobius4/strips.hpp"

using namespace mobius4;
using namespace mobius4::strips;

namespace {

Vec3 q(int x, int y, int z) {  // 0 -> 1/2, 1 -> 5/2 per coordinate
    auto h = [](int n) { return Rational(4 * n + 1, 2); };
    return Vec3(h(x), h(y), h(z));
}

}  // namespace

TEST_CASE("face construction matches the worked examples") {
    StripFaceSet f1 = build_faces(1);
    REQUIRE(f1.faces.size() == 6);
    CHECK(f1.faces[0].kind == QuadKind::Trapezoid);
    CHECK(f1.faces[0].v[0] == pt(1, 0, 3));
    CHECK(f1.faces[0].v[1] == pt(2, 0, 3));
    CHECK(f1.faces[0].v[2] == pt(3, 1, 2));
    CHECK(f1.faces[0].v[3] == pt(0, 1, 2));

    CHECK(f1.faces[1].kind == QuadKind::Parallelogram);
    CHECK(f1.faces[1].v[0] == pt(2, 0, 3));
    CHECK(f1.faces[1].v[1] == pt(2, 0, 1));
    CHECK(f1.faces[1].v[2] == pt(3, 1, 0));
    CHECK(f1.faces[1].v[3] == pt(3, 1, 2));

    StripFaceSet f2 = build_faces(2);
    CHECK(f2.faces[0].kind == QuadKind::Trapezoid);
    CHECK(f2.faces[0].v[0] == pt(1, 0, 0));
    CHECK(f2.faces[0].v[1] == pt(2, 0, 0));
    CHECK(f2.faces[0].v[2] == pt(3, 1, 1));
    CHECK(f2.faces[0].v[3] == pt(0, 1, 1));

    for (int i = 1; i <= 4; ++i) {
        StripFaceSet f = build_faces(i);
        for (int k = 0; k < 6; ++k)
            CHECK(f.faces[k].kind == (k % 2 == 0 ? QuadKind::Trapezoid : QuadKind::Parallelogram));
    }
}

TEST_CASE("face plane census: 18 planes, the 6 shared ones hold disjoint trapezoid pairs") {
    std::map<std::pair<std::array<Rational, 3>, Rational>, std::vector<std::pair<int, int>>> planes;
    std::array<StripFaceSet, 4> strips = build_all_strips();
    for (int i = 1; i <= 4; ++i)
        for (int k = 0; k < 6; ++k) {
            Plane p = strips[i - 1].faces[k].plane();
            Vec3 n = p.n;
            Rational d = p.d;
            for (int c = 0; c < 3; ++c)
                if (!n[c].is_zero()) {
                    Rational s = n[c];
                    n = (Rational(1) / s) * n;
                    d = d / s;
                    break;
                }
            planes[{{n.x, n.y, n.z}, d}].push_back({i, k});
        }
    CHECK(planes.size() == 18);
    int shared = 0;
    for (const auto& [key, faces] : planes) {
        REQUIRE(faces.size() <= 2);
        if (faces.size() == 2) {
            ++shared;
            auto [i1, k1] = faces[0];
            auto [i2, k2] = faces[1];
            CHECK(i1 != i2);
            const PlanarQuad& a = strips[i1 - 1].faces[k1];
            const PlanarQuad& b = strips[i2 - 1].faces[k2];
            CHECK(a.kind == QuadKind::Trapezoid);
            CHECK(b.kind == QuadKind::Trapezoid);
            CHECK(quad_quad_intersection(a, b).kind == QuadIntersection::Kind::Empty);
        }
    }
    CHECK(shared == 6);
}

TEST_CASE("strip meshes: census, euler characteristic, boundary, orientability") {
    for (int i = 1; i <= 4; ++i) {
        StripFaceSet f = build_faces(i);
        curves::PLCycle c = curves::canonical_curve(i).cycle;
        for (DiagonalChoice choice : {DiagonalChoice::FromV0, DiagonalChoice::FromV1}) {
            StripMesh m = build_mesh(f, choice);
            MeshReport r = analyze_mesh(m);
            CHECK(r.vertex_count == 12);
            CHECK(r.edge_count == 24);
            CHECK(r.triangle_count == 12);
            CHECK(r.euler_characteristic == 0);
            CHECK(r.edge_manifold);
            CHECK(r.boundary_edge_count == 12);
            CHECK(r.boundary_components == 1);
            CHECK(!r.orientable);
            CHECK(boundary_matches_curve(m, c));
        }
    }
}

TEST_CASE("orientation propagation agrees with the exhaustive 2^12 oracle") {
    // Oracle: no assignment of flips makes all interior edges consistent.
    auto consistent = [](const StripMesh& m, unsigned mask) {
        std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> edge_dirs;
        for (int t = 0; t < (int)m.triangles.size(); ++t) {
            std::array<int, 3> tri = m.triangles[t];
            if (mask >> t & 1) std::swap(tri[1], tri[2]);
            for (int e = 0; e < 3; ++e) {
                int a = tri[e], b = tri[(e + 1) % 3];
                auto k = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
                edge_dirs[k].push_back({a, b});
            }
        }
        for (const auto& [k, dirs] : edge_dirs)
            if (dirs.size() == 2 && dirs[0] == dirs[1]) return false;
        return true;
    };
    StripMesh m = build_mesh(build_faces(1));
    bool any = false;
    for (unsigned mask = 0; mask < (1u << 12); ++mask)
        if (consistent(m, mask)) { any = true; break; }
    CHECK(!any);
    CHECK(!analyze_mesh(m).orientable);

    // control: a disk (one quad) is orientable both ways
    StripMesh disk;
    disk.vertices = {pt(0, 0, 0), pt(1, 0, 0), pt(1, 1, 0), pt(0, 1, 0)};
    disk.triangles = {{0, 1, 2}, {0, 2, 3}};
    CHECK(analyze_mesh(disk).orientable);
}

TEST_CASE("strip areas are 12 sqrt 2, from six faces of squared area 8") {
    for (int i = 1; i <= 4; ++i) {
        StripFaceSet f = build_faces(i);
        for (const PlanarQuad& face : f.faces) CHECK(quad_area_squared(face) == Rational(8));
        ExactRadical a = strip_area(f);
        CHECK(a.multiplier == Rational(12));
        CHECK(a.radicand == 2);
        CHECK(a.str() == "12*sqrt(2)");
    }
}

TEST_CASE("pairwise strip intersections produce the cube edges") {
    std::array<StripFaceSet, 4> strips = build_all_strips();

    SUBCASE("pair (2,3) contains the worked segment, trapezoid on 2, parallelogram on 3") {
        StripPairResult r = strip_pair_intersection(strips[1], strips[2]);
        CHECK(r.overlaps.empty());
        bool found = false;
        for (const FacePairIntersection& s : r.segments)
            if (s.seg == Segment3(q(0, 0, 0), q(1, 0, 0))) {
                found = true;
                CHECK(s.kind_i == QuadKind::Trapezoid);
                CHECK(s.kind_j == QuadKind::Parallelogram);
                CHECK(s.on_cube_q);
            }
        CHECK(found);
    }

    SUBCASE("mid-segment of strip 1 face 0, via the leg-midpoint oracle") {
        const PlanarQuad& face = strips[0].faces[0];
        Segment3 mid = face_midsegment(face);
        CHECK(mid == Segment3(q(0, 0, 1), q(1, 0, 1)));
        // leg midpoints computed directly
        CHECK(midpoint(pt(2, 0, 3), pt(3, 1, 2)) == q(1, 0, 1));
        CHECK(midpoint(pt(0, 1, 2), pt(1, 0, 3)) == q(0, 0, 1));
        // that segment shows up in the pair intersection with strip 4
        StripPairResult r14 = strip_pair_intersection(strips[0], strips[3]);
        bool found = false;
        for (const FacePairIntersection& s : r14.segments)
            if (s.seg == mid) {
                found = true;
                CHECK(s.kind_i == QuadKind::Trapezoid);
                CHECK(s.kind_j == QuadKind::Parallelogram);
            }
        CHECK(found);
    }

    SUBCASE("across all pairs: two cube edges each, plus short vertex-anchored contacts") {
        std::set<std::pair<Vec3, Vec3>> segs;
        int q_total = 0;
        auto on_lattice = [](const Vec3& p) {
            for (int c = 0; c < 3; ++c)
                if (p[c] != Rational(1, 2) && p[c] != Rational(5, 2)) return false;
            return true;
        };
        auto integral = [](const Vec3& p) {
            return p.x.is_integer() && p.y.is_integer() && p.z.is_integer();
        };
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                StripPairResult r = strip_pair_intersection(strips[i], strips[j]);
                CHECK(r.overlaps.empty());
                int q_here = 0, leg_reports = 0, crossings = 0;
                for (const FacePairIntersection& s : r.segments) {
                    if (s.on_cube_q) {
                        ++q_here;
                        ++q_total;
                        CHECK(s.kind_i != s.kind_j);  // one trapezoid, one parallelogram
                        segs.insert(s.seg.sorted());
                        CHECK(on_lattice(s.seg.a));
                        CHECK(on_lattice(s.seg.b));
                    } else {
                        // half-leg contacts: from a cube vertex out to an
                        // integer boundary point, squared length 3/4
                        CHECK(s.seg.length_squared() == Rational(3, 4));
                        CHECK((on_lattice(s.seg.a) != on_lattice(s.seg.b)));
                        CHECK((integral(s.seg.a) != integral(s.seg.b)));
                        if (is_leg_contact(s.seg, strips[i], strips[j])) {
                            ++leg_reports;
                        } else {
                            ++crossings;
                            // transversal crossings happen between trapezoids
                            CHECK(s.kind_i == QuadKind::Trapezoid);
                            CHECK(s.kind_j == QuadKind::Trapezoid);
                        }
                    }
                }
                CHECK(q_here == 2);
                CHECK(leg_reports == 8);  // 4 half-legs, each seen from both adjacent faces
                CHECK(crossings == 4);
            }
        CHECK(q_total == 12);
        CHECK(segs.size() == 12);
    }
}

TEST_CASE("cube bicoloring: derived truth and comparison with print") {
    CubeQ cq = derive_cube_bicoloring();
    REQUIRE(cq.edges.size() == 12);

    // frozen geometric truth (trapezoid, parallelogram owners per edge)
    std::map<std::pair<Vec3, Vec3>, std::pair<int, int>> want = {
        {{q(0, 0, 0), q(1, 0, 0)}, {2, 3}}, {{q(0, 1, 0), q(1, 1, 0)}, {4, 1}},
        {{q(0, 0, 1), q(1, 0, 1)}, {1, 4}}, {{q(0, 1, 1), q(1, 1, 1)}, {3, 2}},
        {{q(0, 0, 0), q(0, 1, 0)}, {3, 4}}, {{q(1, 0, 0), q(1, 1, 0)}, {1, 2}},
        {{q(0, 0, 1), q(0, 1, 1)}, {2, 1}}, {{q(1, 0, 1), q(1, 1, 1)}, {4, 3}},
        {{q(0, 0, 0), q(0, 0, 1)}, {4, 2}}, {{q(1, 0, 0), q(1, 0, 1)}, {3, 1}},
        {{q(0, 1, 0), q(0, 1, 1)}, {1, 3}}, {{q(1, 1, 0), q(1, 1, 1)}, {2, 4}},
    };
    for (const CubeQEdge& e : cq.edges) {
        auto it = want.find(e.seg.sorted());
        REQUIRE(it != want.end());
        CHECK(e.trapezoid_color == it->second.first);
        CHECK(e.parallelogram_color == it->second.second);
    }

    // invariants: 3 edges per color per role; color-i trapezoid edges are
    // mutually orthogonal and disjoint
    std::map<int, std::vector<Segment3>> trap_edges;
    std::map<int, int> par_count;
    for (const CubeQEdge& e : cq.edges) {
        CHECK(e.trapezoid_color != e.parallelogram_color);
        trap_edges[e.trapezoid_color].push_back(e.seg);
        ++par_count[e.parallelogram_color];
    }
    for (int c = 1; c <= 4; ++c) {
        REQUIRE(trap_edges[c].size() == 3);
        CHECK(par_count[c] == 3);
        std::set<int> axes;
        for (const Segment3& s : trap_edges[c]) axes.insert(s.axis());
        CHECK(axes.size() == 3);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                CHECK(segment_intersection(trap_edges[c][i], trap_edges[c][j]).kind ==
                      SegmentIntersection::Kind::Empty);
    }

    // print comparison: 4 exact matches, 2 under the swapped reading
    BicoloringComparison cmp = compare_bicoloring_with_print(cq);
    CHECK(cmp.direct_matches == 4);
    CHECK(cmp.swapped_matches == 2);
    CHECK(cmp.diffs.size() == 8);
}

TEST_CASE("isometries acting on whole strips") {
    std::array<StripFaceSet, 4> strips = build_all_strips();

    // the central inversion does not map strips to strips
    CHECK(!induced_strip_permutation(iso::central_inversion(), strips).has_value());
    // nor does a coordinate-plane mirror
    CHECK(!induced_strip_permutation(iso::coordinate_reflection_z(), strips).has_value());

    // half-turns realize the published double transpositions; R_h^2 is the
    // i -> 5-i pairing
    auto pd = induced_strip_permutation(iso::half_turn_depth(), strips);
    REQUIRE(pd.has_value());
    CHECK(*pd == std::array<int, 5>{0, 3, 4, 1, 2});
    auto pv = induced_strip_permutation(iso::half_turn_vertical(), strips);
    REQUIRE(pv.has_value());
    CHECK(*pv == std::array<int, 5>{0, 2, 1, 4, 3});
    auto ph = induced_strip_permutation(iso::half_turn_horizontal(), strips);
    REQUIRE(ph.has_value());
    CHECK(*ph == std::array<int, 5>{0, 4, 3, 2, 1});

    // quarter turns preserve the compound too, as 4-cycles
    auto qd = induced_strip_permutation(iso::quarter_turn_depth(), strips);
    REQUIRE(qd.has_value());
    CHECK(*qd == std::array<int, 5>{0, 4, 1, 2, 3});
}
