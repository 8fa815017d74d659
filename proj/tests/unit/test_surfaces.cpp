#include "doctest.h"

#include <set>

#include "mobius4/surfaces.hpp"

using namespace mobius4;
using namespace mobius4::cube4;
using namespace mobius4::surf;

TEST_CASE("type-pair complexes are tori; every pair of tags works") {
    OneFactorization f = canonical_rainbow_factorization().f;
    for (auto [a, b] : {std::pair{tag_1234(), tag_1324()}, std::pair{tag_1234(), tag_1243()},
                        std::pair{tag_1324(), tag_1243()}}) {
        FaceComplex fc = type_pair_complex(f, a, b);
        CHECK(fc.faces.size() == 16);
        SurfaceReport r = verify_surface(fc);
        CHECK(r.vertex_count == 16);
        CHECK(r.edge_count == 32);
        CHECK(r.euler_characteristic == 0);
        CHECK(r.closed);
        CHECK(r.links_single);
        CHECK(r.orientable);
        CHECK(r.is_torus());
        REQUIRE(r.genus.has_value());
        CHECK(*r.genus == 1);
    }
}

TEST_CASE("overfull and degenerate complexes classify correctly") {
    // all 24 four-cycles: every edge lies in three faces
    FaceComplex overfull;
    for (const FourCycle& c : q4_four_cycles())
        overfull.faces.push_back(std::vector<int>(c.walk.begin(), c.walk.end()));
    SurfaceReport r = verify_surface(overfull);
    CHECK(!r.closed);
    CHECK(r.failure == "edge in 3 faces");

    // one square glued to itself: a sphere
    FaceComplex sphere;
    sphere.faces = {{0, 1, 3, 2}, {0, 2, 3, 1}};
    SurfaceReport s = verify_surface(sphere);
    CHECK(s.closed);
    CHECK(s.links_single);
    CHECK(s.orientable);
    CHECK(s.euler_characteristic == 2);
    CHECK(s.is_sphere());
}

TEST_CASE("the twelve edge-deleted toroidal subgraphs") {
    OneFactorization f = canonical_rainbow_factorization().f;
    std::vector<ToroidalSubgraph> twelve = twelve_toroidal_subgraphs(f);
    REQUIRE(twelve.size() == 12);

    std::set<std::set<Edge>> deleted_sets;
    std::map<std::pair<std::string, std::string>, int> signature_lines;
    for (const ToroidalSubgraph& s : twelve) {
        CHECK(s.deleted_edges.size() == 8);
        deleted_sets.insert(s.deleted_edges);
        CHECK(s.report.is_torus());
        CHECK(s.report.vertex_count == 16);
        CHECK(s.report.edge_count == 24);
        CHECK(s.report.face_count == 8);
        CHECK(s.report.euler_characteristic == 0);

        // census: four tag quads, two doubled 8-cycles, two alternating
        REQUIRE(s.face_types.size() == 8);
        int quads = 0, doubled = 0, alternating = 0;
        std::string doubled_type, alt_type;
        for (const std::string& t : s.face_types) {
            if (t == s.tag.str()) ++quads;
            else if (t == s.tag.str() + "^2") { ++doubled; doubled_type = t; }
            else { ++alternating; alt_type = t; }
        }
        CHECK(quads == 4);
        CHECK(doubled == 2);
        CHECK(alternating == 2);
        // the alternating faces carry the surviving color pair
        std::pair<int, int> survivors = s.deleted_pair;  // placeholder, replaced below
        (void)survivors;
        signature_lines[{s.tag.str(), alt_type}]++;
    }
    CHECK(deleted_sets.size() == 12);

    // the published six signature lines, each realized twice
    std::map<std::pair<std::string, std::string>, int> expected = {
        {{"(1234)", "(13)^4"}, 2}, {{"(1234)", "(24)^4"}, 2},
        {{"(1243)", "(14)^4"}, 2}, {{"(1243)", "(23)^4"}, 2},
        {{"(1324)", "(12)^4"}, 2}, {{"(1324)", "(34)^4"}, 2},
    };
    CHECK(signature_lines == expected);
}

TEST_CASE("duals of the type-pair tori are rainbow one-factorized") {
    OneFactorization f = canonical_rainbow_factorization().f;
    for (auto [a, b] : {std::pair{tag_1234(), tag_1324()}, std::pair{tag_1234(), tag_1243()},
                        std::pair{tag_1324(), tag_1243()}}) {
        FaceComplex fc = type_pair_complex(f, a, b);
        DualComplex d = embedded_dual(fc);
        CHECK(d.edges.size() == 32);          // dual edge count equals primal
        CHECK(d.complex.faces.size() == 16);  // one dual face per primal vertex
        CHECK(d.simple);
        CHECK(dual_coloring_is_one_factorization(d));
        CHECK(dual_four_cycles_rainbow(d));   // the strong reading holds upstairs
        CHECK(dual_of_dual_is_primal(fc));
    }
}

TEST_CASE("duals of the twelve subgraph tori keep the torus counts") {
    // these duals are multigraphs (a 4-face and an 8-face can share two
    // edges), so walk-level re-dualization does not apply; the dual counts
    // still certify an euler-characteristic-zero surface
    OneFactorization f = canonical_rainbow_factorization().f;
    std::vector<ToroidalSubgraph> twelve = twelve_toroidal_subgraphs(f);
    for (const ToroidalSubgraph& s : twelve) {
        DualComplex d = embedded_dual(s.complex);
        CHECK(d.edges.size() == 24);          // one dual edge per primal edge
        CHECK(d.complex.faces.size() == 16);  // one dual face per primal vertex
        CHECK(!d.simple);
        std::set<int> dual_vertices;
        for (const auto& [a, b, c] : d.edges) {
            dual_vertices.insert(a);
            dual_vertices.insert(b);
        }
        CHECK(dual_vertices.size() == 8);  // one dual vertex per primal face
        // chi* = F - E + V = 8 - 24 + 16
        CHECK((int)dual_vertices.size() - (int)d.edges.size() + (int)d.complex.faces.size() == 0);
        for (const std::vector<int>& df : d.complex.faces) CHECK(df.size() == 3);
    }
}

TEST_CASE("k44 type complexes: discovered toroidal completions") {
    OneFactorization f = canonical_rainbow_factorization().f;
    ProjectionResult pr = project_factorizations(f, parallel_factorization());
    int reports = 0;
    for (const ColorTypeTag& tag : {tag_1234(), tag_1243(), tag_1324()}) {
        K44TypeComplex kc = k44_type_complex(f, pr.fstar, tag);
        ++reports;
        REQUIRE(kc.found);
        CHECK(kc.projected.size() == 4);  // eight cycles collapse in pairs
        CHECK(kc.report.is_torus());
        CHECK(kc.report.vertex_count == 8);
        CHECK(kc.report.edge_count == 16);
        CHECK(kc.report.face_count == 8);
        CHECK(kc.completion_all_rainbow);

        DualComplex d = embedded_dual(kc.complex);
        CHECK(dual_coloring_is_one_factorization(d));
        CHECK(dual_of_dual_is_primal(kc.complex));
    }
    CHECK(reports == 3);
}

TEST_CASE("k44 completion census: no completion has a fully rainbow dual") {
    OneFactorization f = canonical_rainbow_factorization().f;
    ProjectionResult pr = project_factorizations(f, parallel_factorization());
    for (const ColorTypeTag& tag : {tag_1234(), tag_1243(), tag_1324()}) {
        K44CompletionCensus census = k44_completion_census(f, pr.fstar, tag);
        CHECK(census.completions == 45);
        CHECK(census.tori == 4);
        CHECK(census.strongly_self_dual == 0);
    }
}

TEST_CASE("walk color signatures") {
    std::map<std::pair<int, int>, int> color = {
        {{0, 1}, 1}, {{1, 2}, 2}, {{2, 3}, 3}, {{0, 3}, 4},
    };
    CHECK(signature_str(walk_color_signature({0, 1, 2, 3}, color)) == "(1234)");
    std::map<std::pair<int, int>, int> alt = {
        {{0, 1}, 2}, {{1, 2}, 4}, {{2, 3}, 2}, {{3, 4}, 4},
        {{4, 5}, 2}, {{5, 6}, 4}, {{6, 7}, 2}, {{0, 7}, 4},
    };
    CHECK(signature_str(walk_color_signature({0, 1, 2, 3, 4, 5, 6, 7}, alt)) == "(24)^4");
}
