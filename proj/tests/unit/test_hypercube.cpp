#include "doctest.h"

#include <set>

#include "mobius4/hypercube.hpp"

using namespace mobius4;
using namespace mobius4::cube4;

TEST_CASE("q4 basics") {
    CHECK(q4_edges().size() == 32);
    std::set<int> nb;
    for (int n : q4_neighbors(0)) nb.insert(n);
    CHECK(nb == std::set<int>{1, 2, 4, 8});
    CHECK(edge_direction(edge(3, 11)) == 4);
    CHECK(edge_direction(edge(0, 1)) == 1);
    CHECK(edge_direction(edge(3, 5)) == 0);  // not an edge
    CHECK(q4_four_cycles().size() == 24);
}

TEST_CASE("parallel factorization") {
    OneFactorization p = parallel_factorization();
    CHECK(p.proper());
    CHECK(p.at(0, 1) == 1);
    for (int c = 1; c <= 4; ++c) CHECK(p.color_class(c).size() == 8);
    // every 4-cycle sees exactly two colors under P
    for (const FourCycle& c : q4_four_cycles()) {
        std::set<int> colors;
        for (const Edge& e : c.edges()) colors.insert(p.color.at(e));
        CHECK(colors.size() == 2);
    }
    CHECK(!is_q2_rainbow(p));
}

TEST_CASE("the bicoloring forces the rainbow factorization") {
    RainbowBuild rb = canonical_rainbow_factorization();
    CHECK(rb.first_color_inner);  // trapezoid colors inside, parallelogram outside
    CHECK(rb.f.proper());
    CHECK(is_q2_rainbow(rb.f));
    for (int c = 1; c <= 4; ++c) CHECK(rb.f.color_class(c).size() == 8);
    // spot-frozen corner values
    CHECK(rb.f.at(0, 1) == 2);
    CHECK(rb.f.at(0, 2) == 3);
    CHECK(rb.f.at(0, 4) == 4);
    CHECK(rb.f.at(0, 8) == 1);  // forced: the one color missing at vertex 0
    CHECK(rb.f != parallel_factorization());
}

TEST_CASE("color type tags are cyclic classes") {
    CHECK(ColorTypeTag::of({2, 1, 4, 3}) == tag_1234());
    CHECK(ColorTypeTag::of({4, 3, 2, 1}) == tag_1234());  // reversal
    CHECK(ColorTypeTag::of({3, 2, 4, 1}) == tag_1324());
    CHECK(ColorTypeTag::of({3, 1, 2, 4}) == tag_1243());
    CHECK(tag_1234().str() == "(1234)");
    CHECK(!(tag_1234() == tag_1324()));
    CHECK(!(tag_1324() == tag_1243()));
}

TEST_CASE("type census: eight cycles of each tag, plane rule exact") {
    TypeCensus tc = classify_four_cycles(canonical_rainbow_factorization().f);
    CHECK(tc.all_rainbow);
    CHECK(tc.plane_rule_holds);
    REQUIRE(tc.counts.size() == 3);
    CHECK(tc.counts.at(tag_1234()) == 8);
    CHECK(tc.counts.at(tag_1324()) == 8);
    CHECK(tc.counts.at(tag_1243()) == 8);
}

TEST_CASE("enumeration finds all 48 rainbow factorizations") {
    std::vector<OneFactorization> all = enumerate_rainbow_factorizations();
    CHECK(all.size() == 48);
    OneFactorization f = canonical_rainbow_factorization().f;
    bool contains = false;
    for (const OneFactorization& g : all) {
        if (g == f) contains = true;
        CHECK(is_q2_rainbow(g));
        for (int c = 1; c <= 4; ++c) CHECK(g.color_class(c).size() == 8);
    }
    CHECK(contains);
    // deterministic: a second run gives the identical list
    std::vector<OneFactorization> again = enumerate_rainbow_factorizations();
    CHECK(all.size() == again.size());
    for (size_t i = 0; i < all.size(); ++i) CHECK(all[i] == again[i]);
}

TEST_CASE("two-factor unions") {
    OneFactorization f = canonical_rainbow_factorization().f;
    for (int c1 = 1; c1 <= 4; ++c1)
        for (int c2 = c1 + 1; c2 <= 4; ++c2) {
            std::vector<std::vector<int>> cycles = two_factor_union(f, c1, c2);
            REQUIRE(cycles.size() == 2);
            for (const std::vector<int>& c : cycles) {
                CHECK(c.size() == 8);
                CHECK(antipodal_subpath_property(c));
            }
        }
    // the parallel factorization gives four squares instead
    std::vector<std::vector<int>> p12 = two_factor_union(parallel_factorization(), 1, 2);
    CHECK(p12.size() == 4);
    for (const std::vector<int>& c : p12) CHECK(c.size() == 4);
}

TEST_CASE("per-family color/position tables are latin") {
    std::vector<FamilyCheck> fams = rainbow_family_checks(canonical_rainbow_factorization().f);
    REQUIRE(fams.size() == 6);
    for (const FamilyCheck& fc : fams) CHECK(fc.latin);
}

TEST_CASE("doubled-type two-factors exist for all three tags") {
    OneFactorization f = canonical_rainbow_factorization().f;
    for (const ColorTypeTag& t : {tag_1234(), tag_1324(), tag_1243()}) {
        DoubledTwoFactor d = doubled_two_factor(f, t);
        REQUIRE(d.found);
        CHECK(d.cycle_a.size() == 8);
        CHECK(d.cycle_b.size() == 8);
        CHECK(antipodal_subpath_property(d.cycle_a));
        CHECK(antipodal_subpath_property(d.cycle_b));
        std::set<int> all(d.cycle_a.begin(), d.cycle_a.end());
        all.insert(d.cycle_b.begin(), d.cycle_b.end());
        CHECK(all.size() == 16);
    }
}

TEST_CASE("antipodal quotient is K4,4 with the stated parts") {
    QuotientGraph g = antipodal_quotient();
    CHECK(g.is_k44());
    CHECK(g.part_even == std::array<int, 4>{0, 3, 5, 6});
    CHECK(g.part_odd == std::array<int, 4>{1, 2, 4, 7});
    CHECK(g.edges.size() == 16);
    for (const auto& [e, n] : g.preimage_count) CHECK(n == 2);
    CHECK(complement_is_p_color_automorphism());
}

TEST_CASE("quotient factorizations: orthogonality and the euler square") {
    ProjectionResult pr =
        project_factorizations(canonical_rainbow_factorization().f, parallel_factorization());
    CHECK(pr.antipode_compatible);
    CHECK(pr.orthogonal);
    CHECK(!pr.fstar_rainbow);  // F* fails the rainbow property downstairs
    QuotientGraph g = antipodal_quotient();
    CHECK(pr.fstar.proper(g));
    CHECK(pr.pstar.proper(g));

    EulerSquare sq = euler_square(pr.fstar, pr.pstar);
    CHECK(sq.graeco_latin());
    CHECK(sq.rows == std::array<int, 4>{0, 3, 5, 6});
    CHECK(sq.cols == std::array<int, 4>{1, 2, 4, 7});
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(sq.cell[i][j] == printed_euler_square()[i][j]);
    CHECK(sq.cell[0][0] == std::pair<int, int>{1, 2});  // cell (0,1)
    CHECK(sq.cell[3][3] == std::pair<int, int>{1, 3});  // cell (6,7)
}

TEST_CASE("automorphism counts") {
    AutomorphismCounts ac = automorphism_counts(canonical_rainbow_factorization().f);
    CHECK(ac.q4_constructed == 384);
    CHECK(ac.q4_backtracked == 384);  // independent route
    CHECK(ac.induced_on_quotient == 192);
    CHECK(ac.k44_full == 1152);
    // the published 2^4 = 16 is wrong: the coloring stabilizer has order 8
    CHECK(ac.color_preserving == 8);
}

TEST_CASE("color-preserving subgroup via the transport oracle") {
    // a color-preserving automorphism is fixed by the image of vertex 0:
    // extend by following colors and count the images that work
    OneFactorization f = canonical_rainbow_factorization().f;
    std::vector<std::array<int, 16>> maps;
    for (int target = 0; target < 16; ++target) {
        std::array<int, 16> img;
        img.fill(-1);
        img[0] = target;
        std::vector<int> queue = {0};
        bool ok = true;
        while (!queue.empty() && ok) {
            int v = queue.back();
            queue.pop_back();
            for (int c = 1; c <= 4; ++c) {
                int w = f.step(v, c), wi = f.step(img[v], c);
                if (img[w] == -1) {
                    img[w] = wi;
                    queue.push_back(w);
                } else if (img[w] != wi) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            std::set<int> range(img.begin(), img.end());
            ok = range.size() == 16;
        }
        if (ok)
            for (const Edge& e : q4_edges())
                if (f.color.at(e) != f.color.at(edge(img[e.first], img[e.second]))) ok = false;
        if (ok) maps.push_back(img);
    }
    CHECK(maps.size() == 8);
    // closure
    for (const auto& a : maps)
        for (const auto& b : maps) {
            std::array<int, 16> ab{};
            for (int v = 0; v < 16; ++v) ab[v] = a[b[v]];
            CHECK(std::find(maps.begin(), maps.end(), ab) != maps.end());
        }
    // complementation is one of them
    std::array<int, 16> comp{};
    for (int v = 0; v < 16; ++v) comp[v] = 15 - v;
    CHECK(std::find(maps.begin(), maps.end(), comp) != maps.end());
}
