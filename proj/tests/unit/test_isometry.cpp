#include "doctest.h"

#include <random>
#include <set>

#include "mobius4/isometry.hpp"

using namespace mobius4;

TEST_CASE("the 48 cube isometries form a group") {
    const std::vector<CubeIsometry>& all = all_cube_isometries();
    REQUIRE(all.size() == 48);

    std::set<CubeIsometry> as_set(all.begin(), all.end());
    CHECK(as_set.size() == 48);
    CHECK(as_set.count(CubeIsometry::identity()) == 1);

    for (const CubeIsometry& g : all) {
        CHECK(g.valid());
        CHECK((g.det() == 1 || g.det() == -1));
        CHECK(as_set.count(g.inverse()) == 1);
        CHECK(g.compose(g.inverse()) == CubeIsometry::identity());
    }
    // closure, exhaustively
    for (const CubeIsometry& g : all)
        for (const CubeIsometry& h : all) CHECK(as_set.count(g.compose(h)) == 1);
}

TEST_CASE("named isometries act as in the half-turn table") {
    CHECK(iso::central_inversion().apply(pt(0, 0, 0)) == pt(3, 3, 3));
    CHECK(iso::half_turn_depth().apply(pt(0, 0, 0)) == pt(3, 3, 0));
    CHECK(CubeIsometry::identity().apply(Vec3(Rational(3, 2), Rational(0), Rational(3))) ==
          Vec3(Rational(3, 2), Rational(0), Rational(3)));

    // the three half-turns versus their printed corner transpositions
    for (int l = 0; l < 8; ++l) {
        Vec3 c = CubeIsometry::corner(l);
        CHECK(iso::half_turn_depth().apply(c) == Vec3(Rational(3) - c.x, Rational(3) - c.y, c.z));
        CHECK(iso::half_turn_vertical().apply(c) == Vec3(Rational(3) - c.x, c.y, Rational(3) - c.z));
        CHECK(iso::half_turn_horizontal().apply(c) == Vec3(c.x, Rational(3) - c.y, Rational(3) - c.z));
    }

    CHECK(iso::quarter_turn_depth().apply(pt(1, 0, 3)) == pt(3, 1, 3));
    CHECK(iso::quarter_turn_depth().is_rotation());
    CHECK(iso::quarter_turn_vertical().is_rotation());
    CHECK(iso::quarter_turn_horizontal().is_rotation());
    CHECK(!iso::central_inversion().is_rotation());
    CHECK(!iso::coordinate_reflection_z().is_rotation());
}

TEST_CASE("isometries preserve exact squared distances") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(0, 12);
    for (int iter = 0; iter < 50; ++iter) {
        Vec3 p(Rational(num(rng), 4), Rational(num(rng), 4), Rational(num(rng), 4));
        Vec3 q(Rational(num(rng), 4), Rational(num(rng), 4), Rational(num(rng), 4));
        Rational d = length_squared(p - q);
        for (const CubeIsometry& g : all_cube_isometries())
            CHECK(length_squared(g.apply(p) - g.apply(q)) == d);
    }
}

TEST_CASE("corner permutations are permutations") {
    for (const CubeIsometry& g : all_cube_isometries()) {
        std::array<int, 8> perm = g.corner_permutation();
        std::set<int> seen(perm.begin(), perm.end());
        CHECK(seen.size() == 8);
    }
}

TEST_CASE("diagonal rotation pairs") {
    Vec3 a(Rational(1, 2), Rational(1, 2), Rational(1, 2));
    Vec3 b(Rational(5, 2), Rational(5, 2), Rational(5, 2));
    auto [r, rinv] = iso::diagonal_rotations(a, b);
    CHECK(r != rinv);
    CHECK((r.compose(r) == rinv || rinv.compose(rinv) == r));
    CHECK(r.compose(r).compose(r) == CubeIsometry::identity());
    // the axis is fixed pointwise
    CHECK(r.apply(a) == a);
    CHECK(r.apply(b) == b);
}
