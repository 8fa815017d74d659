// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance here is exact; no epsilons anywhere.

#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "mobius4/export.hpp"

using namespace mobius4;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, bool pass, const std::string& note = "") {
    std::cout << (pass ? "PASS" : "FAIL") << "  " << number << ". " << name;
    if (!note.empty()) std::cout << " [" << note << "]";
    std::cout << "\n";
    if (!pass) ++failures;
}

bool verdict_is(const claims::Ledger& ledger, const std::string& id, claims::Verdict v) {
    return ledger.find(id).verdict == v;
}

}  // namespace

int main() {
    const claims::Context& ctx = claims::Context::get();
    claims::Ledger ledger = claims::run_all();

    // 1. curve suite
    {
        bool ok = true;
        for (int i = 0; i < 4; ++i) {
            const curves::PLCycle& c = ctx.curve[i].cycle;
            if (c.segments.size() != 12 || c.total_length() != Rational(24)) ok = false;
            for (const Segment3& s : c.segments)
                if (s.axis() < 0) ok = false;
        }
        ok = ok && ctx.curve[1].diffs.size() == 2;  // table 2: exactly two amended rows
        ok = ok && ctx.curve[0].diffs.empty() && ctx.curve[2].diffs.empty() &&
             ctx.curve[3].diffs.empty();
        ok = ok && verdict_is(ledger, "EQ2.curve", claims::Verdict::Corrected);
        criterion(1, "curves: 12 axis segments, closed, length 24, table 2 corrected twice", ok);
    }

    // 2. strip topology
    {
        bool ok = true;
        for (int i = 0; i < 4; ++i) {
            strips::StripMesh m = strips::build_mesh(ctx.strip[i]);
            strips::MeshReport r = strips::analyze_mesh(m);
            if (r.euler_characteristic != 0 || r.orientable || r.boundary_components != 1) ok = false;
            if (!strips::boundary_matches_curve(m, ctx.curve[i].cycle)) ok = false;
        }
        criterion(2, "strips: chi = 0, non-orientable, one boundary equal to the curve", ok);
    }

    // 3. area
    {
        bool ok = true;
        for (const strips::StripFaceSet& f : ctx.strip) {
            for (const PlanarQuad& q : f.faces)
                if (quad_area_squared(q) != Rational(8)) ok = false;
            strips::ExactRadical a = strips::strip_area(f);
            if (!(a.multiplier == Rational(12) && a.radicand == 2)) ok = false;
        }
        criterion(3, "area: every strip is exactly 12*sqrt(2), six faces of squared area 8", ok);
    }

    // 4. knot suite
    {
        bool ok = true;
        knots::LaurentPolynomial shared;
        bool first = true;
        for (int i = 0; i < 4; ++i) {
            knots::Polyline3 c = knots::polyline_of(ctx.curve[i].cycle);
            std::vector<Vec3> dirs = knots::generic_directions({c}, 3);
            if (dirs.size() != 3) ok = false;
            for (const Vec3& dir : dirs) {
                knots::KnotDiagram d;
                if (knots::try_project({c}, dir, d).has_value()) { ok = false; continue; }
                if (knots::knot_determinant(d) != 3) ok = false;
                knots::LaurentPolynomial x = knots::kauffman_bracket(d);
                if (x.palindromic()) ok = false;
                if (first) { shared = x; first = false; }
                else if (!(x == shared)) ok = false;
            }
        }
        knots::Polyline3 mirrored;
        for (const Vec3& p : knots::polyline_of(ctx.curve[0].cycle))
            mirrored.push_back({p.x, p.y, Rational(3) - p.z});
        if (!(knots::kauffman_bracket(knots::generic_projection({mirrored})) ==
              shared.negate_exponents()))
            ok = false;
        criterion(4, "knots: determinant 3, one chiral polynomial, mirror negates exponents",
                  ok, "3 directions per curve");
    }

    // 5. intersection suite
    {
        bool ok = true;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (!curves::curve_pairwise_intersection(ctx.curve[i].cycle, ctx.curve[j].cycle)
                         .dimension_zero())
                    ok = false;
        std::set<std::pair<Vec3, Vec3>> q_edges;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                strips::StripPairResult pr =
                    strips::strip_pair_intersection(ctx.strip[i], ctx.strip[j]);
                if (!pr.overlaps.empty()) ok = false;
                for (const strips::FacePairIntersection& s : pr.segments)
                    if (s.on_cube_q) {
                        q_edges.insert(s.seg.sorted());
                        for (const Vec3& p : {s.seg.a, s.seg.b})
                            for (int c = 0; c < 3; ++c)
                                if (p[c] != Rational(1, 2) && p[c] != Rational(5, 2)) ok = false;
                    }
            }
        if (q_edges.size() != 12) ok = false;
        strips::BicoloringComparison cmp = strips::compare_bicoloring_with_print(ctx.cube_q);
        if (cmp.diffs.size() != 8 || cmp.direct_matches != 4) ok = false;
        ok = ok && verdict_is(ledger, "EQ5.bicoloring", claims::Verdict::Corrected);
        criterion(5, "intersections: curves dimension 0; 12 cube edges; bicolor diffs ledgered", ok,
                  "8 of 12 printed labels amended");
    }

    // 6. symmetry suite
    {
        sym::IsometryGroup g = ctx.compound_group;
        sym::IsometryGroup gt = sym::stabilizer_triangle_compound(ctx.triangle);
        bool ok = g == gt && g.order() == 24;
        for (int i = 0; i < 4; ++i)
            if (sym::stabilizer_triangle(ctx.triangle[i]).order() != 6) ok = false;
        ok = ok && verdict_is(ledger, "OBS3.group", claims::Verdict::Refuted);
        ok = ok && verdict_is(ledger, "EQ7.permutations", claims::Verdict::Confirmed);
        ok = ok && verdict_is(ledger, "EQ14.rotations", claims::Verdict::Confirmed);
        ok = ok && verdict_is(ledger, "REFL.identities", claims::Verdict::Confirmed);
        ok = ok && verdict_is(ledger, "COR5.intersections", claims::Verdict::Refuted);
        criterion(6, "symmetry: stabilizers computed, printed group claims adjudicated", ok,
                  "computed |G| = 24, |G_i| = 6; published order 8 and intersection orders refuted");
    }

    // 7. polylink suite
    {
        bool ok = verdict_is(ledger, "EQ8.vertices", claims::Verdict::Confirmed) &&
                  verdict_is(ledger, "EQ9.inner", claims::Verdict::Corrected) &&
                  verdict_is(ledger, "EQ10.midpoints", claims::Verdict::Confirmed) &&
                  verdict_is(ledger, "EQ11.correspondence", claims::Verdict::Confirmed) &&
                  verdict_is(ledger, "EQ12.sixcycles", claims::Verdict::Corrected);
        poly::CuboctahedronReport c = poly::cuboctahedron_check();
        ok = ok && c.ok() && c.circumradius_squared == Rational(9, 2);
        criterion(7, "polylink: tables reproduced exactly, cuboctahedron verified, diffs ledgered",
                  ok, "decimal token normalized; 6-cycle lines T2, T4 amended one token each");
    }

    // 8. factorization suite
    {
        bool ok = ctx.rainbow.f.proper() && cube4::is_q2_rainbow(ctx.rainbow.f);
        cube4::TypeCensus tc = cube4::classify_four_cycles(ctx.rainbow.f);
        ok = ok && tc.plane_rule_holds && tc.counts.size() == 3;
        for (const auto& [tag, n] : tc.counts)
            if (n != 8) ok = false;
        for (int c1 = 1; c1 <= 4 && ok; ++c1)
            for (int c2 = c1 + 1; c2 <= 4; ++c2) {
                std::vector<std::vector<int>> cycles = cube4::two_factor_union(ctx.rainbow.f, c1, c2);
                if (cycles.size() != 2) ok = false;
                for (const std::vector<int>& c : cycles)
                    if (!cube4::antipodal_subpath_property(c)) ok = false;
            }
        std::vector<cube4::OneFactorization> all = cube4::enumerate_rainbow_factorizations();
        bool contains = false;
        for (const cube4::OneFactorization& f : all)
            if (f == ctx.rainbow.f) contains = true;
        ok = ok && !all.empty() && contains;
        criterion(8, "factorizations: rainbow 24/24, counts 8/8/8, unions antipodal, enumeration",
                  ok, std::to_string(all.size()) + " rainbow factorizations, canonical included");
    }

    // 9. quotient suite
    {
        cube4::QuotientGraph g = cube4::antipodal_quotient();
        bool ok = g.is_k44() && g.part_even == std::array<int, 4>{0, 3, 5, 6} &&
                  g.part_odd == std::array<int, 4>{1, 2, 4, 7};
        ok = ok && ctx.projection.orthogonal && !ctx.projection.fstar_rainbow;
        cube4::EulerSquare sq = cube4::euler_square(ctx.projection.fstar, ctx.projection.pstar);
        ok = ok && sq.graeco_latin();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (sq.cell[i][j] != cube4::printed_euler_square()[i][j]) ok = false;
        criterion(9, "quotient: K4,4 parts, orthogonality 16x1, printed Euler square, F* not rainbow",
                  ok);
    }

    // 10. counting suite
    {
        cube4::AutomorphismCounts ac = cube4::automorphism_counts(ctx.rainbow.f);
        bool ok = ac.q4_constructed == 384 && ac.q4_backtracked == 384 &&
                  ac.induced_on_quotient == 192 && ac.k44_full == 1152;
        // the published 16 is adjudicated: two independent routes compute 8
        ok = ok && ac.color_preserving == 8 &&
             verdict_is(ledger, "AUT.colorfix", claims::Verdict::Refuted);
        criterion(10, "counting: 384 automorphisms, induced 192, full K4,4 group 1152", ok,
                  "color-preserving subgroup computed as 8 by two routes; published 16 refuted");
    }

    // 11. embedding suite
    {
        surf::FaceComplex fc =
            surf::type_pair_complex(ctx.rainbow.f, cube4::tag_1234(), cube4::tag_1324());
        surf::SurfaceReport rep = surf::verify_surface(fc);
        bool ok = rep.is_torus();
        std::vector<surf::ToroidalSubgraph> twelve = surf::twelve_toroidal_subgraphs(ctx.rainbow.f);
        ok = ok && twelve.size() == 12;
        for (const surf::ToroidalSubgraph& s : twelve) {
            if (!s.report.is_torus()) ok = false;
            int quads = 0, octs = 0;
            for (const std::vector<int>& face : s.complex.faces)
                (face.size() == 4 ? quads : octs)++;
            if (quads != 4 || octs != 4) ok = false;
        }
        for (auto [a, b] : {std::pair{cube4::tag_1234(), cube4::tag_1324()},
                            std::pair{cube4::tag_1234(), cube4::tag_1243()},
                            std::pair{cube4::tag_1324(), cube4::tag_1243()}}) {
            surf::FaceComplex pc = surf::type_pair_complex(ctx.rainbow.f, a, b);
            surf::DualComplex d = surf::embedded_dual(pc);
            if (!surf::dual_coloring_is_one_factorization(d) || !surf::dual_four_cycles_rainbow(d))
                ok = false;
            if (!surf::dual_of_dual_is_primal(pc)) ok = false;
        }
        criterion(11, "embeddings: pair complex torus, 12 subgraph tori 4+4 faces, rainbow duals",
                  ok);
    }

    // 12. determinism
    {
        std::string a = io::ledger_json(claims::run_all());
        std::string b = io::ledger_json(claims::run_all());
        criterion(12, "determinism: consecutive json ledgers byte-identical", a == b,
                  std::to_string(a.size()) + " bytes");
    }

    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES: " + std::to_string(failures))
              << "\n";
    return failures == 0 ? 0 : 1;
}
