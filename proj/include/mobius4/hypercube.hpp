#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mobius4/strips.hpp"

namespace mobius4::cube4 {

// Q4 on vertices 0..15; bit i-1 of the label is coordinate x_i. Edge
// direction is the index (1..4) of the flipped coordinate.
using Edge = std::pair<int, int>;  // u < v

inline Edge edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

inline int edge_direction(const Edge& e) {
    int x = e.first ^ e.second;
    if (x == 0 || (x & (x - 1)) != 0) return 0;  // not an edge
    int d = 1;
    while (!(x & 1)) { x >>= 1; ++d; }
    return d;
}

inline const std::vector<Edge>& q4_edges() {
    static const std::vector<Edge> edges = [] {
        std::vector<Edge> e;
        for (int u = 0; u < 16; ++u)
            for (int b = 0; b < 4; ++b)
                if (!(u >> b & 1)) e.push_back({u, u | (1 << b)});
        std::sort(e.begin(), e.end());
        return e;
    }();
    return edges;
}

inline std::vector<int> q4_neighbors(int v) {
    return {v ^ 1, v ^ 2, v ^ 4, v ^ 8};
}

// All 24 four-cycles, each as its vertex walk [a, b, c, d]; for the cycle
// in directions (d1 < d2) through base its walk is base, base^b1,
// base^b1^b2, base^b2.
struct FourCycle {
    std::array<int, 4> walk;
    int dir_lo = 0, dir_hi = 0;  // the two coordinate directions spanned

    std::array<Edge, 4> edges() const {
        return {edge(walk[0], walk[1]), edge(walk[1], walk[2]), edge(walk[2], walk[3]),
                edge(walk[3], walk[0])};
    }
};

inline const std::vector<FourCycle>& q4_four_cycles() {
    static const std::vector<FourCycle> cycles = [] {
        std::vector<FourCycle> out;
        for (int b1 = 0; b1 < 4; ++b1)
            for (int b2 = b1 + 1; b2 < 4; ++b2)
                for (int base = 0; base < 16; ++base) {
                    if ((base >> b1 & 1) || (base >> b2 & 1)) continue;
                    FourCycle c;
                    c.walk = {base, base ^ (1 << b1), base ^ (1 << b1) ^ (1 << b2), base ^ (1 << b2)};
                    c.dir_lo = b1 + 1;
                    c.dir_hi = b2 + 1;
                    out.push_back(c);
                }
        return out;
    }();
    return cycles;
}

struct OneFactorization {
    std::map<Edge, int> color;  // 1..4

    int at(int u, int v) const { return color.at(edge(u, v)); }

    bool proper() const {
        if (color.size() != 32) return false;
        for (int v = 0; v < 16; ++v) {
            std::set<int> seen;
            for (int n : q4_neighbors(v)) {
                auto it = color.find(edge(v, n));
                if (it == color.end()) return false;
                seen.insert(it->second);
            }
            if (seen != std::set<int>{1, 2, 3, 4}) return false;
        }
        return true;
    }

    std::vector<Edge> color_class(int c) const {
        std::vector<Edge> out;
        for (const auto& [e, col] : color)
            if (col == c) out.push_back(e);
        return out;
    }

    // v's partner along its unique color-c edge
    int step(int v, int c) const {
        for (int n : q4_neighbors(v))
            if (at(v, n) == c) return n;
        throw std::logic_error("no edge of that color at the vertex");
    }

    friend bool operator==(const OneFactorization& a, const OneFactorization& b) {
        return a.color == b.color;
    }
};

// P: every edge takes its coordinate direction as its color.
inline OneFactorization parallel_factorization() {
    OneFactorization p;
    for (const Edge& e : q4_edges()) p.color[e] = edge_direction(e);
    return p;
}

inline bool is_q2_rainbow(const OneFactorization& f) {
    for (const FourCycle& c : q4_four_cycles()) {
        std::set<int> colors;
        for (const Edge& e : c.edges()) colors.insert(f.color.at(e));
        if (colors.size() != 4) return false;
    }
    return true;
}

// --- the rainbow factorization from the cube bicoloring ---------------------

struct RainbowBuild {
    OneFactorization f;
    bool first_color_inner = true;  // which reading succeeded
};

namespace detail {

inline int q3_vertex_of(const Vec3& p) {
    int v = 0;
    for (int i = 0; i < 3; ++i) {
        if (p[i] == Rational(5, 2)) v |= 1 << i;
        else if (p[i] != Rational(1, 2)) throw std::invalid_argument("not a cube-Q corner: " + p.str());
    }
    return v;
}

inline std::optional<OneFactorization> force_from(const strips::CubeQ& q, bool first_inner) {
    OneFactorization f;
    for (const strips::CubeQEdge& e : q.edges) {
        int u = q3_vertex_of(e.seg.a), v = q3_vertex_of(e.seg.b);
        int first = e.trapezoid_color, second = e.parallelogram_color;
        int inner = first_inner ? first : second;
        int outer = first_inner ? second : first;
        f.color[edge(u, v)] = inner;
        f.color[edge(u + 8, v + 8)] = outer;
    }
    // the direction-4 edges take the one color missing at each endpoint
    for (int l = 0; l < 8; ++l) {
        std::set<int> inner_missing = {1, 2, 3, 4}, outer_missing = {1, 2, 3, 4};
        for (int b = 0; b < 3; ++b) {
            inner_missing.erase(f.color.at(edge(l, l ^ (1 << b))));
            outer_missing.erase(f.color.at(edge(l + 8, (l ^ (1 << b)) + 8)));
        }
        if (inner_missing.size() != 1 || inner_missing != outer_missing) return std::nullopt;
        f.color[edge(l, l + 8)] = *inner_missing.begin();
    }
    if (!f.proper() || !is_q2_rainbow(f)) return std::nullopt;
    return f;
}

}  // namespace detail

inline RainbowBuild rainbow_factorization_from_bicoloring(const strips::CubeQ& q) {
    if (auto f = detail::force_from(q, true)) return {*f, true};
    if (auto f = detail::force_from(q, false)) return {*f, false};
    throw std::runtime_error("neither bicoloring reading forces a rainbow factorization");
}

inline RainbowBuild canonical_rainbow_factorization() {
    return rainbow_factorization_from_bicoloring(strips::derive_cube_bicoloring());
}

// --- exhaustive enumeration --------------------------------------------------

// All proper 4-edge-colorings of Q4 whose 24 four-cycles are rainbow, by
// backtracking over edges in lexicographic order.
inline std::vector<OneFactorization> enumerate_rainbow_factorizations() {
    const std::vector<Edge>& edges = q4_edges();
    std::map<Edge, int> index;
    for (int i = 0; i < (int)edges.size(); ++i) index[edges[i]] = i;

    // cycles checked as soon as their last edge is colored
    std::vector<std::vector<const FourCycle*>> complete_at(edges.size());
    for (const FourCycle& c : q4_four_cycles()) {
        int last = 0;
        for (const Edge& e : c.edges()) last = std::max(last, index.at(e));
        complete_at[last].push_back(&c);
    }

    std::vector<int> assigned(edges.size(), 0);
    std::array<int, 16> vertex_mask{};  // bitmask of colors used at each vertex
    std::vector<OneFactorization> out;

    std::function<void(int)> rec = [&](int i) {
        if (i == (int)edges.size()) {
            OneFactorization f;
            for (int k = 0; k < (int)edges.size(); ++k) f.color[edges[k]] = assigned[k];
            out.push_back(f);
            return;
        }
        auto [u, v] = edges[i];
        for (int c = 1; c <= 4; ++c) {
            int bit = 1 << c;
            if ((vertex_mask[u] & bit) || (vertex_mask[v] & bit)) continue;
            assigned[i] = c;
            bool ok = true;
            for (const FourCycle* cyc : complete_at[i]) {
                std::set<int> colors;
                for (const Edge& e : cyc->edges()) colors.insert(assigned[index.at(e)]);
                if (colors.size() != 4) { ok = false; break; }
            }
            if (ok) {
                vertex_mask[u] |= bit;
                vertex_mask[v] |= bit;
                rec(i + 1);
                vertex_mask[u] &= ~bit;
                vertex_mask[v] &= ~bit;
            }
            assigned[i] = 0;
        }
    };
    rec(0);
    return out;
}

// --- color types -------------------------------------------------------------

// A cyclic color sequence up to rotation and reversal; the three rainbow
// classes are (1234), (1324) and (1243).
struct ColorTypeTag {
    std::array<int, 4> canon{};

    static ColorTypeTag of(std::array<int, 4> seq) {
        ColorTypeTag t;
        t.canon = {5, 5, 5, 5};
        for (int rev = 0; rev < 2; ++rev) {
            for (int r = 0; r < 4; ++r) {
                std::array<int, 4> v{};
                for (int k = 0; k < 4; ++k) v[k] = seq[(r + k) % 4];
                if (v < t.canon) t.canon = v;
            }
            std::reverse(seq.begin(), seq.end());
        }
        return t;
    }
    friend bool operator==(const ColorTypeTag& a, const ColorTypeTag& b) { return a.canon == b.canon; }
    friend bool operator<(const ColorTypeTag& a, const ColorTypeTag& b) { return a.canon < b.canon; }
    std::string str() const {
        std::string s = "(";
        for (int c : canon) s += std::to_string(c);
        return s + ")";
    }
};

inline ColorTypeTag tag_1234() { return ColorTypeTag::of({1, 2, 3, 4}); }
inline ColorTypeTag tag_1324() { return ColorTypeTag::of({1, 3, 2, 4}); }
inline ColorTypeTag tag_1243() { return ColorTypeTag::of({1, 2, 4, 3}); }

inline ColorTypeTag cycle_tag(const OneFactorization& f, const FourCycle& c) {
    std::array<int, 4> seq{};
    for (int k = 0; k < 4; ++k) seq[k] = f.at(c.walk[k], c.walk[(k + 1) % 4]);
    return ColorTypeTag::of(seq);
}

// The published plane rule: which tag each direction-pair plane carries.
inline ColorTypeTag expected_tag_for_plane(int dir_lo, int dir_hi) {
    std::set<int> d = {dir_lo, dir_hi};
    if (d == std::set<int>{1, 2} || d == std::set<int>{3, 4}) return tag_1234();
    if (d == std::set<int>{1, 3} || d == std::set<int>{2, 4}) return tag_1324();
    return tag_1243();
}

struct TypeCensus {
    std::map<ColorTypeTag, int> counts;
    bool plane_rule_holds = true;  // every cycle's tag matches its plane pair
    bool all_rainbow = true;
};

inline TypeCensus classify_four_cycles(const OneFactorization& f) {
    TypeCensus census;
    for (const FourCycle& c : q4_four_cycles()) {
        std::set<int> colors;
        for (const Edge& e : c.edges()) colors.insert(f.color.at(e));
        if (colors.size() != 4) { census.all_rainbow = false; continue; }
        ColorTypeTag t = cycle_tag(f, c);
        ++census.counts[t];
        if (!(t == expected_tag_for_plane(c.dir_lo, c.dir_hi))) census.plane_rule_holds = false;
    }
    return census;
}

// --- two-factors -------------------------------------------------------------

// Cycle decomposition of the union of two color classes.
inline std::vector<std::vector<int>> two_factor_union(const OneFactorization& f, int c1, int c2) {
    if (c1 == c2) throw std::invalid_argument("two distinct colors required");
    std::vector<std::vector<int>> cycles;
    std::set<int> seen;
    for (int start = 0; start < 16; ++start) {
        if (seen.count(start)) continue;
        std::vector<int> cycle;
        int v = start, c = c1;
        do {
            cycle.push_back(v);
            seen.insert(v);
            v = f.step(v, c);
            c = (c == c1 ? c2 : c1);
        } while (v != start);
        cycles.push_back(cycle);
    }
    return cycles;
}

// Each length-4 subpath of an 8-cycle must join antipodal vertices and use
// all four directions.
inline bool antipodal_subpath_property(const std::vector<int>& cycle) {
    int n = (int)cycle.size();
    if (n != 8) return false;
    for (int s = 0; s < n; ++s) {
        if ((cycle[s] ^ cycle[(s + 4) % n]) != 15) return false;
        std::set<int> dirs;
        for (int k = 0; k < 4; ++k)
            dirs.insert(edge_direction(edge(cycle[(s + k) % n], cycle[(s + k + 1) % n])));
        if (dirs.size() != 4) return false;
    }
    return true;
}

// --- parallel-plane families ---------------------------------------------------

struct FamilyCheck {
    int dir_lo = 0, dir_hi = 0;
    bool latin = false;  // colors x positions incidence is a Latin square
};

inline std::vector<FamilyCheck> rainbow_family_checks(const OneFactorization& f) {
    std::vector<FamilyCheck> out;
    for (int b1 = 0; b1 < 4; ++b1)
        for (int b2 = b1 + 1; b2 < 4; ++b2) {
            std::vector<const FourCycle*> members;
            for (const FourCycle& c : q4_four_cycles())
                if (c.dir_lo == b1 + 1 && c.dir_hi == b2 + 1) members.push_back(&c);
            // rows: the four parallel cycles; columns: edge positions 0..3
            std::array<std::array<int, 4>, 4> table{};
            for (int r = 0; r < 4; ++r)
                for (int p = 0; p < 4; ++p)
                    table[r][p] = f.at(members[r]->walk[p], members[r]->walk[(p + 1) % 4]);
            bool latin = true;
            for (int p = 0; p < 4; ++p) {
                std::set<int> col;
                for (int r = 0; r < 4; ++r) col.insert(table[r][p]);
                if (col.size() != 4) latin = false;
            }
            for (int r = 0; r < 4; ++r) {
                std::set<int> row(table[r].begin(), table[r].end());
                if (row.size() != 4) latin = false;
            }
            out.push_back({b1 + 1, b2 + 1, latin});
        }
    return out;
}

// A 2-factor of two 8-cycles whose color pattern doubles the given tag.
struct DoubledTwoFactor {
    std::vector<int> cycle_a, cycle_b;
    bool found = false;
};

inline DoubledTwoFactor doubled_two_factor(const OneFactorization& f, const ColorTypeTag& tag) {
    // all 8-cycles realizing the doubled pattern, walking the matchings
    std::vector<std::vector<int>> cycles;
    std::set<std::set<int>> seen;
    std::array<int, 4> pat = tag.canon;
    for (int start = 0; start < 16; ++start) {
        std::vector<int> walk = {start};
        int v = start;
        for (int k = 0; k < 8; ++k) {
            v = f.step(v, pat[k % 4]);
            if (k < 7) walk.push_back(v);
        }
        if (v != start || std::set<int>(walk.begin(), walk.end()).size() != 8) continue;
        if (seen.insert(std::set<int>(walk.begin(), walk.end())).second) cycles.push_back(walk);
    }
    for (size_t i = 0; i < cycles.size(); ++i)
        for (size_t j = i + 1; j < cycles.size(); ++j) {
            std::set<int> all(cycles[i].begin(), cycles[i].end());
            for (int v : cycles[j]) all.insert(v);
            if (all.size() == 16) return {cycles[i], cycles[j], true};
        }
    return {};
}

// --- antipodal quotient ------------------------------------------------------

// The quotient identifies v with its complement 15-v; classes are labeled
// by their member below 8. Parts by label weight parity.
inline int antipodal_class(int v) { return v < 8 ? v : 15 - v; }

struct QuotientGraph {
    std::array<int, 4> part_even{}, part_odd{};              // V0, V1
    std::set<std::pair<int, int>> edges;                     // 16, as (min,max)
    std::map<std::pair<int, int>, int> preimage_count;

    bool is_k44() const {
        if (edges.size() != 16) return false;
        for (int a : part_even)
            for (int b : part_odd)
                if (!edges.count({std::min(a, b), std::max(a, b)})) return false;
        return true;
    }
};

inline QuotientGraph antipodal_quotient() {
    QuotientGraph q;
    int e = 0, o = 0;
    for (int l = 0; l < 8; ++l) {
        if (__builtin_popcount(l) % 2 == 0) q.part_even[e++] = l;
        else q.part_odd[o++] = l;
    }
    for (const Edge& ed : q4_edges()) {
        int a = antipodal_class(ed.first), b = antipodal_class(ed.second);
        std::pair<int, int> key{std::min(a, b), std::max(a, b)};
        q.edges.insert(key);
        ++q.preimage_count[key];
    }
    return q;
}

// complementation commutes with every coordinate-direction color
inline bool complement_is_p_color_automorphism() {
    OneFactorization p = parallel_factorization();
    for (const Edge& e : q4_edges())
        if (p.color.at(e) != p.color.at(edge(15 - e.first, 15 - e.second))) return false;
    return true;
}

struct QuotientFactorization {
    std::map<std::pair<int, int>, int> color;  // K4,4 edge -> 1..4

    int at(int a, int b) const { return color.at({std::min(a, b), std::max(a, b)}); }

    bool proper(const QuotientGraph& g) const {
        for (int l = 0; l < 8; ++l) {
            std::set<int> seen;
            for (const auto& [e, c] : color)
                if (e.first == l || e.second == l) seen.insert(c);
            if (seen != std::set<int>{1, 2, 3, 4}) return false;
        }
        return color.size() == g.edges.size();
    }
};

struct ProjectionResult {
    QuotientFactorization fstar, pstar;
    bool antipode_compatible = true;       // both colorings factor through the quotient
    bool orthogonal = true;                // all 16 pair intersections have size 1
    bool fstar_rainbow = true;             // expected false for F*
};

inline ProjectionResult project_factorizations(const OneFactorization& f, const OneFactorization& p) {
    ProjectionResult r;
    auto project = [&](const OneFactorization& src, QuotientFactorization& dst) {
        for (const Edge& e : q4_edges()) {
            Edge anti = edge(15 - e.first, 15 - e.second);
            if (src.color.at(e) != src.color.at(anti)) {
                r.antipode_compatible = false;
                return;
            }
            int a = antipodal_class(e.first), b = antipodal_class(e.second);
            dst.color[{std::min(a, b), std::max(a, b)}] = src.color.at(e);
        }
    };
    project(f, r.fstar);
    project(p, r.pstar);
    if (!r.antipode_compatible) return r;

    for (int a = 1; a <= 4 && r.orthogonal; ++a)
        for (int b = 1; b <= 4; ++b) {
            int common = 0;
            for (const auto& [e, cf] : r.fstar.color)
                if (cf == a && r.pstar.color.at(e) == b) ++common;
            if (common != 1) { r.orthogonal = false; break; }
        }

    // K4,4 rainbow test over all 36 four-cycles
    QuotientGraph g = antipodal_quotient();
    r.fstar_rainbow = true;
    for (int i = 0; i < 4 && r.fstar_rainbow; ++i)
        for (int j = i + 1; j < 4 && r.fstar_rainbow; ++j)
            for (int k = 0; k < 4 && r.fstar_rainbow; ++k)
                for (int l = k + 1; l < 4; ++l) {
                    int a = g.part_even[i], b = g.part_even[j];
                    int x = g.part_odd[k], y = g.part_odd[l];
                    std::set<int> colors = {r.fstar.at(a, x), r.fstar.at(x, b), r.fstar.at(b, y),
                                            r.fstar.at(y, a)};
                    if (colors.size() != 4) { r.fstar_rainbow = false; break; }
                }
    return r;
}

// --- the Euler square ---------------------------------------------------------

struct EulerSquare {
    std::array<int, 4> rows{}, cols{};
    std::array<std::array<std::pair<int, int>, 4>, 4> cell{};  // (P* color, F* color)

    bool graeco_latin() const {
        std::set<std::pair<int, int>> pairs;
        for (int i = 0; i < 4; ++i) {
            std::set<int> row_p, row_f;
            for (int j = 0; j < 4; ++j) {
                row_p.insert(cell[i][j].first);
                row_f.insert(cell[i][j].second);
                pairs.insert(cell[i][j]);
            }
            if (row_p.size() != 4 || row_f.size() != 4) return false;
        }
        for (int j = 0; j < 4; ++j) {
            std::set<int> col_p, col_f;
            for (int i = 0; i < 4; ++i) {
                col_p.insert(cell[i][j].first);
                col_f.insert(cell[i][j].second);
            }
            if (col_p.size() != 4 || col_f.size() != 4) return false;
        }
        return pairs.size() == 16;
    }
};

inline EulerSquare euler_square(const QuotientFactorization& fstar, const QuotientFactorization& pstar) {
    QuotientGraph g = antipodal_quotient();
    EulerSquare sq;
    sq.rows = g.part_even;
    sq.cols = g.part_odd;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            sq.cell[i][j] = {pstar.at(sq.rows[i], sq.cols[j]), fstar.at(sq.rows[i], sq.cols[j])};
    return sq;
}

// the published table: rows 0,3,5,6 by columns 1,2,4,7
inline const std::array<std::array<std::pair<int, int>, 4>, 4>& printed_euler_square() {
    static const std::array<std::array<std::pair<int, int>, 4>, 4> t = {{
        {{{1, 2}, {2, 3}, {3, 4}, {4, 1}}},
        {{{2, 1}, {1, 4}, {4, 3}, {3, 2}}},
        {{{3, 3}, {4, 2}, {1, 1}, {2, 4}}},
        {{{4, 4}, {3, 1}, {2, 2}, {1, 3}}},
    }};
    return t;
}

// --- automorphisms -------------------------------------------------------------

using VertexMap = std::array<int, 16>;

// all 384 signed-permutation maps v -> pi(v) xor c
inline std::vector<VertexMap> q4_signed_maps() {
    std::vector<VertexMap> out;
    std::array<int, 4> perm = {0, 1, 2, 3};
    std::sort(perm.begin(), perm.end());
    do {
        for (int c = 0; c < 16; ++c) {
            VertexMap m{};
            for (int v = 0; v < 16; ++v) {
                int image = 0;
                for (int b = 0; b < 4; ++b)
                    if (v >> b & 1) image |= 1 << perm[b];
                m[v] = image ^ c;
            }
            out.push_back(m);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
}

// independent route: backtracking over all adjacency-preserving bijections
inline long long count_q4_automorphisms_backtracking() {
    std::array<std::array<bool, 16>, 16> adj{};
    for (const Edge& e : q4_edges()) adj[e.first][e.second] = adj[e.second][e.first] = true;
    VertexMap img{};
    std::array<bool, 16> used{};
    long long count = 0;
    std::function<void(int)> rec = [&](int v) {
        if (v == 16) { ++count; return; }
        for (int w = 0; w < 16; ++w) {
            if (used[w]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (adj[u][v] != adj[img[u]][w]) ok = false;
            if (!ok) continue;
            used[w] = true;
            img[v] = w;
            rec(v + 1);
            used[w] = false;
        }
    };
    rec(0);
    return count;
}

inline bool map_preserves_coloring(const VertexMap& m, const OneFactorization& f) {
    for (const Edge& e : q4_edges())
        if (f.color.at(e) != f.color.at(edge(m[e.first], m[e.second]))) return false;
    return true;
}

struct AutomorphismCounts {
    long long q4_constructed = 0;        // signed-permutation family size
    long long q4_backtracked = 0;        // independent count, expected equal
    long long color_preserving = 0;      // stabilizer of the rainbow coloring
    long long induced_on_quotient = 0;   // image in Sym(V(K4,4))
    long long k44_full = 0;              // all adjacency-preserving bijections of K4,4
};

inline AutomorphismCounts automorphism_counts(const OneFactorization& f) {
    AutomorphismCounts out;
    std::vector<VertexMap> maps = q4_signed_maps();
    out.q4_constructed = (long long)maps.size();
    out.q4_backtracked = count_q4_automorphisms_backtracking();

    for (const VertexMap& m : maps)
        if (map_preserves_coloring(m, f)) ++out.color_preserving;

    std::set<std::array<int, 8>> induced;
    for (const VertexMap& m : maps) {
        std::array<int, 8> q{};
        for (int l = 0; l < 8; ++l) q[l] = antipodal_class(m[l]);
        induced.insert(q);
    }
    out.induced_on_quotient = (long long)induced.size();

    // brute force over the 8! bijections of the quotient vertex set
    QuotientGraph g = antipodal_quotient();
    std::array<int, 8> perm = {0, 1, 2, 3, 4, 5, 6, 7};
    do {
        bool ok = true;
        for (int a = 0; a < 8 && ok; ++a)
            for (int b = a + 1; b < 8 && ok; ++b)
                if (g.edges.count({a, b}) !=
                    g.edges.count({std::min(perm[a], perm[b]), std::max(perm[a], perm[b])}))
                    ok = false;
        if (ok) ++out.k44_full;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace mobius4::cube4
