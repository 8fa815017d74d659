#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mobius4/curves.hpp"
#include "mobius4/geometry.hpp"

namespace mobius4::knots {

// Laurent polynomial with integer coefficients in one variable.
struct LaurentPolynomial {
    std::map<int, long long> coeff;  // exponent -> coefficient, zeros dropped

    static LaurentPolynomial zero() { return {}; }
    static LaurentPolynomial mono(int exp, long long c) {
        LaurentPolynomial p;
        if (c != 0) p.coeff[exp] = c;
        return p;
    }
    static LaurentPolynomial one() { return mono(0, 1); }

    bool is_zero() const { return coeff.empty(); }

    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        LaurentPolynomial r = a;
        for (const auto& [e, c] : b.coeff) {
            long long v = (r.coeff.count(e) ? r.coeff[e] : 0) + c;
            if (v == 0) r.coeff.erase(e);
            else r.coeff[e] = v;
        }
        return r;
    }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        LaurentPolynomial r;
        for (const auto& [ea, ca] : a.coeff)
            for (const auto& [eb, cb] : b.coeff) {
                long long v = (r.coeff.count(ea + eb) ? r.coeff[ea + eb] : 0) + ca * cb;
                if (v == 0) r.coeff.erase(ea + eb);
                else r.coeff[ea + eb] = v;
            }
        return r;
    }
    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.coeff == b.coeff;
    }
    friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) { return !(a == b); }

    // the mirror image: A -> A^{-1}
    LaurentPolynomial negate_exponents() const {
        LaurentPolynomial r;
        for (const auto& [e, c] : coeff) r.coeff[-e] = c;
        return r;
    }

    bool palindromic() const { return *this == negate_exponents(); }

    // descending exponents: "-A^16 + A^12 + A^4"
    std::string str() const {
        if (coeff.empty()) return "0";
        std::string s;
        for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) {
            long long c = it->second;
            int e = it->first;
            if (s.empty()) s += c < 0 ? "-" : "";
            else s += c < 0 ? " - " : " + ";
            long long a = c < 0 ? -c : c;
            std::string var = e == 0 ? "" : (e == 1 ? "A" : "A^" + std::to_string(e));
            if (var.empty()) s += std::to_string(a);
            else s += (a == 1 ? "" : std::to_string(a)) + var;
        }
        return s;
    }
};

using Polyline3 = std::vector<Vec3>;  // closed: last vertex joins the first

inline Polyline3 polyline_of(const curves::PLCycle& c) { return c.vertices(); }

struct DiagramCrossing {
    Vec2 pos;
    int over_comp = 0, over_seg = 0;
    Rational over_t;
    int under_comp = 0, under_seg = 0;
    Rational under_t;
    int sign = 0;  // sign of det[over direction, under direction] in the chart
};

struct Passage {
    int crossing = 0;
    bool over = false;
};

struct KnotDiagram {
    std::vector<Polyline3> components;
    Vec3 direction;
    std::vector<DiagramCrossing> crossings;
    std::vector<std::vector<Passage>> walk;  // passages in traversal order per component

    int crossing_count() const { return (int)crossings.size(); }
    int writhe() const {
        int w = 0;
        for (const DiagramCrossing& c : crossings) w += c.sign;
        return w;
    }
};

namespace detail {

struct Chart {
    Vec3 u, w, dir;
    Vec2 project(const Vec3& p) const { return {dot(p, u), dot(p, w)}; }
    Rational depth(const Vec3& p) const { return dot(p, dir); }
};

inline Chart make_chart(const Vec3& dir) {
    Vec3 axes[3] = {pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)};
    for (const Vec3& e : axes) {
        Vec3 u = cross(dir, e);
        if (!u.is_zero()) return {u, cross(dir, u), dir};
    }
    throw std::invalid_argument("projection direction is zero");
}

struct Candidate {
    int comp_s, seg_s, comp_t, seg_t;
    Vec2 pos;
    Rational ts, tt;
};

}  // namespace detail

struct ProjectionFailure {
    std::string reason;
};

// Project the link along an explicit direction; exact genericity tests.
// Returns the reason for rejection if the direction is not generic.
inline std::optional<ProjectionFailure> try_project(const std::vector<Polyline3>& comps, const Vec3& dir,
                                                    KnotDiagram& out) {
    detail::Chart chart = detail::make_chart(dir);
    int nc = (int)comps.size();
    std::vector<std::vector<Vec2>> p2(nc);
    for (int c = 0; c < nc; ++c) {
        if (comps[c].size() < 3) return ProjectionFailure{"component with fewer than 3 vertices"};
        for (const Vec3& v : comps[c]) p2[c].push_back(chart.project(v));
    }

    auto seg2 = [&](int c, int k, int end) -> const Vec2& {
        return p2[c][(k + end) % p2[c].size()];
    };

    // no segment may project to a point; adjacent projections must turn
    for (int c = 0; c < nc; ++c) {
        int n = (int)comps[c].size();
        for (int k = 0; k < n; ++k) {
            Vec2 d = seg2(c, k, 1) - seg2(c, k, 0);
            if (d == Vec2{Rational(0), Rational(0)})
                return ProjectionFailure{"segment parallel to the direction"};
            Vec2 dn = seg2(c, (k + 1) % n, 1) - seg2(c, (k + 1) % n, 0);
            if (cross2(d, dn).is_zero())
                return ProjectionFailure{"adjacent segments project collinearly"};
        }
    }

    // candidate crossings from all non-adjacent pairs
    std::vector<detail::Candidate> cands;
    for (int c1 = 0; c1 < nc; ++c1)
        for (int c2 = c1; c2 < nc; ++c2) {
            int n1 = (int)comps[c1].size(), n2 = (int)comps[c2].size();
            for (int i = 0; i < n1; ++i)
                for (int j = (c1 == c2 ? i + 1 : 0); j < n2; ++j) {
                    if (c1 == c2 && (j == (i + 1) % n1 || i == (j + 1) % n1)) {
                        // adjacent: the shared vertex is their only allowed contact,
                        // and the collinearity test above already rules out overlap
                        continue;
                    }
                    Vec2 a = seg2(c1, i, 0), b = seg2(c1, i, 1);
                    Vec2 c = seg2(c2, j, 0), d = seg2(c2, j, 1);
                    Vec2 u = b - a, v = d - c, w = c - a;
                    Rational den = cross2(u, v);
                    if (den.is_zero()) {
                        // parallel projections: any overlap is non-generic
                        if (!cross2(w, u).is_zero()) continue;
                        Rational uu = dot2(u, u);
                        Rational t0 = dot2(c - a, u) / uu, t1 = dot2(d - a, u) / uu;
                        if (t1 < t0) std::swap(t0, t1);
                        if (t1 < Rational(0) || t0 > Rational(1)) continue;
                        return ProjectionFailure{"collinear segment projections overlap"};
                    }
                    Rational ts = cross2(w, v) / den;
                    Rational tt = cross2(w, u) / den;
                    if (ts < Rational(0) || ts > Rational(1) || tt < Rational(0) || tt > Rational(1))
                        continue;
                    bool interior = ts > Rational(0) && ts < Rational(1) && tt > Rational(0) && tt < Rational(1);
                    if (!interior) return ProjectionFailure{"crossing at a projected vertex"};
                    cands.push_back({c1, i, c2, j, a + ts * u, ts, tt});
                }
        }

    // no two crossings and no crossing/vertex may coincide in the chart
    for (size_t i = 0; i < cands.size(); ++i)
        for (size_t j = i + 1; j < cands.size(); ++j)
            if (cands[i].pos == cands[j].pos) return ProjectionFailure{"triple point"};
    for (const detail::Candidate& c : cands)
        for (int cc = 0; cc < nc; ++cc)
            for (const Vec2& v : p2[cc])
                if (c.pos == v) return ProjectionFailure{"crossing at a projected vertex image"};

    // depths decide over/under; equal depths mean the 3d curves meet
    out = KnotDiagram{};
    out.components = comps;
    out.direction = dir;
    for (const detail::Candidate& c : cands) {
        const Vec3& a3 = comps[c.comp_s][c.seg_s];
        const Vec3& b3 = comps[c.comp_s][(c.seg_s + 1) % comps[c.comp_s].size()];
        const Vec3& c3 = comps[c.comp_t][c.seg_t];
        const Vec3& d3 = comps[c.comp_t][(c.seg_t + 1) % comps[c.comp_t].size()];
        Rational ds = chart.depth(a3 + c.ts * (b3 - a3));
        Rational dt = chart.depth(c3 + c.tt * (d3 - c3));
        if (ds == dt) {
            if (c.comp_s == c.comp_t) throw std::invalid_argument("curve intersects itself");
            throw std::invalid_argument("link components intersect in space");
        }
        DiagramCrossing cr;
        cr.pos = c.pos;
        bool s_over = ds > dt;  // larger depth is nearer the viewpoint
        if (s_over) {
            cr.over_comp = c.comp_s; cr.over_seg = c.seg_s; cr.over_t = c.ts;
            cr.under_comp = c.comp_t; cr.under_seg = c.seg_t; cr.under_t = c.tt;
        } else {
            cr.over_comp = c.comp_t; cr.over_seg = c.seg_t; cr.over_t = c.tt;
            cr.under_comp = c.comp_s; cr.under_seg = c.seg_s; cr.under_t = c.ts;
        }
        Vec2 e_over, e_under;
        {
            const Polyline3& po = comps[cr.over_comp];
            Vec2 oa = chart.project(po[cr.over_seg]), ob = chart.project(po[(cr.over_seg + 1) % po.size()]);
            const Polyline3& pu = comps[cr.under_comp];
            Vec2 ua = chart.project(pu[cr.under_seg]), ub = chart.project(pu[(cr.under_seg + 1) % pu.size()]);
            e_over = ob - oa;
            e_under = ub - ua;
        }
        cr.sign = cross2(e_over, e_under).sign();
        out.crossings.push_back(cr);
    }

    // traversal order of passages
    out.walk.resize(nc);
    for (int c = 0; c < nc; ++c) {
        std::vector<std::tuple<int, Rational, int, bool>> order;  // (seg, t, crossing, over)
        for (int x = 0; x < (int)out.crossings.size(); ++x) {
            const DiagramCrossing& cr = out.crossings[x];
            if (cr.over_comp == c) order.push_back({cr.over_seg, cr.over_t, x, true});
            if (cr.under_comp == c) order.push_back({cr.under_seg, cr.under_t, x, false});
        }
        std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
            if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
            return std::get<1>(a) < std::get<1>(b);
        });
        for (const auto& [seg, t, x, over] : order) out.walk[c].push_back({x, over});
    }
    return std::nullopt;
}

// Deterministic direction search: integer vectors by increasing max-norm,
// lexicographic within a norm shell, skipping axis-parallel and
// non-primitive vectors.
inline std::vector<Vec3> direction_candidates(int max_norm) {
    std::vector<Vec3> dirs;
    for (int m = 1; m <= max_norm; ++m)
        for (int a = -m; a <= m; ++a)
            for (int b = -m; b <= m; ++b)
                for (int c = -m; c <= m; ++c) {
                    if (std::max({std::abs(a), std::abs(b), std::abs(c)}) != m) continue;
                    int zeros = (a == 0) + (b == 0) + (c == 0);
                    if (zeros >= 2) continue;
                    if (std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c)) != 1) continue;
                    dirs.push_back(pt(a, b, c));
                }
    return dirs;
}

inline KnotDiagram generic_projection(const std::vector<Polyline3>& comps, int max_norm = 12) {
    KnotDiagram d;
    for (const Vec3& dir : direction_candidates(max_norm))
        if (!try_project(comps, dir, d)) return d;
    throw std::runtime_error("no generic projection direction within max-norm " + std::to_string(max_norm));
}

// The first n accepted directions, for invariance testing.
inline std::vector<Vec3> generic_directions(const std::vector<Polyline3>& comps, int n, int max_norm = 12) {
    std::vector<Vec3> found;
    KnotDiagram d;
    for (const Vec3& dir : direction_candidates(max_norm)) {
        if (!try_project(comps, dir, d)) found.push_back(dir);
        if ((int)found.size() == n) break;
    }
    if ((int)found.size() < n) throw std::runtime_error("not enough generic directions");
    return found;
}

// Gauss code, e.g. "O1+ U2+ O3+ U1+ O2+ U3+"; crossings are numbered by
// first appearance along the walk of component 0.
inline std::string gauss_code(const KnotDiagram& d) {
    std::map<int, int> label;
    std::string out;
    for (const std::vector<Passage>& walk : d.walk)
        for (const Passage& p : walk) {
            if (!label.count(p.crossing)) label[p.crossing] = (int)label.size() + 1;
            if (!out.empty()) out += " ";
            out += (p.over ? "O" : "U") + std::to_string(label[p.crossing]) +
                   (d.crossings[p.crossing].sign > 0 ? "+" : "-");
        }
    return out;
}

namespace detail {

// integer determinant by fraction-free elimination
inline long long bareiss_det(std::vector<std::vector<long long>> m) {
    int n = (int)m.size();
    if (n == 0) return 1;
    using big = __int128;
    std::vector<std::vector<big>> a(n, std::vector<big>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    big prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { swap_row = i; break; }
            if (swap_row < 0) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    big det = sign * a[n - 1][n - 1];
    if (det > INT64_MAX || det < INT64_MIN) throw std::overflow_error("determinant overflow");
    return (long long)det;
}

}  // namespace detail

// |Delta(-1)| via the coloring (Goeritz-equivalent) matrix of the diagram:
// one arc per under-passage, one relation 2*over - in - out per crossing,
// determinant of a first minor.
inline long long knot_determinant(const KnotDiagram& d) {
    if (d.components.size() != 1) throw std::invalid_argument("knot_determinant needs one component");
    int c = d.crossing_count();
    if (c == 0) return 1;
    const std::vector<Passage>& walk = d.walk[0];
    int m = (int)walk.size();

    // arc ids: positions strictly after under-passage u_j up to and
    // including the next under-passage belong to arc j+1 (cyclically)
    std::vector<int> unders;
    for (int p = 0; p < m; ++p)
        if (!walk[p].over) unders.push_back(p);
    int arcs = (int)unders.size();
    if (arcs != c) throw std::logic_error("under-passage count mismatch");

    auto arc_at = [&](int pos) {
        // the arc that the strand occupies at walk position pos (for an
        // over-passage), i.e. the index of the last under-passage at or
        // before pos, plus one (mod arcs)
        int lo = 0;
        while (lo < arcs && unders[lo] < pos) ++lo;
        return lo % arcs;  // arc beginning at unders[lo-1]
    };

    std::vector<std::vector<long long>> mat(c, std::vector<long long>(arcs, 0));
    for (int j = 0; j < arcs; ++j) {
        int pos = unders[j];
        int crossing = walk[pos].crossing;
        int arc_in = j;                 // arc ending at this under-passage
        int arc_out = (j + 1) % arcs;   // arc starting here
        // find the over arc: the over-passage of this crossing
        int over_pos = -1;
        for (int p = 0; p < m; ++p)
            if (walk[p].over && walk[p].crossing == crossing) over_pos = p;
        if (over_pos < 0) throw std::logic_error("missing over-passage");
        int arc_over = arc_at(over_pos);
        mat[j][arc_over] += 2;
        mat[j][arc_in] -= 1;
        mat[j][arc_out] -= 1;
    }
    // first minor
    std::vector<std::vector<long long>> minor(c - 1, std::vector<long long>(arcs - 1));
    for (int i = 0; i + 1 < c; ++i)
        for (int j = 0; j + 1 < arcs; ++j) minor[i][j] = mat[i][j];
    long long det = detail::bareiss_det(minor);
    return det < 0 ? -det : det;
}

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

// Writhe-normalized Kauffman bracket (-A)^{-3w} <D>, an ambient isotopy
// invariant in the variable A. The state sum runs over all 2^c smoothings;
// the A-smoothing of a positively signed crossing is the oriented one.
inline LaurentPolynomial kauffman_bracket(const KnotDiagram& d, int max_crossings = 16) {
    int c = d.crossing_count();
    if (c > max_crossings)
        throw std::runtime_error("crossing bound exceeded (" + std::to_string(c) +
                                 "): re-search the projection direction");
    int nc = (int)d.components.size();

    // piece ends: piece p of component k runs from passage p to p+1;
    // end ids 2*(base+p) (tail, at passage p) and 2*(base+p)+1 (head)
    std::vector<int> base(nc, 0);
    int total_pieces = 0, free_loops = 0;
    for (int k = 0; k < nc; ++k) {
        base[k] = total_pieces;
        total_pieces += (int)d.walk[k].size();
        if (d.walk[k].empty()) ++free_loops;
    }

    // per crossing: the four incident ends
    struct Ends {
        int over_in = -1, over_out = -1, under_in = -1, under_out = -1;
    };
    std::vector<Ends> ends(c);
    for (int k = 0; k < nc; ++k) {
        int m = (int)d.walk[k].size();
        for (int p = 0; p < m; ++p) {
            const Passage& pa = d.walk[k][p];
            int tail = 2 * (base[k] + p);                      // leaving this passage
            int head = 2 * (base[k] + (p + m - 1) % m) + 1;    // arriving here
            if (pa.over) {
                ends[pa.crossing].over_in = head;
                ends[pa.crossing].over_out = tail;
            } else {
                ends[pa.crossing].under_in = head;
                ends[pa.crossing].under_out = tail;
            }
        }
    }

    LaurentPolynomial loop_factor = LaurentPolynomial::mono(2, -1) + LaurentPolynomial::mono(-2, -1);
    std::vector<LaurentPolynomial> loop_pow(total_pieces + free_loops + 2);
    loop_pow[0] = LaurentPolynomial::one();
    for (size_t i = 1; i < loop_pow.size(); ++i) loop_pow[i] = loop_pow[i - 1] * loop_factor;

    LaurentPolynomial bracket;
    for (unsigned state = 0; state < (1u << c); ++state) {
        detail::UnionFind uf(2 * total_pieces);
        for (int piece = 0; piece < total_pieces; ++piece) uf.unite(2 * piece, 2 * piece + 1);
        int a_count = 0;
        for (int x = 0; x < c; ++x) {
            bool a_smoothing = !(state >> x & 1);
            if (a_smoothing) ++a_count;
            bool oriented = (d.crossings[x].sign > 0) == a_smoothing;
            const Ends& e = ends[x];
            if (oriented) {
                uf.unite(e.over_in, e.under_out);
                uf.unite(e.under_in, e.over_out);
            } else {
                uf.unite(e.over_in, e.under_in);
                uf.unite(e.over_out, e.under_out);
            }
        }
        std::set<int> roots;
        for (int i = 0; i < 2 * total_pieces; ++i) roots.insert(uf.find(i));
        int loops = (int)roots.size() + free_loops;
        bracket = bracket + LaurentPolynomial::mono(a_count - (c - a_count), 1) * loop_pow[loops - 1];
    }

    // (-A)^{-3w}
    int w = d.writhe();
    LaurentPolynomial norm = LaurentPolynomial::mono(-3 * w, (w % 2 == 0) ? 1 : -1);
    return norm * bracket;
}

// Linking number of two components from the diagram: half the signed count
// of their mutual crossings.
inline Rational linking_number(const KnotDiagram& d, int comp_a, int comp_b) {
    if (comp_a == comp_b) throw std::invalid_argument("linking number needs distinct components");
    long long s = 0;
    for (const DiagramCrossing& c : d.crossings) {
        std::set<int> comps = {c.over_comp, c.under_comp};
        if (comps == std::set<int>{comp_a, comp_b}) s += c.sign;
    }
    return Rational(s, 2);
}

// Independent route for triangles: signed crossings of a cycle through the
// flat triangular disk. Degenerate contacts (in-plane edges, boundary hits)
// are rejected.
inline long long linking_number_disk(const std::array<Vec3, 3>& tri, const Polyline3& cycle) {
    Vec3 n = cross(tri[1] - tri[0], tri[2] - tri[0]);
    Rational d0 = dot(n, tri[0]);
    int m = (int)cycle.size();
    std::vector<Rational> f(m);
    for (int i = 0; i < m; ++i) f[i] = dot(n, cycle[i]) - d0;

    auto interior = [&](const Vec3& p) {
        // strict barycentric positivity
        for (int i = 0; i < 3; ++i) {
            Vec3 e = tri[(i + 1) % 3] - tri[i];
            Rational side = dot(cross(e, p - tri[i]), n);
            if (side.is_zero()) throw std::domain_error("cycle meets the triangle boundary");
            if (side < Rational(0)) return false;
        }
        return true;
    };

    long long lk = 0;
    for (int i = 0; i < m; ++i) {
        int j = (i + 1) % m;
        if (f[i].is_zero()) {
            // vertex on the plane: count it once as the crossing point of the
            // surrounding sign change, if any
            int prev = (i + m - 1) % m;
            while (f[prev].is_zero()) throw std::domain_error("edge lies in the triangle plane");
            if (f[j].is_zero()) throw std::domain_error("edge lies in the triangle plane");
            if (f[prev].sign() != f[j].sign() && interior(cycle[i])) lk += f[j].sign();
            continue;
        }
        if (f[j].is_zero()) continue;  // handled when j is reached
        if (f[i].sign() != f[j].sign()) {
            Rational t = f[i] / (f[i] - f[j]);
            Vec3 p = cycle[i] + t * (cycle[j] - cycle[i]);
            if (interior(p)) lk += f[j].sign();
        }
    }
    return lk;
}

}  // namespace mobius4::knots
