#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mobius4/vec.hpp"

namespace mobius4 {

struct Segment3 {
    Vec3 a, b;

    Segment3() = default;
    Segment3(Vec3 pa, Vec3 pb) : a(pa), b(pb) {
        if (a == b) throw std::invalid_argument("Segment3: degenerate segment " + pa.str());
    }

    Vec3 dir() const { return b - a; }
    Rational length_squared() const { return mobius4::length_squared(dir()); }

    // -1 if not axis-aligned, else the index of the single varying coordinate
    int axis() const {
        Vec3 d = dir();
        int varying = -1, count = 0;
        for (int i = 0; i < 3; ++i)
            if (!d[i].is_zero()) { varying = i; ++count; }
        return count == 1 ? varying : -1;
    }

    bool contains(const Vec3& p) const {
        Vec3 d = dir(), w = p - a;
        if (!cross(w, d).is_zero()) return false;
        Rational t = dot(w, d) / dot(d, d);
        return t >= Rational(0) && t <= Rational(1);
    }

    // Unordered comparison key
    std::pair<Vec3, Vec3> sorted() const { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); }

    friend bool operator==(const Segment3& s, const Segment3& t) { return s.sorted() == t.sorted(); }
};

struct SegmentIntersection {
    enum class Kind { Empty, Point, Segment };
    Kind kind = Kind::Empty;
    Vec3 p, q;  // Point: p; Segment: [p,q]

    static SegmentIntersection empty() { return {}; }
    static SegmentIntersection point(Vec3 v) { return {Kind::Point, v, v}; }
    static SegmentIntersection segment(Vec3 u, Vec3 v) {
        if (u == v) return point(u);
        if (v < u) std::swap(u, v);
        return {Kind::Segment, u, v};
    }
};

// Exact intersection of two closed segments in 3-space.
inline SegmentIntersection segment_intersection(const Segment3& s, const Segment3& t) {
    Vec3 u = s.dir(), v = t.dir(), w = t.a - s.a;
    Vec3 uv = cross(u, v);
    if (!uv.is_zero()) {
        if (det3(u, v, w) != Rational(0)) return SegmentIntersection::empty();  // skew
        Rational denom = dot(uv, uv);
        Rational su = dot(cross(w, v), uv) / denom;
        Rational tv = dot(cross(w, u), uv) / denom;
        if (su < Rational(0) || su > Rational(1) || tv < Rational(0) || tv > Rational(1))
            return SegmentIntersection::empty();
        return SegmentIntersection::point(s.a + su * u);
    }
    // parallel lines
    if (!cross(w, u).is_zero()) return SegmentIntersection::empty();
    Rational uu = dot(u, u);
    Rational t0 = dot(t.a - s.a, u) / uu;
    Rational t1 = dot(t.b - s.a, u) / uu;
    if (t1 < t0) std::swap(t0, t1);
    Rational lo = std::max(Rational(0), t0), hi = std::min(Rational(1), t1);
    if (lo > hi) return SegmentIntersection::empty();
    if (lo == hi) return SegmentIntersection::point(s.a + lo * u);
    return SegmentIntersection::segment(s.a + lo * u, s.a + hi * u);
}

struct Plane {
    Vec3 n;       // not necessarily unit; exact
    Rational d;   // plane is dot(n,p) == d

    Rational eval(const Vec3& p) const { return dot(n, p) - d; }
};

enum class QuadKind { Trapezoid, Parallelogram };

// Convex planar quadrilateral with one mandated parallel side pair
// (v0v1 parallel to v2v3). The only two shapes the strip faces take are
// the 1:3 isosceles trapezoid and the parallelogram.
struct PlanarQuad {
    std::array<Vec3, 4> v;
    QuadKind kind;

    PlanarQuad(Vec3 a, Vec3 b, Vec3 c, Vec3 d) : v{a, b, c, d} {
        Vec3 e01 = v[1] - v[0], e12 = v[2] - v[1], e23 = v[3] - v[2], e30 = v[0] - v[3];
        if (det3(e01, e12, e23) != Rational(0))
            throw std::invalid_argument("PlanarQuad: vertices not coplanar");
        if (!cross(e01, e23).is_zero())
            throw std::invalid_argument("PlanarQuad: sides v0v1 and v2v3 not parallel");
        Vec3 n = cross(e01, e12);
        if (n.is_zero()) throw std::invalid_argument("PlanarQuad: degenerate");
        std::array<Vec3, 4> e = {e01, e12, e23, e30};
        for (int i = 0; i < 4; ++i) {
            Rational s = dot(cross(e[i], e[(i + 1) % 4]), n);
            if (s <= Rational(0)) throw std::invalid_argument("PlanarQuad: not strictly convex");
        }
        Rational la = mobius4::length_squared(e01), lb = mobius4::length_squared(e23);
        if (la == lb) {
            kind = QuadKind::Parallelogram;
        } else if ((la == Rational(1) && lb == Rational(9)) || (la == Rational(9) && lb == Rational(1))) {
            kind = QuadKind::Trapezoid;
        } else {
            throw std::invalid_argument("PlanarQuad: parallel sides are neither equal nor 1:3");
        }
    }

    Plane plane() const {
        Vec3 n = cross(v[1] - v[0], v[2] - v[1]);
        return {n, dot(n, v[0])};
    }

    bool contains(const Vec3& p) const {
        Plane pl = plane();
        if (pl.eval(p) != Rational(0)) return false;
        for (int i = 0; i < 4; ++i) {
            Vec3 e = v[(i + 1) % 4] - v[i];
            if (dot(cross(e, p - v[i]), pl.n) < Rational(0)) return false;
        }
        return true;
    }

    // Unordered vertex set, for point-set identity under isometries
    std::array<Vec3, 4> sorted_vertices() const {
        std::array<Vec3, 4> s = v;
        std::sort(s.begin(), s.end());
        return s;
    }
};

// Squared Euclidean area, exact. Twice the vector area is the cyclic sum
// of cross products.
inline Rational quad_area_squared(const PlanarQuad& q) {
    Vec3 s = cross(q.v[0], q.v[1]) + cross(q.v[1], q.v[2]) + cross(q.v[2], q.v[3]) + cross(q.v[3], q.v[0]);
    Rational a2 = dot(s, s) / Rational(4);
    if (a2.is_zero()) throw std::domain_error("quad_area_squared: zero-area quad");
    return a2;
}

struct QuadIntersection {
    enum class Kind { Empty, Point, Segment, Region };
    Kind kind = Kind::Empty;
    std::vector<Vec3> pts;  // Point: 1; Segment: 2; Region: polygon vertices

    static QuadIntersection empty() { return {}; }
    static QuadIntersection point(Vec3 p) { return {Kind::Point, {p}}; }
    static QuadIntersection segment(Vec3 a, Vec3 b) {
        if (a == b) return point(a);
        if (b < a) std::swap(a, b);
        return {Kind::Segment, {a, b}};
    }
    static QuadIntersection region(std::vector<Vec3> poly) { return {Kind::Region, std::move(poly)}; }
};

namespace detail {

// Drop the dominant axis of n to get an exact 2D chart of the plane.
inline int dominant_axis(const Vec3& n) {
    Rational ax = n.x.abs(), ay = n.y.abs(), az = n.z.abs();
    if (ax >= ay && ax >= az) return 0;
    if (ay >= az) return 1;
    return 2;
}

inline Vec2 project2(const Vec3& p, int drop) {
    if (drop == 0) return {p.y, p.z};
    if (drop == 1) return {p.x, p.z};
    return {p.x, p.y};
}

// Sutherland-Hodgman clip of a convex polygon by the half-plane left of a->b.
inline std::vector<Vec2> clip_halfplane(const std::vector<Vec2>& poly, const Vec2& a, const Vec2& b) {
    std::vector<Vec2> out;
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec2& p = poly[i];
        const Vec2& q = poly[(i + 1) % n];
        Rational sp = cross2(b - a, p - a);
        Rational sq = cross2(b - a, q - a);
        bool in_p = sp >= Rational(0), in_q = sq >= Rational(0);
        if (in_p) out.push_back(p);
        if (in_p != in_q) {
            Rational t = sp / (sp - sq);
            out.push_back(p + t * (q - p));
        }
    }
    return out;
}

inline Rational polygon_area2x(const std::vector<Vec2>& poly) {
    Rational s(0);
    for (size_t i = 0; i < poly.size(); ++i) s += cross2(poly[i], poly[(i + 1) % poly.size()]);
    return s;
}

// The chord cut out of a convex quad by a plane it crosses: the zero set of
// pl.eval on the quad, as 0, 1 or 2 extreme points along the cut line.
inline std::vector<Vec3> quad_plane_chord(const PlanarQuad& q, const Plane& pl, const Vec3& line_dir) {
    std::vector<Vec3> zeros;
    std::array<Rational, 4> f;
    for (int i = 0; i < 4; ++i) f[i] = pl.eval(q.v[i]);
    for (int i = 0; i < 4; ++i) {
        int j = (i + 1) % 4;
        if (f[i].is_zero()) zeros.push_back(q.v[i]);
        if (f[i].sign() * f[j].sign() < 0) {
            Rational t = f[i] / (f[i] - f[j]);
            zeros.push_back(q.v[i] + t * (q.v[j] - q.v[i]));
        }
    }
    if (zeros.empty()) return {};
    Vec3 lo = zeros[0], hi = zeros[0];
    Rational tlo = dot(lo, line_dir), thi = tlo;
    for (const Vec3& p : zeros) {
        Rational t = dot(p, line_dir);
        if (t < tlo) { tlo = t; lo = p; }
        if (t > thi) { thi = t; hi = p; }
    }
    if (lo == hi) return {lo};
    return {lo, hi};
}

}  // namespace detail

// Exact intersection of two convex planar quads, classified by dimension.
inline QuadIntersection quad_quad_intersection(const PlanarQuad& p, const PlanarQuad& q) {
    Plane pp = p.plane(), pq = q.plane();
    Vec3 line_dir = cross(pp.n, pq.n);

    if (line_dir.is_zero()) {
        if (pq.eval(p.v[0]) != Rational(0)) return QuadIntersection::empty();
        // coplanar: clip p against q in an exact 2D chart
        int drop = detail::dominant_axis(pp.n);
        std::vector<Vec2> subject, clip;
        for (const Vec3& v : p.v) subject.push_back(detail::project2(v, drop));
        for (const Vec3& v : q.v) clip.push_back(detail::project2(v, drop));
        if (detail::polygon_area2x(clip) < Rational(0)) std::reverse(clip.begin(), clip.end());
        std::vector<Vec2> poly = subject;
        for (size_t i = 0; i < clip.size() && !poly.empty(); ++i)
            poly = detail::clip_halfplane(poly, clip[i], clip[(i + 1) % clip.size()]);
        std::vector<Vec2> distinct;
        for (const Vec2& v : poly)
            if (std::find(distinct.begin(), distinct.end(), v) == distinct.end()) distinct.push_back(v);
        auto lift = [&](const Vec2& w) -> Vec3 {
            // invert the chart on p's plane: two coords known, solve the third
            Vec3 r;
            if (drop == 0) {
                r.y = w.x; r.z = w.y;
                r.x = (pp.d - pp.n.y * r.y - pp.n.z * r.z) / pp.n.x;
            } else if (drop == 1) {
                r.x = w.x; r.z = w.y;
                r.y = (pp.d - pp.n.x * r.x - pp.n.z * r.z) / pp.n.y;
            } else {
                r.x = w.x; r.y = w.y;
                r.z = (pp.d - pp.n.x * r.x - pp.n.y * r.y) / pp.n.z;
            }
            return r;
        };
        if (distinct.empty()) return QuadIntersection::empty();
        if (distinct.size() == 1) return QuadIntersection::point(lift(distinct[0]));
        if (distinct.size() == 2) return QuadIntersection::segment(lift(distinct[0]), lift(distinct[1]));
        if (detail::polygon_area2x(poly).is_zero()) {
            // collinear sliver: take extremes along the direction of the span
            Vec2 dir2 = distinct[1] - distinct[0];
            Vec2 lo = distinct[0], hi = distinct[0];
            Rational tlo = dot2(lo, dir2), thi = tlo;
            for (const Vec2& w : distinct) {
                Rational t = dot2(w, dir2);
                if (t < tlo) { tlo = t; lo = w; }
                if (t > thi) { thi = t; hi = w; }
            }
            return QuadIntersection::segment(lift(lo), lift(hi));
        }
        std::vector<Vec3> region;
        for (const Vec2& w : distinct) region.push_back(lift(w));
        return QuadIntersection::region(std::move(region));
    }

    // transversal planes: intersect the two chords on the common line
    std::vector<Vec3> cp = detail::quad_plane_chord(p, pq, line_dir);
    std::vector<Vec3> cq = detail::quad_plane_chord(q, pp, line_dir);
    if (cp.empty() || cq.empty()) return QuadIntersection::empty();
    auto param = [&](const Vec3& x) { return dot(x, line_dir); };
    Rational plo = param(cp.front()), phi = param(cp.back());
    Rational qlo = param(cq.front()), qhi = param(cq.back());
    Rational lo = std::max(plo, qlo), hi = std::min(phi, qhi);
    if (lo > hi) return QuadIntersection::empty();
    auto at = [&](Rational t) -> Vec3 {
        if (cp.size() == 1) return cp[0];
        Vec3 d = cp.back() - cp.front();
        Rational span = phi - plo;
        return cp.front() + ((t - plo) / span) * d;
    };
    if (lo == hi) return QuadIntersection::point(at(lo));
    return QuadIntersection::segment(at(lo), at(hi));
}

}  // namespace mobius4
