#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mobius4/geometry.hpp"

namespace mobius4::curves {

// One entry of a boundary-curve table: the segment as printed, with its
// declared length subscript and direction superscript.
struct RawSegment {
    Vec3 a, b;
    int declared_length;
    char declared_dir;  // 'h', 'v' or 'd'
};

// Which coordinate each direction letter varies; conventions[c] is the
// coordinate index of letter "hvd"[c].
using DirConvention = std::array<int, 3>;

inline constexpr DirConvention kDefaultConvention = {0, 1, 2};  // h,v,d -> x1,x2,x3

inline int convention_coord(const DirConvention& c, char dir) {
    switch (dir) {
        case 'h': return c[0];
        case 'v': return c[1];
        case 'd': return c[2];
    }
    throw std::invalid_argument("direction letter must be h, v or d");
}

struct CurveValidationError {
    int segment_index;  // 0-based; tables print these 1-based
    enum class Rule { Closure, Axis, Length, Direction } rule;
    std::string details;
};

// A validated closed 12-segment boundary curve.
struct PLCycle {
    std::vector<Segment3> segments;
    std::vector<int> declared_lengths;
    std::vector<char> declared_dirs;
    DirConvention convention = kDefaultConvention;

    std::vector<Vec3> vertices() const {
        std::vector<Vec3> v;
        for (const Segment3& s : segments) v.push_back(s.a);
        return v;
    }

    Rational total_length() const {
        // all segments are axis-aligned, so length = |delta| on the one axis
        Rational sum(0);
        for (const Segment3& s : segments) {
            int ax = s.axis();
            sum += (s.b[ax] - s.a[ax]).abs();
        }
        return sum;
    }

    std::set<std::pair<Vec3, Vec3>> segment_set() const {
        std::set<std::pair<Vec3, Vec3>> out;
        for (const Segment3& s : segments) out.insert(s.sorted());
        return out;
    }
};

namespace detail {

inline RawSegment rs(int a1, int a2, int a3, int b1, int b2, int b3, int len, char dir) {
    return {pt(a1, a2, a3), pt(b1, b2, b3), len, dir};
}

}  // namespace detail

// The four boundary-curve tables, verbatim (including the known misprints
// in table 2, rows 10 and 11).
inline std::vector<RawSegment> curve_as_printed(int i) {
    using detail::rs;
    switch (i) {
        case 1:
            return {rs(1, 0, 3, 2, 0, 3, 1, 'h'), rs(2, 0, 3, 2, 0, 1, 2, 'v'), rs(2, 0, 1, 2, 3, 1, 3, 'd'),
                    rs(2, 3, 1, 0, 3, 1, 2, 'h'), rs(0, 3, 1, 0, 3, 2, 1, 'v'), rs(0, 3, 2, 0, 1, 2, 2, 'd'),
                    rs(0, 1, 2, 3, 1, 2, 3, 'h'), rs(3, 1, 2, 3, 1, 0, 2, 'v'), rs(3, 1, 0, 3, 2, 0, 1, 'd'),
                    rs(3, 2, 0, 1, 2, 0, 2, 'h'), rs(1, 2, 0, 1, 2, 3, 3, 'v'), rs(1, 2, 3, 1, 0, 3, 2, 'd')};
        case 2:
            return {rs(1, 0, 0, 2, 0, 0, 1, 'h'), rs(2, 0, 0, 2, 2, 0, 2, 'v'), rs(2, 2, 0, 2, 2, 3, 3, 'd'),
                    rs(2, 2, 3, 0, 2, 3, 2, 'h'), rs(0, 2, 3, 0, 1, 3, 1, 'v'), rs(0, 1, 3, 0, 1, 1, 2, 'd'),
                    rs(0, 1, 1, 3, 1, 1, 3, 'h'), rs(3, 1, 1, 3, 3, 1, 2, 'v'), rs(3, 3, 1, 3, 3, 2, 1, 'd'),
                    rs(3, 3, 2, 3, 3, 1, 2, 'h'), rs(3, 3, 1, 1, 0, 2, 3, 'v'), rs(1, 0, 2, 1, 0, 0, 2, 'd')};
        case 3:
            return {rs(1, 3, 3, 2, 3, 3, 1, 'h'), rs(2, 3, 3, 2, 1, 3, 2, 'v'), rs(2, 1, 3, 2, 1, 0, 3, 'd'),
                    rs(2, 1, 0, 0, 1, 0, 2, 'h'), rs(0, 1, 0, 0, 2, 0, 1, 'v'), rs(0, 2, 0, 0, 2, 2, 2, 'd'),
                    rs(0, 2, 2, 3, 2, 2, 3, 'h'), rs(3, 2, 2, 3, 0, 2, 2, 'v'), rs(3, 0, 2, 3, 0, 1, 1, 'd'),
                    rs(3, 0, 1, 1, 0, 1, 2, 'h'), rs(1, 0, 1, 1, 3, 1, 3, 'v'), rs(1, 3, 1, 1, 3, 3, 2, 'd')};
        case 4:
            return {rs(2, 3, 0, 1, 3, 0, 1, 'h'), rs(1, 3, 0, 1, 1, 0, 2, 'v'), rs(1, 1, 0, 1, 1, 3, 3, 'd'),
                    rs(1, 1, 3, 3, 1, 3, 2, 'h'), rs(3, 1, 3, 3, 2, 3, 1, 'v'), rs(3, 2, 3, 3, 2, 1, 2, 'd'),
                    rs(3, 2, 1, 0, 2, 1, 3, 'h'), rs(0, 2, 1, 0, 0, 1, 2, 'v'), rs(0, 0, 1, 0, 0, 2, 1, 'd'),
                    rs(0, 0, 2, 2, 0, 2, 2, 'h'), rs(2, 0, 2, 2, 3, 2, 3, 'v'), rs(2, 3, 2, 2, 3, 0, 2, 'd')};
    }
    throw std::invalid_argument("curve index must be 1..4");
}

struct ValidationResult {
    std::optional<PLCycle> cycle;
    std::vector<CurveValidationError> errors;
    DirConvention convention = kDefaultConvention;
    bool ok() const { return cycle.has_value(); }
};

namespace detail {

inline std::vector<CurveValidationError> violations(const std::vector<RawSegment>& raw,
                                                    const DirConvention& conv) {
    using Rule = CurveValidationError::Rule;
    std::vector<CurveValidationError> errs;
    int n = (int)raw.size();
    for (int k = 0; k < n; ++k) {
        const RawSegment& s = raw[k];
        const RawSegment& next = raw[(k + 1) % n];
        if (s.b != next.a)
            errs.push_back({k, Rule::Closure,
                            "segment ends at " + s.b.str() + " but the next starts at " + next.a.str()});
        if (s.a == s.b) {
            errs.push_back({k, Rule::Axis, "zero-length segment"});
            continue;
        }
        Vec3 d = s.b - s.a;
        int varying = -1, nvary = 0;
        for (int i = 0; i < 3; ++i)
            if (!d[i].is_zero()) { varying = i; ++nvary; }
        if (nvary != 1) {
            errs.push_back({k, Rule::Axis, "segment " + s.a.str() + "-" + s.b.str() + " is not axis-aligned"});
            continue;
        }
        Rational len = d[varying].abs();
        if (len != Rational(s.declared_length))
            errs.push_back({k, Rule::Length,
                            "length " + len.str() + " differs from declared " + std::to_string(s.declared_length)});
        if (varying != convention_coord(conv, s.declared_dir))
            errs.push_back({k, Rule::Direction,
                            std::string("varies coordinate ") + std::to_string(varying + 1) +
                                " but is declared '" + s.declared_dir + "'"});
        // consecutive segments must turn
        const RawSegment& prev = raw[(k + n - 1) % n];
        Vec3 dp = prev.b - prev.a;
        if (prev.a != prev.b && cross(dp, d).is_zero() && prev.b == s.a)
            errs.push_back({k, Rule::Axis, "collinear with the previous segment"});
    }
    return errs;
}

inline const std::array<DirConvention, 6>& all_conventions() {
    static const std::array<DirConvention, 6> c = {
        DirConvention{0, 1, 2}, DirConvention{0, 2, 1}, DirConvention{1, 0, 2},
        DirConvention{1, 2, 0}, DirConvention{2, 0, 1}, DirConvention{2, 1, 0}};
    return c;
}

}  // namespace detail

// Validate a raw 12-segment table. The direction letters are matched under
// the default h1/v2/d3 reading first; if some permuted reading of {h,v,d}
// fits with strictly fewer violations, that best-fit convention is adopted
// and reported (table 1 needs h1/v3/d2; the others fit the default).
inline ValidationResult validate_curve(const std::vector<RawSegment>& raw) {
    ValidationResult res;
    if (raw.size() != 12) {
        res.errors.push_back({0, CurveValidationError::Rule::Closure, "expected 12 segments"});
        return res;
    }
    DirConvention best = kDefaultConvention;
    std::vector<CurveValidationError> best_errs = detail::violations(raw, kDefaultConvention);
    for (const DirConvention& conv : detail::all_conventions()) {
        std::vector<CurveValidationError> errs = detail::violations(raw, conv);
        if (errs.size() < best_errs.size()) {
            best = conv;
            best_errs = std::move(errs);
        }
    }
    res.convention = best;
    res.errors = best_errs;
    if (!best_errs.empty()) return res;
    PLCycle cycle;
    cycle.convention = best;
    for (const RawSegment& s : raw) {
        cycle.segments.emplace_back(s.a, s.b);
        cycle.declared_lengths.push_back(s.declared_length);
        cycle.declared_dirs.push_back(s.declared_dir);
    }
    res.cycle = std::move(cycle);
    return res;
}

struct SegmentDiff {
    int segment_index;  // 0-based
    RawSegment printed;
    RawSegment corrected;
};

struct CanonicalCurve {
    PLCycle cycle;
    std::vector<SegmentDiff> diffs;  // empty when the table was already valid
};

namespace detail {

// Repair a table by resolving runs of broken segments between trusted
// anchor vertices, using the declared (length, direction) tokens as hard
// constraints and [0,3]^3 membership to prune. The fix must be unique.
inline std::vector<RawSegment> repair(const std::vector<RawSegment>& raw, const DirConvention& conv,
                                      const std::vector<CurveValidationError>& errs,
                                      std::vector<SegmentDiff>& diffs) {
    int n = (int)raw.size();
    std::vector<bool> bad(n, false);
    for (const CurveValidationError& e : errs) bad[e.segment_index] = true;
    std::vector<RawSegment> fixed = raw;

    int k = 0;
    while (k < n) {
        if (!bad[k]) { ++k; continue; }
        int run_start = k, run_end = k;
        while (run_end + 1 < n && bad[run_end + 1]) ++run_end;
        // anchors: end vertex of the previous good segment, start of the next
        Vec3 from = raw[(run_start + n - 1) % n].b;
        Vec3 to = raw[(run_end + 1) % n].a;
        int len = run_end - run_start + 1;

        std::vector<std::vector<Vec3>> solutions;
        std::vector<Vec3> chain = {from};
        auto in_box = [](const Vec3& p) {
            for (int i = 0; i < 3; ++i)
                if (p[i] < Rational(0) || p[i] > Rational(3)) return false;
            return true;
        };
        auto rec = [&](auto&& self, int idx) -> void {
            if (idx == len) {
                if (chain.back() == to) solutions.push_back(chain);
                return;
            }
            const RawSegment& decl = raw[run_start + idx];
            int axis = convention_coord(conv, decl.declared_dir);
            for (int s : {1, -1}) {
                Vec3 nxt = chain.back();
                nxt[axis] = nxt[axis] + Rational(s * decl.declared_length);
                if (!in_box(nxt)) continue;
                chain.push_back(nxt);
                self(self, idx + 1);
                chain.pop_back();
            }
        };
        rec(rec, 0);
        if (solutions.size() != 1)
            throw std::logic_error("curve repair: " + std::to_string(solutions.size()) +
                                   " candidate completions for a broken run");
        for (int j = 0; j < len; ++j) {
            RawSegment corr = raw[run_start + j];
            corr.a = solutions[0][j];
            corr.b = solutions[0][j + 1];
            if (corr.a != raw[run_start + j].a || corr.b != raw[run_start + j].b)
                diffs.push_back({run_start + j, raw[run_start + j], corr});
            fixed[run_start + j] = corr;
        }
        k = run_end + 1;
    }
    return fixed;
}

}  // namespace detail

// The canonical (corrected) curve C_i. Table 2 gets rows 10-11 amended to
// [332,132]_2^h and [132,102]_3^v; tables 1, 3, 4 are already valid.
inline CanonicalCurve canonical_curve(int i) {
    std::vector<RawSegment> raw = curve_as_printed(i);
    ValidationResult first = validate_curve(raw);
    CanonicalCurve out;
    if (first.ok()) {
        out.cycle = *first.cycle;
        return out;
    }
    std::vector<RawSegment> fixed = detail::repair(raw, first.convention, first.errors, out.diffs);
    ValidationResult second = validate_curve(fixed);
    if (!second.ok()) throw std::logic_error("curve repair did not converge");
    out.cycle = *second.cycle;
    return out;
}

// Centers of the three unit-length segments (the triangle vertices of the
// polylink correspondence).
inline std::vector<Vec3> unit_segment_centers(const PLCycle& c) {
    std::vector<Vec3> centers;
    for (const Segment3& s : c.segments)
        if (s.length_squared() == Rational(1)) centers.push_back(midpoint(s.a, s.b));
    if (centers.size() != 3)
        throw std::domain_error("expected exactly three unit segments, found " + std::to_string(centers.size()));
    return centers;
}

struct CurveIntersection {
    std::vector<Vec3> points;
    std::vector<Segment3> overlaps;  // any entry refutes the dimension-0 claim
    bool dimension_zero() const { return overlaps.empty(); }
};

// Exhaustive 12x12 segment-pair intersection of two distinct curves.
inline CurveIntersection curve_pairwise_intersection(const PLCycle& ci, const PLCycle& cj) {
    CurveIntersection out;
    std::set<Vec3> pts;
    for (const Segment3& s : ci.segments)
        for (const Segment3& t : cj.segments) {
            SegmentIntersection r = segment_intersection(s, t);
            if (r.kind == SegmentIntersection::Kind::Point) pts.insert(r.p);
            else if (r.kind == SegmentIntersection::Kind::Segment) out.overlaps.emplace_back(r.p, r.q);
        }
    out.points.assign(pts.begin(), pts.end());
    return out;
}

}  // namespace mobius4::curves
