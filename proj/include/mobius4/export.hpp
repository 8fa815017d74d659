#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "mobius4/claims.hpp"

namespace mobius4::io {

using nlohmann::json;

// --- claim reports -----------------------------------------------------------

inline std::string ledger_text(const claims::Ledger& ledger) {
    std::string out;
    for (const claims::ClaimReport& r : ledger.reports) {
        out += r.id + ": " + claims::verdict_str(r.verdict) + " - " + r.title + "\n";
        for (const std::string& d : r.details) out += "    " + d + "\n";
    }
    int confirmed = 0, corrected = 0, refuted = 0, undecided = 0;
    for (const claims::ClaimReport& r : ledger.reports) {
        switch (r.verdict) {
            case claims::Verdict::Confirmed: ++confirmed; break;
            case claims::Verdict::Corrected: ++corrected; break;
            case claims::Verdict::Refuted: ++refuted; break;
            case claims::Verdict::Undecided: ++undecided; break;
        }
    }
    out += "----\n";
    out += std::to_string(ledger.reports.size()) + " claims: " + std::to_string(confirmed) +
           " confirmed, " + std::to_string(corrected) + " corrected, " + std::to_string(refuted) +
           " refuted, " + std::to_string(undecided) + " undecided\n";
    return out;
}

inline std::string ledger_json(const claims::Ledger& ledger) {
    json doc;
    doc["schema"] = "mobius4/claims-v1";
    doc["claims"] = json::array();
    for (const claims::ClaimReport& r : ledger.reports) {
        json c;
        c["id"] = r.id;
        c["title"] = r.title;
        c["kind"] = r.kind == claims::Kind::Internal ? "internal" : "published";
        c["verdict"] = claims::verdict_str(r.verdict);
        c["details"] = r.details;
        doc["claims"].push_back(c);
    }
    return doc.dump(2) + "\n";
}

// --- meshes --------------------------------------------------------------------

// OFF with exact decimal coordinates; quarter-integers need at most two
// decimal places.
inline std::string strip_mesh_off(const strips::StripMesh& m) {
    std::map<std::pair<int, int>, int> edges;
    for (const auto& t : m.triangles)
        for (int e = 0; e < 3; ++e) {
            int a = t[e], b = t[(e + 1) % 3];
            edges[{std::min(a, b), std::max(a, b)}] = 1;
        }
    std::string out = "OFF\n";
    out += std::to_string(m.vertices.size()) + " " + std::to_string(m.triangles.size()) + " " +
           std::to_string(edges.size()) + "\n";
    for (const Vec3& v : m.vertices)
        out += v.x.decimal_str() + " " + v.y.decimal_str() + " " + v.z.decimal_str() + "\n";
    for (const auto& t : m.triangles)
        out += "3 " + std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]) +
               "\n";
    return out;
}

inline std::string strip_mesh_obj(const strips::StripMesh& m) {
    std::string out;
    for (const Vec3& v : m.vertices)
        out += "v " + v.x.decimal_str() + " " + v.y.decimal_str() + " " + v.z.decimal_str() + "\n";
    for (const auto& t : m.triangles)
        out += "f " + std::to_string(t[0] + 1) + " " + std::to_string(t[1] + 1) + " " +
               std::to_string(t[2] + 1) + "\n";
    return out;
}

inline std::string hollow_triangle_off(int i) {
    poly::AnnulusMesh m = poly::hollow_triangle_mesh(i);
    std::set<std::pair<int, int>> edges;
    for (const auto& t : m.triangles)
        for (int e = 0; e < 3; ++e) {
            int a = t[e], b = t[(e + 1) % 3];
            edges.insert({std::min(a, b), std::max(a, b)});
        }
    std::string out = "OFF\n6 6 " + std::to_string(edges.size()) + "\n";
    for (const Vec3& v : m.vertices)
        out += v.x.decimal_str() + " " + v.y.decimal_str() + " " + v.z.decimal_str() + "\n";
    for (const auto& t : m.triangles)
        out += "3 " + std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]) +
               "\n";
    return out;
}

// --- graphs ----------------------------------------------------------------------

inline const char* color_name(int c) {
    switch (c) {
        case 1: return "red";
        case 2: return "blue";
        case 3: return "green";
        case 4: return "brown";
    }
    return "black";
}

inline std::string factorization_dot(const cube4::OneFactorization& f, const std::string& name) {
    std::string out = "graph " + name + " {\n";
    for (const auto& [e, c] : f.color)
        out += "  " + std::to_string(e.first) + " -- " + std::to_string(e.second) + " [color=" +
               color_name(c) + "];\n";
    out += "}\n";
    return out;
}

inline std::string quotient_dot(const cube4::QuotientFactorization& f, const std::string& name) {
    std::string out = "graph " + name + " {\n";
    for (const auto& [e, c] : f.color)
        out += "  " + std::to_string(e.first) + " -- " + std::to_string(e.second) + " [color=" +
               color_name(c) + "];\n";
    out += "}\n";
    return out;
}

inline std::string complex_dot(const surf::FaceComplex& fc, const std::string& name) {
    std::string out = "graph " + name + " {\n";
    for (int i = 0; i < (int)fc.faces.size(); ++i) {
        out += "  // face " + std::to_string(i) + ":";
        for (int v : fc.faces[i]) out += " " + std::to_string(v);
        out += "\n";
    }
    std::set<std::pair<int, int>> edges;
    for (const std::vector<int>& walk : fc.faces)
        for (int p = 0; p < (int)walk.size(); ++p)
            edges.insert(surf::FaceComplex::ekey(walk[p], walk[(p + 1) % walk.size()]));
    for (const auto& e : edges) {
        out += "  " + std::to_string(e.first) + " -- " + std::to_string(e.second);
        if (fc.edge_color.count(e)) out += " [color=" + std::string(color_name(fc.edge_color.at(e))) + "]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

// --- tables ----------------------------------------------------------------------

inline std::string euler_square_csv() {
    const claims::Context& ctx = claims::Context::get();
    cube4::EulerSquare sq = cube4::euler_square(ctx.projection.fstar, ctx.projection.pstar);
    std::string out;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            out += std::to_string(sq.cell[i][j].first) + std::to_string(sq.cell[i][j].second);
            out += j < 3 ? "," : "\n";
        }
    }
    return out;
}

inline std::string gauss_codes_text() {
    const claims::Context& ctx = claims::Context::get();
    std::string out;
    for (int i = 0; i < 4; ++i) {
        knots::Polyline3 c = knots::polyline_of(ctx.curve[i].cycle);
        knots::KnotDiagram d = knots::generic_projection({c});
        out += "C" + std::to_string(i + 1) + " " + knots::gauss_code(d) + "\n";
    }
    return out;
}

// --- json exports -------------------------------------------------------------------

inline json vec_json(const Vec3& v) {
    // exact integer triples where possible, else decimal strings
    json j = json::array();
    for (int i = 0; i < 3; ++i) {
        if (v[i].is_integer()) j.push_back(v[i].num);
        else j.push_back(v[i].decimal_str());
    }
    return j;
}

inline std::string curves_json() {
    const claims::Context& ctx = claims::Context::get();
    json doc;
    doc["schema"] = "mobius4/curves-v1";
    doc["curves"] = json::array();
    for (int i = 0; i < 4; ++i) {
        json c;
        c["name"] = "C" + std::to_string(i + 1);
        c["segments"] = json::array();
        for (const Segment3& s : ctx.curve[i].cycle.segments)
            c["segments"].push_back(json::array({vec_json(s.a), vec_json(s.b)}));
        doc["curves"].push_back(c);
    }
    return doc.dump(2) + "\n";
}

inline std::string isometries_json() {
    const claims::Context& ctx = claims::Context::get();
    json doc;
    doc["schema"] = "mobius4/isometries-v1";
    doc["elements"] = json::array();
    for (const CubeIsometry& g : all_cube_isometries()) {
        json e;
        e["matrix"] = json::array();
        for (int i = 0; i < 3; ++i) e["matrix"].push_back({g.m[i][0], g.m[i][1], g.m[i][2]});
        e["rotation"] = g.is_rotation();
        e["preserves_compound"] = ctx.compound_group.contains(g);
        doc["elements"].push_back(e);
    }
    return doc.dump(2) + "\n";
}

inline std::string factorization_json(const cube4::OneFactorization& f, const std::string& name) {
    json doc;
    doc["schema"] = "mobius4/factorization-v1";
    doc["name"] = name;
    doc["edges"] = json::array();
    for (const auto& [e, c] : f.color)
        doc["edges"].push_back({{"u", e.first}, {"v", e.second}, {"color", c}});
    return doc.dump(2) + "\n";
}

inline std::string complexes_json() {
    const claims::Context& ctx = claims::Context::get();
    json doc;
    doc["schema"] = "mobius4/complexes-v1";
    auto faces_json = [](const surf::FaceComplex& fc) {
        json a = json::array();
        for (const std::vector<int>& w : fc.faces) a.push_back(w);
        return a;
    };
    doc["type_pair_tori"] = json::array();
    for (auto [a, b] : {std::pair{cube4::tag_1234(), cube4::tag_1324()},
                        std::pair{cube4::tag_1234(), cube4::tag_1243()},
                        std::pair{cube4::tag_1324(), cube4::tag_1243()}}) {
        json entry;
        entry["tags"] = {a.str(), b.str()};
        entry["faces"] = faces_json(surf::type_pair_complex(ctx.rainbow.f, a, b));
        doc["type_pair_tori"].push_back(entry);
    }
    doc["deleted_edge_tori"] = json::array();
    for (const surf::ToroidalSubgraph& s : surf::twelve_toroidal_subgraphs(ctx.rainbow.f)) {
        json entry;
        entry["tag"] = s.tag.str();
        entry["planes"] = {s.family.first, s.family.second};
        entry["deleted_colors"] = {s.deleted_pair.first, s.deleted_pair.second};
        entry["deleted_edges"] = json::array();
        for (const cube4::Edge& e : s.deleted_edges) entry["deleted_edges"].push_back({e.first, e.second});
        entry["faces"] = faces_json(s.complex);
        entry["face_types"] = s.face_types;
        doc["deleted_edge_tori"].push_back(entry);
    }
    doc["k44_tori"] = json::array();
    for (const cube4::ColorTypeTag& t : {cube4::tag_1234(), cube4::tag_1243(), cube4::tag_1324()}) {
        surf::K44TypeComplex kc = surf::k44_type_complex(ctx.rainbow.f, ctx.projection.fstar, t);
        json entry;
        entry["tag"] = t.str();
        entry["found"] = kc.found;
        if (kc.found) entry["faces"] = faces_json(kc.complex);
        doc["k44_tori"].push_back(entry);
    }
    return doc.dump(2) + "\n";
}

// --- enumeration reports ----------------------------------------------------------

inline std::string enumerate_rainbow_text() {
    std::vector<cube4::OneFactorization> all = cube4::enumerate_rainbow_factorizations();
    std::string out = std::to_string(all.size()) + " rainbow factorizations\n";
    int index = 0;
    for (const cube4::OneFactorization& f : all) {
        out += std::to_string(index++) + ":";
        for (const auto& [e, c] : f.color) out += " " + std::to_string(c);
        out += "\n";
    }
    return out;
}

inline std::string enumerate_rainbow_json() {
    json doc;
    doc["schema"] = "mobius4/enumeration-v1";
    doc["kind"] = "rainbow-factorizations";
    doc["items"] = json::array();
    for (const cube4::OneFactorization& f : cube4::enumerate_rainbow_factorizations()) {
        json edges = json::array();
        for (const auto& [e, c] : f.color)
            edges.push_back({{"u", e.first}, {"v", e.second}, {"color", c}});
        doc["items"].push_back(edges);
    }
    return doc.dump(2) + "\n";
}

inline std::string enumerate_toroidal_text() {
    const claims::Context& ctx = claims::Context::get();
    std::vector<surf::ToroidalSubgraph> twelve = surf::twelve_toroidal_subgraphs(ctx.rainbow.f);
    std::string out = std::to_string(twelve.size()) + " toroidal subgraphs\n";
    for (const surf::ToroidalSubgraph& s : twelve) {
        out += s.tag.str() + " planes(" + std::to_string(s.family.first) +
               std::to_string(s.family.second) + ") minus{" + std::to_string(s.deleted_pair.first) +
               std::to_string(s.deleted_pair.second) + "} torus=" +
               (s.report.is_torus() ? "yes" : "no") + " faces:";
        for (const std::string& t : s.face_types) out += " " + t;
        out += "\n";
    }
    return out;
}

inline std::string enumerate_toroidal_json() {
    const claims::Context& ctx = claims::Context::get();
    json doc;
    doc["schema"] = "mobius4/enumeration-v1";
    doc["kind"] = "toroidal-subgraphs";
    doc["items"] = json::array();
    for (const surf::ToroidalSubgraph& s : surf::twelve_toroidal_subgraphs(ctx.rainbow.f)) {
        json entry;
        entry["tag"] = s.tag.str();
        entry["planes"] = {s.family.first, s.family.second};
        entry["deleted_colors"] = {s.deleted_pair.first, s.deleted_pair.second};
        entry["torus"] = s.report.is_torus();
        entry["face_types"] = s.face_types;
        doc["items"].push_back(entry);
    }
    return doc.dump(2) + "\n";
}

}  // namespace mobius4::io
