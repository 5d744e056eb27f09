#include "a4/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace a4 {

using nlohmann::json;

namespace {

double round_sig(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return std::strtod(buf, nullptr);
}

json exact_triple(const std::array<FieldScalar, 3>& p) {
    return json::array({p[0].str(), p[1].str(), p[2].str()});
}

json float_triple(const std::array<FieldScalar, 3>& p, const JsonOptions& opt) {
    return json::array({round_sig(p[0].to_double(), opt.digits),
                        round_sig(p[1].to_double(), opt.digits),
                        round_sig(p[2].to_double(), opt.digits)});
}

}  // namespace

json json_scalar(const FieldScalar& s, const JsonOptions& opt) {
    json j{{"exact", s.str()}};
    if (!opt.exact_only) j["value"] = round_sig(s.to_double(), opt.digits);
    return j;
}

json json_weight(const Weight& w) {
    json j = json::array();
    for (const auto& a : w) j.push_back(rational_str(a));
    return j;
}

json json_quaternion(const Quaternion& q, const JsonOptions& opt) {
    json exact = json::array();
    for (int i = 0; i < 4; ++i) exact.push_back(q[i].str());
    json j{{"exact", exact}};
    if (!opt.exact_only) {
        json val = json::array();
        for (int i = 0; i < 4; ++i) val.push_back(round_sig(q[i].to_double(), opt.digits));
        j["value"] = val;
    }
    return j;
}

json orbit_report(const Weight& w, const JsonOptions& opt) {
    auto o = orbit(w);
    json verts = json::array(), quats = json::array();
    for (const auto& v : o) {
        verts.push_back(json_weight(v));
        quats.push_back(json_quaternion(weight_to_quaternion(v), opt));
    }
    return {{"weight", json_weight(w)},
            {"orbit_size", o.size()},
            {"stabilizer_order", stabilizer(w).order()},
            {"vertices", verts},
            {"quaternions", quats}};
}

json project_report(const Weight& w, const JsonOptions& opt) {
    json slices = json::array();
    for (const auto& s : distinct_slices(w)) {
        json labels = json::array();
        for (const auto& b : s.labels) labels.push_back(rational_str(b));
        json pe = json::array(), pf = json::array();
        for (const auto& v : s.weights) {
            auto x = to_p_coordinates(weight_to_quaternion(v));
            std::array<FieldScalar, 3> p{x[1], x[2], x[3]};
            pe.push_back(exact_triple(p));
            if (!opt.exact_only) pf.push_back(float_triple(p, opt));
        }
        json js{{"labels", labels},
                {"charge", rational_str(s.charge)},
                {"size", s.weights.size()},
                {"offset", json_scalar(s.offset(), opt)},
                {"points_exact", pe}};
        if (!opt.exact_only) js["points"] = pf;
        slices.push_back(std::move(js));
    }
    return {{"weight", json_weight(w)},
            {"orbit_size", orbit(w).size()},
            {"slices", slices}};
}

json dual_report(const Weight& w, int ref, const JsonOptions& opt) {
    auto types = cell_types(w);
    auto d = dual_polytope(w, ref);
    auto cell = dual_cell_geometry(w, w, ref);

    json jt = json::array();
    for (const auto& t : types)
        jt.push_back({{"k", t.k},
                      {"shape", t.shape},
                      {"count", t.count},
                      {"cell_vertices", t.cell_vertices}});
    json scales;
    for (const auto& [k, s] : d.scales) scales[std::to_string(k)] = rational_str(s);
    json shells = json::array();
    for (const auto& [k, sh] : d.shells) {
        json js{{"k", k},
                {"scale", rational_str(d.scales.at(k))},
                {"radius_sq", rational_str(sh.first)},
                {"count", sh.second}};
        if (!opt.exact_only)
            js["radius"] = round_sig(std::sqrt(sh.first.convert_to<double>()), opt.digits);
        shells.push_back(std::move(js));
    }
    json coords = json::array(), coords_f = json::array(), dist = json::array();
    for (const auto& c : cell.raw_coords) {
        coords.push_back(exact_triple(c));
        if (!opt.exact_only) coords_f.push_back(float_triple(c, opt));
    }
    for (const auto& q : cell.distances_sq) dist.push_back(rational_str(q));
    json sample{{"vertex", json_weight(cell.primal)},
                {"plane_constant", rational_str(cell.plane_constant)},
                {"norm_sq", rational_str(cell.norm_sq)},
                {"cell_vertex_count", cell.vertices.size()},
                {"frame_coords_exact", coords},
                {"distances_sq", dist}};
    if (!opt.exact_only) sample["frame_coords"] = coords_f;
    if (cell.norm) sample["norm"] = json_scalar(*cell.norm, opt);

    return {{"weight", json_weight(w)},
            {"cell_types", jt},
            {"scales", scales},
            {"dual_vertex_count", d.vertices.size()},
            {"dual_cell_count", d.cells.size()},
            {"shells", shells},
            {"sample_cell", sample}};
}

json groups_report(const JsonOptions& opt) {
    json sets = json::array();
    for (auto [name, label] : {std::pair{QSetName::T, "T"},
                               {QSetName::Tprime, "T'"},
                               {QSetName::O, "O"},
                               {QSetName::S, "S"},
                               {QSetName::I, "I"},
                               {QSetName::Itilde, "I~"}}) {
        auto set = build_set(name);
        json elems = json::array();
        for (const auto& q : set.elements) elems.push_back(json_quaternion(q, opt));
        sets.push_back({{"name", label},
                        {"size", set.size()},
                        {"is_group", verify_group(set).is_group()},
                        {"elements", elems}});
    }
    auto rep = verify_representation();
    return {{"sets", sets},
            {"weyl_order", generate_group().size()},
            {"pair_form_order", build_w_a4().size()},
            {"extension_order", build_aut_a4().size()},
            {"representation_ok", rep.ok},
            {"representation_detail", rep.detail}};
}

json mesh_report(const Mesh3D& mesh, const JsonOptions& opt) {
    json ve = json::array(), vf = json::array(), faces = json::array(),
         edges = json::array();
    for (const auto& p : mesh.vertices) {
        ve.push_back(exact_triple(p));
        if (!opt.exact_only) vf.push_back(float_triple(p, opt));
    }
    for (const auto& f : mesh.faces) faces.push_back(f);
    for (const auto& [a, b] : mesh.edges) edges.push_back(json::array({a, b}));
    json j{{"name", mesh.name},
           {"vertex_count", mesh.vertices.size()},
           {"face_count", mesh.faces.size()},
           {"edge_count", mesh.edges.size()},
           {"vertices_exact", ve},
           {"faces", faces},
           {"edges", edges}};
    if (!opt.exact_only) j["vertices"] = vf;
    return j;
}

}  // namespace a4
