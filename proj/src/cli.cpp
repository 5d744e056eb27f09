#include "a4/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "a4/json_io.hpp"

namespace a4 {

namespace {

struct CommonOpts {
    std::string format = "json";
    int digits = 12;
    std::string out;
    bool exact = false;

    JsonOptions json() const { return {digits, exact}; }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool mesh_formats) {
    auto formats = mesh_formats ? std::vector<std::string>{"json", "off", "obj"}
                                : std::vector<std::string>{"json"};
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember(formats));
    cmd->add_option("--digits", o.digits, "significant digits for floats")
        ->check(CLI::Range(1, 17));
    cmd->add_option("--out", o.out, "write to file instead of stdout");
    cmd->add_flag("--exact", o.exact, "suppress float fields in JSON");
}

int emit(const CommonOpts& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(o.out);
    if (!f) {
        std::cerr << "cannot open " << o.out << "\n";
        return 1;
    }
    f << text;
    return 0;
}

int emit_json(const CommonOpts& o, const nlohmann::json& j) {
    return emit(o, j.dump(2) + "\n");
}

Weight to_weight(const std::vector<long>& a) {
    return {Rational(a[0]), Rational(a[1]), Rational(a[2]), Rational(a[3])};
}

std::vector<Point3> slice_points(const A3Slice& s) {
    std::vector<Point3> pts;
    for (const auto& v : s.weights) {
        auto x = to_p_coordinates(weight_to_quaternion(v));
        pts.push_back({x[1], x[2], x[3]});
    }
    return pts;
}

std::string slice_tag(const A3Slice& s) {
    std::ostringstream os;
    os << "slice_" << rational_str(s.labels[0]) << rational_str(s.labels[1])
       << rational_str(s.labels[2]) << "_q" << rational_str(s.charge);
    return os.str();
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"exact A4 orbit polytopes, 3D projections and duals"};
    app.require_subcommand(1);

    std::vector<long> labels;
    CommonOpts o;
    int ref = 0, slice_index = -1;

    auto add_weight = [&](CLI::App* cmd) {
        cmd->add_option("labels", labels, "four Dynkin labels")
            ->expected(4)
            ->required();
    };

    auto* orbit_cmd = app.add_subcommand("orbit", "orbit vertex list");
    add_weight(orbit_cmd);
    add_common(orbit_cmd, o, false);

    auto* project_cmd = app.add_subcommand("project", "W(A3) slice decomposition");
    add_weight(project_cmd);
    add_common(project_cmd, o, true);
    project_cmd->add_option("--slice", slice_index, "emit only this slice (mesh formats)");

    auto* dual_cmd = app.add_subcommand("dual", "dual polytope report");
    add_weight(dual_cmd);
    add_common(dual_cmd, o, false);
    dual_cmd->add_option("--ref", ref, "cell class normalized to scale 1")
        ->check(CLI::Range(0, 4));

    auto* cell_cmd = app.add_subcommand("cell", "dual cell at the seed vertex");
    add_weight(cell_cmd);
    add_common(cell_cmd, o, true);
    cell_cmd->add_option("--ref", ref, "cell class normalized to scale 1")
        ->check(CLI::Range(0, 4));

    auto* groups_cmd = app.add_subcommand("groups", "binary quaternion sets");
    add_common(groups_cmd, o, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (orbit_cmd->parsed()) {
            auto w = to_weight(labels);
            if (w == Weight{}) std::cerr << "warning: trivial orbit of the zero weight\n";
            return emit_json(o, orbit_report(w, o.json()));
        }
        if (project_cmd->parsed()) {
            auto w = to_weight(labels);
            if (o.format == "json") return emit_json(o, project_report(w, o.json()));
            auto slices = distinct_slices(w);
            if (slice_index >= 0) {
                if (slice_index >= int(slices.size())) {
                    std::cerr << "slice index out of range (have " << slices.size()
                              << ")\n";
                    return 1;
                }
                auto mesh = extract_faces(slice_points(slices[slice_index]),
                                          slice_tag(slices[slice_index]));
                return emit(o, o.format == "off" ? to_off(mesh, o.digits)
                                                 : to_obj(mesh, o.digits));
            }
            if (o.format == "off" && slices.size() > 1) {
                std::cerr << "multiple slices; pick one with --slice\n";
                return 1;
            }
            std::string text;
            for (const auto& s : slices) {
                if (s.weights.size() < 4) {
                    std::cerr << "skipping degenerate " << slice_tag(s) << "\n";
                    continue;
                }
                auto mesh = extract_faces(slice_points(s), slice_tag(s));
                text += o.format == "off" ? to_off(mesh, o.digits) : to_obj(mesh, o.digits);
            }
            return emit(o, text);
        }
        if (dual_cmd->parsed())
            return emit_json(o, dual_report(to_weight(labels), ref, o.json()));
        if (cell_cmd->parsed()) {
            auto w = to_weight(labels);
            auto rep = dual_cell_geometry(w, w, ref);
            std::vector<Point3> pts(rep.raw_coords.begin(), rep.raw_coords.end());
            auto mesh = extract_faces(pts, "dual_cell");
            if (o.format == "json") return emit_json(o, mesh_report(mesh, o.json()));
            return emit(o, o.format == "off" ? to_off(mesh, o.digits)
                                             : to_obj(mesh, o.digits));
        }
        if (groups_cmd->parsed()) {
            auto j = groups_report(o.json());
            int rc = emit_json(o, j);
            if (rc != 0) return rc;
            bool ok = j["representation_ok"].get<bool>() &&
                      j["weyl_order"] == 120 && j["pair_form_order"] == 120 &&
                      j["extension_order"] == 240;
            for (const auto& s : j["sets"])
                if (s["name"] == "T" || s["name"] == "O" || s["name"] == "I" ||
                    s["name"] == "I~")
                    ok = ok && s["is_group"].get<bool>();
            if (!ok) {
                std::cerr << "internal verification failed\n";
                return 2;
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace a4
