#pragma once

#include "json.hpp"

#include "a4/dual.hpp"
#include "a4/mesh.hpp"
#include "a4/projection.hpp"

namespace a4 {

/// Serialization options shared by every report: floats are rendered to
/// `digits` significant digits; with exact_only the parallel float
/// fields are suppressed.
struct JsonOptions {
    int digits = 12;
    bool exact_only = false;
};

nlohmann::json json_scalar(const FieldScalar& s, const JsonOptions& opt);
nlohmann::json json_weight(const Weight& w);
nlohmann::json json_quaternion(const Quaternion& q, const JsonOptions& opt);

/// Vertex list of orbit(w) with stabilizer/orbit counts and quaternion
/// images.
nlohmann::json orbit_report(const Weight& w, const JsonOptions& opt);

/// Slice decomposition under W(A3): labels, charge, offset and 3D
/// points per distinct slice.
nlohmann::json project_report(const Weight& w, const JsonOptions& opt);

/// Dual polytope report: cell types, scales, shells and the dual cell
/// at the seed vertex in exact local coordinates.
nlohmann::json dual_report(const Weight& w, int ref, const JsonOptions& opt);

/// Binary quaternion sets with group-verification results, plus the
/// representation cross-check.
nlohmann::json groups_report(const JsonOptions& opt);

nlohmann::json mesh_report(const Mesh3D& mesh, const JsonOptions& opt);

}  // namespace a4
