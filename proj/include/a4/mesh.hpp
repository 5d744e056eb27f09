#pragma once

#include <array>
#include <string>
#include <vector>

#include "a4/field.hpp"

namespace a4 {

using Point3 = std::array<FieldScalar, 3>;

/// Watertight polyhedral surface of a convex point set.  Faces are
/// index cycles into `vertices`, ordered counter-clockwise seen from
/// outside; edges are derived from the face lattice.
struct Mesh3D {
    std::vector<Point3> vertices;
    std::vector<std::vector<int>> faces;
    std::vector<std::pair<int, int>> edges;  // i < j, sorted
    std::string name;
};

/// Convex hull by brute-force supporting-plane enumeration: every point
/// triple whose plane has all remaining points (weakly) on one side
/// contributes a face; coplanar triples merge into one polygon.  All
/// side tests are exact; only the cyclic ordering of each face uses
/// floats.  Throws std::invalid_argument naming the rank when the
/// points do not affinely span 3D.
Mesh3D extract_faces(std::vector<Point3> points, std::string name = "");

/// OFF text: header, counts "V F E", float vertices, face index lines.
std::string to_off(const Mesh3D& mesh, int digits = 12);
/// Wavefront OBJ text (1-based indices).
std::string to_obj(const Mesh3D& mesh, int digits = 12);

}  // namespace a4
