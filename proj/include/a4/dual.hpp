#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "a4/quat_rep.hpp"

namespace a4 {

/// A class of 3D cells of the orbit polytope O(w): the orbit of w under
/// the rank-3 parabolic with node k removed, translated around by coset
/// representatives.  The center ray of the seed cell is ω_k.
struct CellType {
    int k = 0;                 // removed node, 1..4
    std::vector<int> J;        // {1..4} \ {k}
    std::string shape;         // e.g. "octahedron", "triangular prism"
    std::size_t count = 0;     // number of cells of this class
    std::size_t cell_vertices = 0;
};

struct Cell {
    int k = 0;
    GroupElement rep;             // coset representative
    std::vector<Weight> vertices; // rep · (parabolic(J) orbit of w), sorted
    Weight center;                // rep · s_k ω_k
};

struct DualPolytope {
    Weight seed;
    std::map<int, Rational> scales;       // k → s_k
    std::vector<Weight> vertices;         // ∪_k s_k·orbit(ω_k), sorted
    std::vector<std::vector<Weight>> cells;  // one per primal vertex
    // concentric shells: k → (radius², count)
    std::map<int, std::pair<Rational, std::size_t>> shells;
};

/// Exact local data of the dual cell sitting at one primal vertex: all
/// its vertices lie in the hyperplane (u, v) = plane_constant.
struct DualCellReport {
    Weight primal;
    std::vector<Weight> vertices;
    Rational plane_constant;      // shared (u, v)
    Rational norm_sq;             // (v, v)
    // coordinates on the frame q_i = e_i v: raw[i] = (u, e_i v); divide
    // by |v| for unit-frame coordinates (norm is set when |v| is exactly
    // representable)
    std::vector<std::array<FieldScalar, 3>> raw_coords;
    std::optional<FieldScalar> norm;
    std::vector<Rational> distances_sq;  // distinct pairwise, sorted ascending
};

/// Cell classes of O(w): k included iff the parabolic orbit spans an
/// affine 3-space.  Requires w dominant and nonzero.
std::vector<CellType> cell_types(const Weight& w);

/// All cells of class k, deduplicated by vertex set.  Centers carry the
/// scale s_k when scales are supplied, else raw ω_k.
std::vector<Cell> cells_of_type(const Weight& w, int k,
                                const std::map<int, Rational>& scales = {});

/// Cells of every class whose vertex set contains the given vertex.
/// Throws std::invalid_argument if vertex ∉ orbit(w).
std::vector<Cell> incident_cells(const Weight& w, const Weight& vertex);

/// Center scales s_k = (ω_ref, w)/(ω_k, w) that bring all incident cell
/// centers into the hyperplane orthogonal to w.  With ref = 0 the
/// reference class is the one with the smallest (ω_k, w); pass an
/// explicit incident k to normalize that class to 1 instead.
std::map<int, Rational> dual_scales(const Weight& w, int ref = 0);

DualPolytope dual_polytope(const Weight& w, int ref = 0);

DualCellReport dual_cell_geometry(const Weight& w, const Weight& vertex,
                                  int ref = 0);

}  // namespace a4
