#include "a4/dual.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace a4 {

namespace {

// rank of the set of difference vectors, by Gaussian elimination on the
// Dynkin coordinates (the metric is positive definite, so coordinate
// rank is geometric rank)
int affine_rank(const std::vector<Weight>& pts) {
    if (pts.empty()) return -1;
    std::vector<Weight> rows;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        Weight d;
        for (int j = 0; j < 4; ++j) d[j] = pts[i][j] - pts[0][j];
        rows.push_back(d);
    }
    int rank = 0;
    for (int col = 0; col < 4 && rank < int(rows.size()); ++col) {
        auto pivot = std::find_if(rows.begin() + rank, rows.end(),
                                  [col](const Weight& r) { return r[col] != 0; });
        if (pivot == rows.end()) continue;
        std::swap(*pivot, rows[rank]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i)
            if (rows[i][col] != 0) {
                Rational f = rows[i][col] / rows[rank][col];
                for (int j = col; j < 4; ++j) rows[i][j] -= f * rows[rank][j];
            }
        ++rank;
    }
    return rank;
}

std::string shape_name(const Weight& w, int k) {
    auto pos = [&](int node) { return w[node - 1] > 0; };
    if (k == 1 || k == 4) {
        // connected A3 on the remaining nodes
        int a = pos(k == 1 ? 2 : 1), b = pos(k == 1 ? 3 : 2), c = pos(k == 1 ? 4 : 3);
        if (a && b && c) return "truncated octahedron";
        if (a && c) return "cuboctahedron";
        if ((a && b) || (b && c)) return "truncated tetrahedron";
        if (b) return "octahedron";
        return "tetrahedron";
    }
    // A2 × A1: nodes {3,4} or {1,2} form the A2 factor
    bool hex = k == 2 ? (pos(3) && pos(4)) : (pos(1) && pos(2));
    return hex ? "hexagonal prism" : "triangular prism";
}

Weight omega_weight(int k) {
    Weight w{};
    w[k - 1] = 1;
    return w;
}

Weight scaled(const Weight& w, const Rational& s) {
    return {s * w[0], s * w[1], s * w[2], s * w[3]};
}

}  // namespace

std::vector<CellType> cell_types(const Weight& w) {
    if (!is_dominant(w)) throw std::invalid_argument("weight must be dominant");
    if (w == Weight{}) throw std::invalid_argument("weight must be nonzero");
    std::vector<CellType> out;
    for (int k = 1; k <= 4; ++k) {
        CellType t;
        t.k = k;
        for (int j = 1; j <= 4; ++j)
            if (j != k) t.J.push_back(j);
        auto p = parabolic(t.J);
        auto cell = orbit_under(p, w);
        if (affine_rank(cell) != 3) continue;
        t.shape = shape_name(w, k);
        t.cell_vertices = cell.size();
        t.count = cells_of_type(w, k).size();
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<Cell> cells_of_type(const Weight& w, int k,
                                const std::map<int, Rational>& scales) {
    std::vector<int> J;
    for (int j = 1; j <= 4; ++j)
        if (j != k) J.push_back(j);
    auto seed = orbit_under(parabolic(J), w);
    Rational s = scales.count(k) ? scales.at(k) : Rational(1);
    Weight center = scaled(omega_weight(k), s);

    std::set<std::vector<Weight>> seen;
    std::vector<Cell> out;
    for (const auto& g : generate_group()) {
        std::vector<Weight> verts;
        verts.reserve(seed.size());
        for (const auto& v : seed) verts.push_back(g.apply(v));
        std::sort(verts.begin(), verts.end());
        if (!seen.insert(verts).second) continue;
        out.push_back({k, g, std::move(verts), g.apply(center)});
    }
    return out;
}

std::vector<Cell> incident_cells(const Weight& w, const Weight& vertex) {
    auto o = orbit(w);
    if (!std::binary_search(o.begin(), o.end(), vertex))
        throw std::invalid_argument("vertex not in orbit of " + weight_str(w));
    auto scales = dual_scales(dominant_representative(w));
    std::vector<Cell> out;
    for (const auto& t : cell_types(dominant_representative(w)))
        for (auto& c : cells_of_type(dominant_representative(w), t.k, scales))
            if (std::binary_search(c.vertices.begin(), c.vertices.end(), vertex))
                out.push_back(std::move(c));
    return out;
}

std::map<int, Rational> dual_scales(const Weight& w, int ref) {
    auto types = cell_types(w);
    auto height = [&](int k) { return weight_dot(omega_weight(k), w); };
    if (ref == 0) {
        for (const auto& t : types)
            if (ref == 0 || height(t.k) < height(ref)) ref = t.k;
    } else if (std::none_of(types.begin(), types.end(),
                            [&](const CellType& t) { return t.k == ref; })) {
        throw std::invalid_argument("reference is not an incident cell type");
    }
    std::map<int, Rational> s;
    for (const auto& t : types) s[t.k] = height(ref) / height(t.k);
    return s;
}

DualPolytope dual_polytope(const Weight& w, int ref) {
    DualPolytope d;
    d.seed = w;
    d.scales = dual_scales(w, ref);

    std::set<Weight> verts;
    for (const auto& [k, s] : d.scales) {
        Rational r2 = s * s * omega_dot(k, k);
        std::size_t n = 0;
        for (const auto& v : orbit(omega_weight(k))) {
            verts.insert(scaled(v, s));
            ++n;
        }
        d.shells[k] = {r2, n};
    }
    d.vertices.assign(verts.begin(), verts.end());

    // one dual cell per primal vertex: the scaled centers of the cells
    // meeting there
    std::map<Weight, std::set<Weight>> at_vertex;
    for (const auto& [k, s] : d.scales)
        for (const auto& c : cells_of_type(w, k, d.scales))
            for (const auto& v : c.vertices) at_vertex[v].insert(c.center);
    for (auto& [v, centers] : at_vertex)
        d.cells.emplace_back(centers.begin(), centers.end());
    return d;
}

DualCellReport dual_cell_geometry(const Weight& w, const Weight& vertex, int ref) {
    DualCellReport rep;
    rep.primal = vertex;
    rep.norm_sq = weight_dot(vertex, vertex);

    auto scales = dual_scales(w, ref);
    std::set<Weight> centers;
    for (const auto& [k, s] : scales)
        for (const auto& c : cells_of_type(w, k, scales))
            if (std::binary_search(c.vertices.begin(), c.vertices.end(), vertex))
                centers.insert(c.center);
    rep.vertices.assign(centers.begin(), centers.end());
    if (rep.vertices.empty()) throw std::invalid_argument("vertex not in orbit");

    rep.plane_constant = weight_dot(rep.vertices.front(), vertex);
    Quaternion vq = weight_to_quaternion(vertex);
    for (const auto& u : rep.vertices) {
        Quaternion uq = weight_to_quaternion(u);
        rep.raw_coords.push_back({qdot(uq, Quaternion::e(1) * vq),
                                  qdot(uq, Quaternion::e(2) * vq),
                                  qdot(uq, Quaternion::e(3) * vq)});
    }
    rep.norm = FieldScalar(rep.norm_sq).sqrt_in_field();

    std::set<Rational> dists;
    for (std::size_t i = 0; i < rep.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < rep.vertices.size(); ++j) {
            Weight d;
            for (int t = 0; t < 4; ++t)
                d[t] = rep.vertices[i][t] - rep.vertices[j][t];
            dists.insert(weight_dot(d, d));
        }
    rep.distances_sq.assign(dists.begin(), dists.end());
    return rep;
}

}  // namespace a4
