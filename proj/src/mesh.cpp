#include "a4/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace a4 {

namespace {

Point3 sub(const Point3& a, const Point3& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Point3 cross(const Point3& a, const Point3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

FieldScalar dot(const Point3& a, const Point3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

bool is_zero(const Point3& p) {
    return p[0].is_zero() && p[1].is_zero() && p[2].is_zero();
}

int affine_rank(const std::vector<Point3>& pts) {
    std::vector<Point3> rows;
    for (std::size_t i = 1; i < pts.size(); ++i) rows.push_back(sub(pts[i], pts[0]));
    int rank = 0;
    for (int col = 0; col < 3 && rank < int(rows.size()); ++col) {
        auto pivot = std::find_if(rows.begin() + rank, rows.end(),
                                  [col](const Point3& r) { return !r[col].is_zero(); });
        if (pivot == rows.end()) continue;
        std::swap(*pivot, rows[rank]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i)
            if (!rows[i][col].is_zero()) {
                FieldScalar f = rows[i][col] / rows[rank][col];
                for (int j = col; j < 3; ++j) rows[i][j] -= f * rows[rank][j];
            }
        ++rank;
    }
    return rank;
}

}  // namespace

Mesh3D extract_faces(std::vector<Point3> points, std::string name) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    int rank = affine_rank(points);
    if (rank != 3)
        throw std::invalid_argument("points have affine rank " + std::to_string(rank) +
                                    ", need 3");

    Mesh3D mesh;
    mesh.vertices = points;
    mesh.name = std::move(name);
    const int n = int(points.size());

    // supporting planes: support set → outward normal (float, display)
    std::map<std::vector<int>, std::array<double, 3>> planes;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Point3 nrm = cross(sub(points[j], points[i]), sub(points[k], points[i]));
                if (is_zero(nrm)) continue;
                bool pos = false, neg = false;
                std::vector<int> support;
                for (int t = 0; t < n && !(pos && neg); ++t) {
                    int s = dot(nrm, sub(points[t], points[i])).sign();
                    if (s > 0) pos = true;
                    else if (s < 0) neg = true;
                    else support.push_back(t);
                }
                if (pos && neg) continue;
                double sgn = pos ? -1.0 : 1.0;  // flip so the normal points outward
                planes.emplace(std::move(support),
                               std::array<double, 3>{sgn * nrm[0].to_double(),
                                                     sgn * nrm[1].to_double(),
                                                     sgn * nrm[2].to_double()});
            }

    for (auto& [support, nrm] : planes) {
        // cycle the face counter-clockwise around its centroid as seen
        // from outside (float ordering only; membership is exact)
        std::array<double, 3> c{};
        std::vector<std::array<double, 3>> xyz;
        for (int idx : support) {
            std::array<double, 3> p{points[idx][0].to_double(), points[idx][1].to_double(),
                                    points[idx][2].to_double()};
            for (int a = 0; a < 3; ++a) c[a] += p[a] / support.size();
            xyz.push_back(p);
        }
        double nl = std::hypot(nrm[0], std::hypot(nrm[1], nrm[2]));
        std::array<double, 3> w{nrm[0] / nl, nrm[1] / nl, nrm[2] / nl};
        std::array<double, 3> u{xyz[0][0] - c[0], xyz[0][1] - c[1], xyz[0][2] - c[2]};
        std::array<double, 3> v{w[1] * u[2] - w[2] * u[1], w[2] * u[0] - w[0] * u[2],
                                w[0] * u[1] - w[1] * u[0]};
        std::vector<int> order(support.size());
        for (std::size_t t = 0; t < order.size(); ++t) order[t] = int(t);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            auto ang = [&](int t) {
                std::array<double, 3> d{xyz[t][0] - c[0], xyz[t][1] - c[1],
                                        xyz[t][2] - c[2]};
                return std::atan2(d[0] * v[0] + d[1] * v[1] + d[2] * v[2],
                                  d[0] * u[0] + d[1] * u[1] + d[2] * u[2]);
            };
            return ang(a) < ang(b);
        });
        std::vector<int> face;
        for (int t : order) face.push_back(support[t]);
        mesh.faces.push_back(std::move(face));
    }

    std::set<std::pair<int, int>> edges;
    for (const auto& f : mesh.faces)
        for (std::size_t t = 0; t < f.size(); ++t) {
            int a = f[t], b = f[(t + 1) % f.size()];
            edges.insert({std::min(a, b), std::max(a, b)});
        }
    mesh.edges.assign(edges.begin(), edges.end());
    return mesh;
}

std::string to_off(const Mesh3D& mesh, int digits) {
    std::ostringstream os;
    os << "OFF\n"
       << mesh.vertices.size() << ' ' << mesh.faces.size() << ' ' << mesh.edges.size()
       << '\n';
    for (const auto& p : mesh.vertices)
        os << p[0].decimal(digits) << ' ' << p[1].decimal(digits) << ' '
           << p[2].decimal(digits) << '\n';
    for (const auto& f : mesh.faces) {
        os << f.size();
        for (int i : f) os << ' ' << i;
        os << '\n';
    }
    return os.str();
}

std::string to_obj(const Mesh3D& mesh, int digits) {
    std::ostringstream os;
    if (!mesh.name.empty()) os << "o " << mesh.name << '\n';
    for (const auto& p : mesh.vertices)
        os << "v " << p[0].decimal(digits) << ' ' << p[1].decimal(digits) << ' '
           << p[2].decimal(digits) << '\n';
    for (const auto& f : mesh.faces) {
        os << 'f';
        for (int i : f) os << ' ' << i + 1;
        os << '\n';
    }
    return os.str();
}

}  // namespace a4
