#include "a4/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace a4 {

const int cartan[4][4] = {
    {2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};

const int cartan_inv_times5[4][4] = {
    {4, 3, 2, 1}, {3, 6, 4, 2}, {2, 4, 6, 3}, {1, 2, 3, 4}};

Rational omega_dot(int i, int j) {
    return Rational(cartan_inv_times5[i - 1][j - 1], 5);
}

Rational weight_dot(const Weight& w, const Weight& v) {
    Rational s = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            s += w[i] * v[j] * cartan_inv_times5[i][j];
    return s / 5;
}

Weight reflect(int i, const Weight& w) {
    if (i < 1 || i > 4) throw std::out_of_range("generator index");
    Weight out = w;
    for (int j = 0; j < 4; ++j) out[j] -= w[i - 1] * cartan[i - 1][j];
    return out;
}

Weight apply_mat(const Mat4& m, const Weight& w) {
    Weight out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i] += m[i][j] * w[j];
    return out;
}

Mat4 mat_mul(const Mat4& a, const Mat4& b) {
    Mat4 out{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            for (int j = 0; j < 4; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

Mat4 identity_mat() {
    Mat4 m{};
    for (int i = 0; i < 4; ++i) m[i][i] = 1;
    return m;
}

Mat4 reflection_mat(int i) {
    // column i-1 picks up −C_{i,j} contributions: (r_i w)_j = w_j − w_i C_ij
    Mat4 m = identity_mat();
    for (int j = 0; j < 4; ++j) m[j][i - 1] -= cartan[i - 1][j];
    return m;
}

namespace {

std::vector<GroupElement> closure(const std::vector<int>& gens) {
    std::map<Mat4, std::vector<int>> seen;
    std::vector<GroupElement> frontier{GroupElement{}};
    seen[identity_mat()] = {};
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const auto& g : frontier) {
            for (int i : gens) {
                GroupElement h;
                h.matrix = mat_mul(reflection_mat(i), g.matrix);
                if (seen.count(h.matrix)) continue;
                h.word = g.word;
                h.word.insert(h.word.begin(), i);  // r_i applied last
                seen[h.matrix] = h.word;
                next.push_back(h);
            }
        }
        frontier = std::move(next);
    }
    std::vector<GroupElement> out;
    for (auto& [m, w] : seen) out.push_back({m, w});
    return out;
}

}  // namespace

const std::vector<GroupElement>& generate_group() {
    static const std::vector<GroupElement> group = closure({1, 2, 3, 4});
    return group;
}

Subgroup parabolic(const std::vector<int>& J) {
    Subgroup s;
    s.generators = J;
    s.elements = closure(J);
    return s;
}

std::vector<Weight> orbit(const Weight& w) {
    Subgroup all;
    all.generators = {1, 2, 3, 4};
    return orbit_under(all, w);
}

std::vector<Weight> orbit_under(const Subgroup& g, const Weight& w) {
    // Breadth-first expansion under the generators when we have them;
    // otherwise apply every element.
    std::set<Weight> seen;
    if (!g.generators.empty()) {
        std::vector<Weight> frontier{w};
        seen.insert(w);
        while (!frontier.empty()) {
            std::vector<Weight> next;
            for (const auto& v : frontier)
                for (int i : g.generators) {
                    Weight u = reflect(i, v);
                    if (seen.insert(u).second) next.push_back(u);
                }
            frontier = std::move(next);
        }
    } else {
        for (const auto& el : g.elements) seen.insert(el.apply(w));
    }
    return {seen.begin(), seen.end()};
}

Subgroup stabilizer(const Weight& w) {
    Subgroup s;
    for (const auto& g : generate_group())
        if (g.apply(w) == w) s.elements.push_back(g);
    return s;
}

bool is_dominant(const Weight& w) {
    return std::all_of(w.begin(), w.end(), [](const Rational& a) { return a >= 0; });
}

Weight dominant_representative(const Weight& w) {
    Weight v = w;
    for (bool moved = true; moved;) {
        moved = false;
        for (int i = 1; i <= 4; ++i)
            if (v[i - 1] < 0) {
                v = reflect(i, v);
                moved = true;
            }
    }
    return v;
}

Weight dynkin_flip(const Weight& w) { return {w[3], w[2], w[1], w[0]}; }

std::string weight_str(const Weight& w) {
    return "(" + rational_str(w[0]) + "," + rational_str(w[1]) + "," +
           rational_str(w[2]) + "," + rational_str(w[3]) + ")";
}

}  // namespace a4
