#include "a4/projection.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace a4 {

namespace {

PBasis make_p_basis() {
    PBasis b;
    b.p[0] = c_vector();
    for (int i = 1; i <= 3; ++i) b.p[i] = Quaternion::e(i) * b.p[0];
    return b;
}

Weight a3_dominant(Weight v) {
    for (bool moved = true; moved;) {
        moved = false;
        for (int i = 1; i <= 3; ++i)
            if (v[i - 1] < 0) {
                v = reflect(i, v);
                moved = true;
            }
    }
    return v;
}

}  // namespace

const PBasis& PBasis::instance() {
    static const PBasis b = make_p_basis();
    return b;
}

std::array<FieldScalar, 4> to_p_coordinates(const Quaternion& q) {
    const auto& b = PBasis::instance();
    return {qdot(q, b.p[0]), qdot(q, b.p[1]), qdot(q, b.p[2]), qdot(q, b.p[3])};
}

Quaternion from_p_coordinates(const std::array<FieldScalar, 4>& x) {
    const auto& b = PBasis::instance();
    Quaternion q;
    for (int i = 0; i < 4; ++i) q = q + x[i] * b.p[i];
    return q;
}

Rational charge(const Weight& w) {
    return -(w[0] + 2 * w[1] + 3 * w[2] + 4 * w[3]);
}

FieldScalar A3Slice::offset() const {
    // charge/(2√5) = charge·√5/10
    return {0, 0, charge / 10, 0};
}

std::array<Weight, 5> lambda_sequence(const Weight& w) {
    const Mat4 d = coxeter_matrix();
    std::array<Weight, 5> seq;
    seq[0] = w;
    for (int i = 1; i < 5; ++i) seq[i] = apply_mat(d, seq[i - 1]);
    return seq;
}

std::vector<A3Slice> dominant_slices(const Weight& w) {
    Subgroup a3;
    a3.generators = {1, 2, 3};
    auto seq = lambda_sequence(w);
    std::vector<A3Slice> out;
    for (int i = 0; i < 5; ++i) {
        A3Slice s;
        s.power = i;
        Weight dom = a3_dominant(seq[i]);
        s.labels = {dom[0], dom[1], dom[2]};
        s.charge = charge(seq[i]);
        s.weights = orbit_under(a3, seq[i]);
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<A3Slice> distinct_slices(const Weight& w) {
    std::vector<A3Slice> out;
    std::set<std::pair<std::array<Rational, 3>, Rational>> seen;
    for (auto& s : dominant_slices(w))
        if (seen.insert({s.labels, s.charge}).second) out.push_back(std::move(s));
    return out;
}

std::array<Rational, 3> abg_parameters(const std::array<Rational, 3>& labels) {
    const auto& [b1, b2, b3] = labels;
    return {(b1 - b3) / 2, (b1 + b3) / 2, (b1 + 2 * b2 + b3) / 2};
}

std::vector<std::array<Rational, 3>> a3_orbit_points(const std::array<Rational, 3>& labels) {
    auto abg = abg_parameters(labels);
    static const int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                   {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    std::set<std::array<Rational, 3>> pts;
    for (const auto& p : perm)
        for (int sbits = 0; sbits < 8; ++sbits) {
            if (__builtin_popcount(sbits) % 2) continue;
            std::array<Rational, 3> x;
            for (int i = 0; i < 3; ++i)
                x[i] = (sbits >> i & 1) ? -abg[p[i]] : abg[p[i]];
            pts.insert(x);
        }
    return {pts.begin(), pts.end()};
}

}  // namespace a4
