#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "a4/field.hpp"

namespace a4 {

/// Dynkin labels (a1 a2 a3 a4): the weight a1ω1 + a2ω2 + a3ω3 + a4ω4.
using Weight = std::array<Rational, 4>;

/// 4×4 integer matrix acting on Dynkin label vectors.
using Mat4 = std::array<std::array<std::int64_t, 4>, 4>;

/// A4 Cartan matrix C and its inverse (C⁻¹ = M/5 with integer M).
extern const int cartan[4][4];
extern const int cartan_inv_times5[4][4];

/// (ω_i, ω_j) = (C⁻¹)_ij.
Rational omega_dot(int i, int j);

/// Scalar product of weights, (w,v) = wᵀ C⁻¹ v.
Rational weight_dot(const Weight& w, const Weight& v);

/// (r_i w)_j = w_j − w_i C_ij, for i in 1..4.
Weight reflect(int i, const Weight& w);

Weight apply_mat(const Mat4& m, const Weight& w);
Mat4 mat_mul(const Mat4& a, const Mat4& b);
Mat4 identity_mat();
/// Matrix of the simple reflection r_i.
Mat4 reflection_mat(int i);

/// Group element of W(A4): matrix plus a word witness in the simple
/// generators (empty word = identity).
struct GroupElement {
    Mat4 matrix = identity_mat();
    std::vector<int> word;

    Weight apply(const Weight& w) const { return apply_mat(matrix, w); }
    bool operator==(const GroupElement& o) const { return matrix == o.matrix; }
    bool operator<(const GroupElement& o) const { return matrix < o.matrix; }
};

struct Subgroup {
    std::vector<int> generators;  // generator indices, for parabolics
    std::vector<GroupElement> elements;
    std::size_t order() const { return elements.size(); }
};

/// All 120 elements, by breadth-first closure from the generators.
/// Sorted by matrix; words are shortest-first witnesses.
const std::vector<GroupElement>& generate_group();

/// Parabolic subgroup generated by {r_j : j ∈ J}, J ⊆ {1..4}.
Subgroup parabolic(const std::vector<int>& J);

/// Orbit W(A4)·w, deduplicated, sorted.  Expansion is breadth-first from
/// w under the four reflections.
std::vector<Weight> orbit(const Weight& w);

/// Orbit of w under an explicit subgroup.
std::vector<Weight> orbit_under(const Subgroup& g, const Weight& w);

/// All g with g·w = w.
Subgroup stabilizer(const Weight& w);

bool is_dominant(const Weight& w);
/// The unique dominant weight in orbit(w).
Weight dominant_representative(const Weight& w);

/// Diagram symmetry γ: (a1,a2,a3,a4) → (a4,a3,a2,a1).
Weight dynkin_flip(const Weight& w);

std::string weight_str(const Weight& w);

}  // namespace a4
