#pragma once

#include <array>
#include <vector>

#include "a4/quat_rep.hpp"

namespace a4 {

/// Orthonormal frame adapted to the W(A3) subgroup <r1,r2,r3>:
/// p0 = c is the invariant direction, p_i = e_i c span the 3-space the
/// polyhedral slices live in.
struct PBasis {
    std::array<Quaternion, 4> p;
    static const PBasis& instance();
};

/// Coordinates on the p-frame: x[i] = (q, p_i).
std::array<FieldScalar, 4> to_p_coordinates(const Quaternion& q);
Quaternion from_p_coordinates(const std::array<FieldScalar, 4>& x);

/// −(a1 + 2a2 + 3a3 + 4a4) = −5(w, ω4).  Constant on W(A3) orbits; the
/// p0 coordinate of the weight is charge/(2√5).
Rational charge(const Weight& w);

/// One W(A3) orbit inside a W(A4) orbit: a polyhedron sitting in the
/// hyperplane (·, p0) = charge/(2√5).
struct A3Slice {
    int power = 0;                   // the i of the seed d^i Λ
    std::array<Rational, 3> labels;  // dominant labels (b1 b2 b3) on the v basis
    Rational charge = 0;
    std::vector<Weight> weights;     // the slice, sorted

    FieldScalar offset() const;      // shared p0 coordinate
};

/// Λ, dΛ, d²Λ, d³Λ, d⁴Λ for the Coxeter element d = R1R2.
std::array<Weight, 5> lambda_sequence(const Weight& w);

/// The five coset slices W(A3)·d^iΛ of orbit(w), i = 0..4.  For seeds
/// with zero labels some slices coincide as point sets.
std::vector<A3Slice> dominant_slices(const Weight& w);

/// dominant_slices with coincident records merged; the union of the
/// returned slices partitions orbit(w).
std::vector<A3Slice> distinct_slices(const Weight& w);

/// (α, β, γ) = ½(b1−b3, b1+b3, b1+2b2+b3) for A3 labels (b1 b2 b3).
std::array<Rational, 3> abg_parameters(const std::array<Rational, 3>& labels);

/// The 3D vertex set of the dominant W(A3) orbit (b1 b2 b3): all
/// permutations of (±α, ±β, ±γ) on (p1,p2,p3) with an even number of
/// minus signs, deduplicated.
std::vector<std::array<Rational, 3>> a3_orbit_points(const std::array<Rational, 3>& labels);

}  // namespace a4
