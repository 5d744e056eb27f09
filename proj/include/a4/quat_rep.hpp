#pragma once

#include <string>
#include <vector>

#include "a4/binary_groups.hpp"
#include "a4/quaternion.hpp"
#include "a4/weyl.hpp"

namespace a4 {

/// The geometric realization of the A4 root/weight system in quaternion
/// space: unit simple roots (the roots divided by their length √2), the
/// lowest root alpha0, the dual basis omega, and the invariant vector c.
struct RootData {
    std::array<Quaternion, 4> alpha;   // alpha[i-1] = α_i
    Quaternion alpha0;                 // −(α1+α2+α3+α4)
    std::array<Quaternion, 4> omega;   // omega[i-1] = ω_i
    Quaternion c;                      // (e3−e2)/√2 = −(√5/2)ω_4

    static const RootData& instance();
};

/// Geometric image of a weight: Σ a_i ω_i.
Quaternion weight_to_quaternion(const Weight& w);

/// Simple reflection r_i = [α_i, −α_i]* as an O(4) action.
OrthogonalAction generator_action(int i);

/// The action realizing a weyl-engine element (composition of the
/// generator actions along its word).
OrthogonalAction action_of(const GroupElement& g);

/// W(A4) as 120 canonical quaternion-pair actions, built from the binary
/// icosahedral set: {[p, b(p)] ⊕ [p, −b(p)]*} with b(p) = c̄ (p̃)̄ c,
/// p ∈ I.  Joint-sign canonicalization collapses ±p to 60 rotations and
/// 60 rotary reflections.
std::vector<OrthogonalAction> build_w_a4();

/// The order-240 extension by the diagram symmetry: adjoin the opposite
/// sign of b(p) in both star states.
std::vector<OrthogonalAction> build_aut_a4();

struct RepresentationReport {
    bool ok = true;
    std::string detail;  // first mismatch, when !ok
};

/// Cross-check: word→action is a bijective homomorphism from the
/// weyl-engine group onto build_w_a4(), and the two realizations agree
/// on every ω_i image.
RepresentationReport verify_representation();

/// Coxeter element d = R1 R2 with R1 = r1r3, R2 = r2r4; order 5.
OrthogonalAction coxeter_element();
/// The same element acting on Dynkin labels.
Mat4 coxeter_matrix();

}  // namespace a4
