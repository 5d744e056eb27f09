#pragma once

#include <array>
#include <string>

#include "a4/field.hpp"

namespace a4 {

/// Quaternion q = q0 + q1·e1 + q2·e2 + q3·e3 over FieldScalar, with
/// e_i e_j = −δ_ij + ε_ijk e_k.
struct Quaternion {
    std::array<FieldScalar, 4> c;

    Quaternion() = default;
    Quaternion(FieldScalar q0, FieldScalar q1, FieldScalar q2, FieldScalar q3)
        : c{std::move(q0), std::move(q1), std::move(q2), std::move(q3)} {}

    static Quaternion zero() { return {}; }
    static Quaternion one() { return {FieldScalar::integer(1), {}, {}, {}}; }
    static Quaternion e(int i);  // i = 1,2,3

    const FieldScalar& operator[](int i) const { return c[i]; }
    FieldScalar& operator[](int i) { return c[i]; }

    Quaternion operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }
    Quaternion operator+(const Quaternion& o) const {
        return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]};
    }
    Quaternion operator-(const Quaternion& o) const { return *this + (-o); }
    Quaternion operator*(const Quaternion& o) const;
    friend Quaternion operator*(const FieldScalar& s, const Quaternion& q) {
        return {s * q.c[0], s * q.c[1], s * q.c[2], s * q.c[3]};
    }

    Quaternion conj() const { return {c[0], -c[1], -c[2], -c[3]}; }
    /// Component-wise Galois map τ ↔ σ; carries the set I onto Ĩ.
    Quaternion tilde() const {
        return {c[0].galois(), c[1].galois(), c[2].galois(), c[3].galois()};
    }

    bool is_zero() const {
        return c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero();
    }
    bool operator==(const Quaternion& o) const { return c == o.c; }
    bool operator!=(const Quaternion& o) const { return !(*this == o); }
    bool operator<(const Quaternion& o) const { return c < o.c; }

    std::string str() const;
};

/// Euclidean scalar product (p,q) = ½(p̄q + q̄p) = Σ p_i q_i.
FieldScalar qdot(const Quaternion& p, const Quaternion& q);

inline FieldScalar qnorm(const Quaternion& q) { return qdot(q, q); }

/// An O(4) element in quaternion-pair form:
///   [a,b]  : q → a q b        (rotation)
///   [a,b]* : q → a q̄ b        (rotary reflection)
/// with a, b unit.  [a,b] and [−a,−b] are the same map; pairs are kept
/// canonical by joint negation so the first nonzero component of a is
/// positive.
struct OrthogonalAction {
    Quaternion a, b;
    bool starred = false;

    static OrthogonalAction identity() {
        return {Quaternion::one(), Quaternion::one(), false};
    }
    static OrthogonalAction make(Quaternion a, Quaternion b, bool starred);

    /// Reflection r = [n, −n]* in the hyperplane orthogonal to the unit
    /// quaternion n.
    static OrthogonalAction reflection(const Quaternion& n) {
        return make(n, -n, true);
    }

    Quaternion apply(const Quaternion& q) const {
        return starred ? a * q.conj() * b : a * q * b;
    }

    void canonicalize();

    bool operator==(const OrthogonalAction& o) const {
        return starred == o.starred && a == o.a && b == o.b;
    }
    bool operator<(const OrthogonalAction& o) const {
        if (starred != o.starred) return starred < o.starred;
        if (!(a == o.a)) return a < o.a;
        return b < o.b;
    }
};

/// Composition g∘h (h applied first).  Star states combine with parity:
/// two rotary reflections compose to a rotation.
OrthogonalAction compose(const OrthogonalAction& g, const OrthogonalAction& h);

}  // namespace a4
