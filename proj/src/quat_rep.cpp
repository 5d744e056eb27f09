#include "a4/quat_rep.hpp"

#include <algorithm>
#include <set>

namespace a4 {

namespace {

RootData make_root_data() {
    RootData d;
    const FieldScalar z;
    const FieldScalar one = FieldScalar::integer(1);
    const FieldScalar h = FieldScalar::ratio(1, 2);
    const FieldScalar tau = FieldScalar::tau();
    const FieldScalar sig = FieldScalar::sigma();
    // Unit simple roots: α1 = −1, α2 = ½(1+e1+e2+e3), α3 = −e1,
    // α4 = ½(e1 − σe2 − τe3)
    d.alpha[0] = {-one, z, z, z};
    d.alpha[1] = {h, h, h, h};
    d.alpha[2] = {z, -one, z, z};
    d.alpha[3] = {z, h, -h * sig, -h * tau};
    d.alpha0 = -(d.alpha[0] + d.alpha[1] + d.alpha[2] + d.alpha[3]);
    // Dual basis, common factor 1/√10:
    //   ω1 = (−√5 + τe2 − σe3)/√10        ω2 = (2τe2 − 2σe3)/√10
    //   ω3 = (−√5 e1 + τ²e2 − σ²e3)/√10   ω4 = (2e2 − 2e3)/√10
    const FieldScalar k = one / FieldScalar::sqrt10();
    const FieldScalar r5 = FieldScalar::sqrt5();
    d.omega[0] = {k * -r5, z, k * tau, k * -sig};
    d.omega[1] = {z, z, k * FieldScalar::integer(2) * tau,
                  k * FieldScalar::integer(-2) * sig};
    d.omega[2] = {z, k * -r5, k * tau * tau, k * -(sig * sig)};
    d.omega[3] = {z, z, k * FieldScalar::integer(2), k * FieldScalar::integer(-2)};
    d.c = c_vector();
    return d;
}

// b(p) = c̄ · conj(tilde(p)) · c.  The map p → [p, b(p)] is the rotation
// half of W(A4); starred elements carry −b(p).
Quaternion pair_partner(const Quaternion& p) {
    const auto& c = RootData::instance().c;
    return c.conj() * p.tilde().conj() * c;
}

}  // namespace

const RootData& RootData::instance() {
    static const RootData d = make_root_data();
    return d;
}

Quaternion weight_to_quaternion(const Weight& w) {
    const auto& rd = RootData::instance();
    Quaternion q;
    for (int i = 0; i < 4; ++i) {
        FieldScalar s(w[i]);
        q = q + s * rd.omega[i];
    }
    return q;
}

OrthogonalAction generator_action(int i) {
    return OrthogonalAction::reflection(RootData::instance().alpha[i - 1]);
}

OrthogonalAction action_of(const GroupElement& g) {
    OrthogonalAction a = OrthogonalAction::identity();
    for (int i : g.word) a = compose(a, generator_action(i));
    return a;
}

std::vector<OrthogonalAction> build_w_a4() {
    std::set<OrthogonalAction> out;
    for (const auto& p : build_set(QSetName::I).elements) {
        Quaternion b = pair_partner(p);
        out.insert(OrthogonalAction::make(p, b, false));
        out.insert(OrthogonalAction::make(p, -b, true));
    }
    return {out.begin(), out.end()};
}

std::vector<OrthogonalAction> build_aut_a4() {
    std::set<OrthogonalAction> out;
    for (const auto& p : build_set(QSetName::I).elements) {
        Quaternion b = pair_partner(p);
        for (bool star : {false, true}) {
            out.insert(OrthogonalAction::make(p, b, star));
            out.insert(OrthogonalAction::make(p, -b, star));
        }
    }
    return {out.begin(), out.end()};
}

RepresentationReport verify_representation() {
    RepresentationReport rep;
    auto quat_group = build_w_a4();
    std::set<OrthogonalAction> qset(quat_group.begin(), quat_group.end());
    const auto& rd = RootData::instance();

    std::set<OrthogonalAction> images;
    for (const auto& g : generate_group()) {
        OrthogonalAction a = action_of(g);
        if (!qset.count(a)) {
            rep.ok = false;
            rep.detail = "word image not in the pair-form set, word length " +
                         std::to_string(g.word.size());
            return rep;
        }
        images.insert(a);
        // the matrix on Dynkin labels and the quaternion action agree on
        // every dual basis vector
        for (int j = 1; j <= 4; ++j) {
            Weight ej{};
            ej[j - 1] = 1;
            Quaternion via_matrix = weight_to_quaternion(g.apply(ej));
            Quaternion via_action = a.apply(rd.omega[j - 1]);
            if (!(via_matrix == via_action)) {
                rep.ok = false;
                rep.detail = "matrix/action mismatch on omega_" + std::to_string(j);
                return rep;
            }
        }
    }
    if (images.size() != 120 || qset.size() != 120) {
        rep.ok = false;
        rep.detail = "cardinality mismatch: " + std::to_string(images.size()) +
                     " images vs " + std::to_string(qset.size());
    }
    return rep;
}

OrthogonalAction coxeter_element() {
    // d = R1 R2 = (r1 r3)(r2 r4), rightmost factor applied first
    auto r = [](int i) { return generator_action(i); };
    return compose(compose(r(1), r(3)), compose(r(2), r(4)));
}

Mat4 coxeter_matrix() {
    return mat_mul(mat_mul(reflection_mat(1), reflection_mat(3)),
                   mat_mul(reflection_mat(2), reflection_mat(4)));
}

}  // namespace a4
