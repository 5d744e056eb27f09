#include "a4/quaternion.hpp"

#include <stdexcept>

namespace a4 {

Quaternion Quaternion::e(int i) {
    Quaternion q;
    q.c[i] = FieldScalar::integer(1);
    return q;
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
    const auto& p = c;
    const auto& q = o.c;
    return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
            p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
            p[0] * q[2] + p[2] * q[0] + p[3] * q[1] - p[1] * q[3],
            p[0] * q[3] + p[3] * q[0] + p[1] * q[2] - p[2] * q[1]};
}

std::string Quaternion::str() const {
    return "(" + c[0].str() + ", " + c[1].str() + ", " + c[2].str() + ", " +
           c[3].str() + ")";
}

FieldScalar qdot(const Quaternion& p, const Quaternion& q) {
    return p.c[0] * q.c[0] + p.c[1] * q.c[1] + p.c[2] * q.c[2] + p.c[3] * q.c[3];
}

void OrthogonalAction::canonicalize() {
    for (int i = 0; i < 4; ++i) {
        if (a.c[i].is_zero()) continue;
        if (a.c[i].sign() < 0) {
            a = -a;
            b = -b;
        }
        return;
    }
    throw std::invalid_argument("OrthogonalAction: zero quaternion");
}

OrthogonalAction OrthogonalAction::make(Quaternion a, Quaternion b, bool starred) {
    OrthogonalAction g{std::move(a), std::move(b), starred};
    g.canonicalize();
    return g;
}

OrthogonalAction compose(const OrthogonalAction& g, const OrthogonalAction& h) {
    // [a,b]∘[c,d]   = [ac, db]      [a,b]∘[c,d]*  = [ac, db]*
    // [a,b]*∘[c,d]  = [ad̄, c̄b]*    [a,b]*∘[c,d]* = [ad̄, c̄b]
    if (!g.starred)
        return OrthogonalAction::make(g.a * h.a, h.b * g.b, h.starred);
    return OrthogonalAction::make(g.a * h.b.conj(), h.a.conj() * g.b, !h.starred);
}

}  // namespace a4
