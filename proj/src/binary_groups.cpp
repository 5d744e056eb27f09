#include "a4/binary_groups.hpp"

#include <algorithm>
#include <stdexcept>

namespace a4 {

namespace {

void sort_unique(std::vector<Quaternion>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// All sign choices over the nonzero slots of ½(x0 + x1 e1 + x2 e2 + x3 e3).
void expand_signs(const std::array<FieldScalar, 4>& coef,
                  std::vector<Quaternion>& out) {
    std::vector<int> live;
    for (int i = 0; i < 4; ++i)
        if (!coef[i].is_zero()) live.push_back(i);
    const FieldScalar half = FieldScalar::ratio(1, 2);
    for (int mask = 0; mask < (1 << live.size()); ++mask) {
        Quaternion q;
        for (std::size_t j = 0; j < live.size(); ++j) {
            FieldScalar v = half * coef[live[j]];
            q[live[j]] = (mask >> j) & 1 ? -v : v;
        }
        out.push_back(q);
    }
}

std::vector<Quaternion> build_T() {
    std::vector<Quaternion> v;
    const FieldScalar one = FieldScalar::integer(1);
    for (int i = 0; i < 4; ++i) {
        Quaternion q;
        q[i] = one;
        v.push_back(q);
        q[i] = -one;
        v.push_back(q);
    }
    expand_signs({one, one, one, one}, v);
    sort_unique(v);
    return v;
}

std::vector<Quaternion> build_Tprime() {
    std::vector<Quaternion> v;
    const FieldScalar h = FieldScalar::integer(1) / FieldScalar::sqrt2();
    const int pairs[6][2] = {{0, 1}, {2, 3}, {0, 2}, {3, 1}, {0, 3}, {1, 2}};
    for (auto& p : pairs)
        for (int s0 = -1; s0 <= 1; s0 += 2)
            for (int s1 = -1; s1 <= 1; s1 += 2) {
                Quaternion q;
                q[p[0]] = s0 < 0 ? -h : h;
                q[p[1]] = s1 < 0 ? -h : h;
                v.push_back(q);
            }
    sort_unique(v);
    return v;
}

// The 12 sign families of S, generated from their cyclic patterns.
// Slot 0 is the scalar part, slots 1..3 are e1..e3; nxt/prv cycle 1→2→3→1.
std::vector<Quaternion> build_S() {
    const FieldScalar one = FieldScalar::integer(1);
    const FieldScalar tau = FieldScalar::tau();
    const FieldScalar sig = FieldScalar::sigma();
    auto nxt = [](int i) { return i % 3 + 1; };
    auto prv = [](int i) { return (i + 1) % 3 + 1; };
    std::vector<Quaternion> v;
    for (int i = 1; i <= 3; ++i) {
        std::array<FieldScalar, 4> coef{};
        coef[0] = tau; coef[i] = one; coef[prv(i)] = sig;       // ½(±τ ±e_i ±σe_{i-1})
        expand_signs(coef, v);
        coef = {}; coef[0] = sig; coef[i] = one; coef[nxt(i)] = tau;   // ½(±σ ±e_i ±τe_{i+1})
        expand_signs(coef, v);
        coef = {}; coef[0] = one; coef[i] = tau; coef[nxt(i)] = sig;   // ½(±1 ±τe_i ±σe_{i+1})
        expand_signs(coef, v);
        coef = {}; coef[i] = sig; coef[nxt(i)] = tau; coef[nxt(nxt(i))] = one;
        expand_signs(coef, v);                                   // ½(±σe_i ±τe_{i+1} ±e_{i+2})
    }
    sort_unique(v);
    return v;
}

}  // namespace

std::string qset_name_str(QSetName n) {
    switch (n) {
        case QSetName::T: return "T";
        case QSetName::Tprime: return "T'";
        case QSetName::O: return "O";
        case QSetName::S: return "S";
        case QSetName::I: return "I";
        case QSetName::Itilde: return "Itilde";
    }
    throw std::invalid_argument("unknown set name");
}

bool QuaternionSet::contains(const Quaternion& q) const {
    return std::binary_search(elements.begin(), elements.end(), q);
}

QuaternionSet build_set(QSetName name) {
    QuaternionSet out;
    out.name = name;
    switch (name) {
        case QSetName::T:
            out.elements = build_T();
            break;
        case QSetName::Tprime:
            out.elements = build_Tprime();
            break;
        case QSetName::O: {
            out.elements = build_T();
            auto tp = build_Tprime();
            out.elements.insert(out.elements.end(), tp.begin(), tp.end());
            sort_unique(out.elements);
            break;
        }
        case QSetName::S:
            out.elements = build_S();
            break;
        case QSetName::I: {
            out.elements = build_T();
            auto s = build_S();
            out.elements.insert(out.elements.end(), s.begin(), s.end());
            sort_unique(out.elements);
            break;
        }
        case QSetName::Itilde: {
            auto i = build_set(QSetName::I).elements;
            out.elements.clear();
            for (const auto& q : i) out.elements.push_back(q.tilde());
            sort_unique(out.elements);
            break;
        }
    }
    return out;
}

GroupReport verify_group(const QuaternionSet& set) {
    GroupReport r;
    const FieldScalar one = FieldScalar::integer(1);
    for (const auto& q : set.elements) {
        if (qnorm(q) != one) {
            r.all_unit = false;
            r.counterexample = "non-unit element " + q.str();
            return r;
        }
    }
    if (!set.contains(Quaternion::one())) {
        r.has_identity = false;
        r.counterexample = "identity missing";
    }
    for (const auto& q : set.elements) {
        if (!set.contains(q.conj())) {
            r.has_inverses = false;
            if (r.counterexample.empty())
                r.counterexample = "inverse of " + q.str() + " missing";
            break;
        }
    }
    for (const auto& p : set.elements) {
        for (const auto& q : set.elements) {
            if (!set.contains(p * q)) {
                r.closed = false;
                if (r.counterexample.empty())
                    r.counterexample = p.str() + " * " + q.str() + " escapes the set";
                return r;
            }
        }
    }
    return r;
}

Quaternion c_vector() {
    const FieldScalar h = FieldScalar::integer(1) / FieldScalar::sqrt2();
    return {FieldScalar(), FieldScalar(), -h, h};
}

}  // namespace a4
