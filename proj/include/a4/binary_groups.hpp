#pragma once

#include <string>
#include <vector>

#include "a4/quaternion.hpp"

namespace a4 {

enum class QSetName { T, Tprime, O, S, I, Itilde };

std::string qset_name_str(QSetName n);

/// A finite set of unit quaternions, kept sorted under the canonical
/// component order so membership and set equality are exact.
struct QuaternionSet {
    QSetName name;
    std::vector<Quaternion> elements;

    bool contains(const Quaternion& q) const;
    std::size_t size() const { return elements.size(); }
};

/// The sets T (24), T′ (24), O = T∪T′ (48), S (96), I = T∪S (120) and
/// Ĩ (the τ↔σ image of I).
QuaternionSet build_set(QSetName name);

struct GroupReport {
    bool all_unit = true;
    bool closed = true;
    bool has_identity = true;
    bool has_inverses = true;
    std::string counterexample;  // first failure, if any

    bool is_group() const { return all_unit && closed && has_identity && has_inverses; }
};

/// Checks closure under the quaternion product, identity and inverses.
/// For a non-group such as S the report carries the first counterexample.
GroupReport verify_group(const QuaternionSet& set);

/// c = (e3 − e2)/√2, the T′ element fixed by the tetrahedral subgroup.
Quaternion c_vector();

}  // namespace a4
