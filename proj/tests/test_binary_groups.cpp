#include "doctest.h"

#include <algorithm>
#include <set>

#include "a4/binary_groups.hpp"

using namespace a4;

namespace {

// Brute-force oracle for S: close T ∪ {one hand-typed S element}
// under the quaternion product; the result must be the 120-element
// binary icosahedral group, and S is what it adds beyond T.
std::vector<Quaternion> enumerate_S() {
    auto h = FieldScalar::ratio(1, 2);
    Quaternion seed{h * FieldScalar::tau(), h, FieldScalar(), h * FieldScalar::sigma()};
    auto T = build_set(QSetName::T);
    std::set<Quaternion> closed(T.elements.begin(), T.elements.end());
    closed.insert(seed);
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<Quaternion> cur(closed.begin(), closed.end());
        for (const auto& p : cur)
            for (const auto& q : cur)
                if (closed.insert(p * q).second) grew = true;
    }
    std::vector<Quaternion> out;
    for (const auto& q : closed)
        if (!T.contains(q)) out.push_back(q);
    return out;
}

}  // namespace

TEST_CASE("set sizes") {
    CHECK(build_set(QSetName::T).size() == 24);
    CHECK(build_set(QSetName::Tprime).size() == 24);
    CHECK(build_set(QSetName::O).size() == 48);
    CHECK(build_set(QSetName::S).size() == 96);
    CHECK(build_set(QSetName::I).size() == 120);
    CHECK(build_set(QSetName::Itilde).size() == 120);
}

TEST_CASE("S matches the brute-force enumeration") {
    auto oracle = enumerate_S();
    auto s = build_set(QSetName::S);
    CHECK(oracle == s.elements);
}

TEST_CASE("hand-typed spot elements of S") {
    auto s = build_set(QSetName::S);
    auto h = FieldScalar::ratio(1, 2);
    auto tau = FieldScalar::tau(), sig = FieldScalar::sigma();
    auto z = FieldScalar();
    CHECK(s.contains({h * tau, h, z, h * sig}));          // ½(τ+e1+σe3)
    CHECK(s.contains({h * tau, -h * sig, h, z}));         // ½(τ−σe1+e2) → family 2 signs
    CHECK(s.contains({h * sig, h, h * tau, z}));          // ½(σ+e1+τe2)
    CHECK(s.contains({h, h * tau, h * sig, z}));          // ½(1+τe1+σe2)
    CHECK(s.contains({z, h * sig, h * tau, h}));          // ½(σe1+τe2+e3)
    CHECK(s.contains({-h, -h * sig, z, -h * tau}));       // ½(−1−σe1−τe3), negated
}

TEST_CASE("group structure") {
    for (auto name : {QSetName::T, QSetName::O, QSetName::I}) {
        auto r = verify_group(build_set(name));
        CHECK(r.is_group());
    }
    auto s = verify_group(build_set(QSetName::S));
    CHECK(!s.closed);
    CHECK(!s.counterexample.empty());
    auto tp = verify_group(build_set(QSetName::Tprime));
    CHECK(!tp.closed);

    QuaternionSet trivial{QSetName::T, {Quaternion::one()}};
    CHECK(verify_group(trivial).is_group());
}

TEST_CASE("coset structure: I = T ⊕ S, O = T ⊕ T'") {
    auto T = build_set(QSetName::T);
    auto S = build_set(QSetName::S);
    auto I = build_set(QSetName::I);
    for (const auto& q : I.elements)
        CHECK((T.contains(q) != S.contains(q)));
    // left-multiplying S by an S element lands back in T ∪ S but off S
    auto p = S.elements[0];
    bool some_in_T = false;
    for (const auto& q : S.elements)
        if (T.contains(p * q)) some_in_T = true;
    CHECK(some_in_T);
}

TEST_CASE("I ∩ Itilde = T") {
    auto I = build_set(QSetName::I);
    auto It = build_set(QSetName::Itilde);
    auto T = build_set(QSetName::T);
    std::vector<Quaternion> inter;
    std::set_intersection(I.elements.begin(), I.elements.end(), It.elements.begin(),
                          It.elements.end(), std::back_inserter(inter));
    CHECK(inter == T.elements);
}

TEST_CASE("c = (e3-e2)/sqrt2 lies in T'") {
    CHECK(build_set(QSetName::Tprime).contains(c_vector()));
    CHECK(qnorm(c_vector()) == FieldScalar::integer(1));
}

TEST_CASE("all S elements are unit") {
    for (const auto& q : build_set(QSetName::S).elements)
        CHECK(qdot(q, q) == FieldScalar::integer(1));
}
