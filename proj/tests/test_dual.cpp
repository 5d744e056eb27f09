#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "a4/dual.hpp"

using namespace a4;

namespace {

Weight W(long a, long b, long c, long d) {
    return {Rational(a), Rational(b), Rational(c), Rational(d)};
}

Weight neg(const Weight& w) { return {-w[0], -w[1], -w[2], -w[3]}; }

std::map<int, std::pair<std::string, std::size_t>> type_map(const Weight& w) {
    std::map<int, std::pair<std::string, std::size_t>> m;
    for (const auto& t : cell_types(w)) m[t.k] = {t.shape, t.count};
    return m;
}

std::vector<Weight> uniform_weights() {
    std::vector<Weight> out;
    for (int mask = 1; mask < 16; ++mask) {
        Weight w{};
        for (int i = 0; i < 4; ++i) w[i] = (mask >> i) & 1;
        out.push_back(w);
    }
    return out;
}

}  // namespace

TEST_CASE("cell inventories") {
    using P = std::pair<std::string, std::size_t>;
    auto m = type_map(W(1, 1, 0, 0));
    CHECK(m == std::map<int, P>{{1, {"tetrahedron", 5}},
                                {4, {"truncated tetrahedron", 5}}});
    m = type_map(W(1, 1, 1, 0));
    CHECK(m == std::map<int, P>{{1, {"truncated tetrahedron", 5}},
                                {2, {"triangular prism", 10}},
                                {4, {"truncated octahedron", 5}}});
    m = type_map(W(1, 0, 0, 0));
    CHECK(m == std::map<int, P>{{4, {"tetrahedron", 5}}});
    m = type_map(W(0, 1, 0, 0));
    CHECK(m == std::map<int, P>{{1, {"tetrahedron", 5}}, {4, {"octahedron", 5}}});
    m = type_map(W(1, 0, 0, 1));
    CHECK(m == std::map<int, P>{{1, {"tetrahedron", 5}},
                                {2, {"triangular prism", 10}},
                                {3, {"triangular prism", 10}},
                                {4, {"tetrahedron", 5}}});
    m = type_map(W(1, 1, 1, 1));
    CHECK(m == std::map<int, P>{{1, {"truncated octahedron", 5}},
                                {2, {"hexagonal prism", 10}},
                                {3, {"hexagonal prism", 10}},
                                {4, {"truncated octahedron", 5}}});
    m = type_map(W(1, 0, 1, 0));
    CHECK(m == std::map<int, P>{{1, {"octahedron", 5}},
                                {2, {"triangular prism", 10}},
                                {4, {"cuboctahedron", 5}}});
    CHECK_THROWS(cell_types(W(0, 0, 0, 0)));
    CHECK_THROWS(cell_types(W(-1, 0, 0, 0)));
}

TEST_CASE("cells tile the orbit and satisfy the incidence identity") {
    for (const auto& w : uniform_weights()) {
        auto o = orbit(w);
        std::map<Weight, std::map<int, int>> at_vertex;
        for (const auto& t : cell_types(w)) {
            auto cells = cells_of_type(w, t.k);
            CHECK(cells.size() == t.count);
            for (const auto& c : cells) {
                CHECK(c.vertices.size() == t.cell_vertices);
                for (const auto& v : c.vertices) ++at_vertex[v][t.k];
            }
            // n_k = count × cell_vertices / |orbit|, an integer
            CHECK(t.count * t.cell_vertices % o.size() == 0);
            std::size_t nk = t.count * t.cell_vertices / o.size();
            for (const auto& v : o) CHECK(at_vertex[v][t.k] == nk);
        }
    }
}

TEST_CASE("incident cells at a vertex") {
    // rectified 5-cell: 3 octahedra and 2 tetrahedra meet at ω2
    std::map<int, int> n;
    for (const auto& c : incident_cells(W(0, 1, 0, 0), W(0, 1, 0, 0))) ++n[c.k];
    CHECK(n == std::map<int, int>{{1, 2}, {4, 3}});
    // truncated 5-cell: 1 tetrahedron and 3 truncated tetrahedra
    n.clear();
    for (const auto& c : incident_cells(W(1, 1, 0, 0), W(1, 1, 0, 0))) ++n[c.k];
    CHECK(n == std::map<int, int>{{1, 1}, {4, 3}});
    // omnitruncated: four cells, one of each class
    n.clear();
    for (const auto& c : incident_cells(W(1, 1, 1, 1), W(1, 1, 1, 1))) ++n[c.k];
    CHECK(n == std::map<int, int>{{1, 1}, {2, 1}, {3, 1}, {4, 1}});
    // works at a non-dominant vertex too
    auto v = reflect(2, reflect(1, W(0, 1, 0, 0)));
    CHECK(incident_cells(W(0, 1, 0, 0), v).size() == 5);
    CHECK_THROWS(incident_cells(W(0, 1, 0, 0), W(5, 0, 0, 0)));
}

TEST_CASE("scale factors") {
    using M = std::map<int, Rational>;
    CHECK(dual_scales(W(0, 1, 0, 0)) == M{{1, Rational(2, 3)}, {4, 1}});
    CHECK(dual_scales(W(1, 1, 0, 0)) == M{{1, Rational(3, 7)}, {4, 1}});
    CHECK(dual_scales(W(1, 1, 1, 0)) ==
          M{{1, Rational(2, 3)}, {2, Rational(6, 13)}, {4, 1}});
    CHECK(dual_scales(W(1, 0, 0, 1)) == M{{1, 1}, {2, 1}, {3, 1}, {4, 1}});
    CHECK(dual_scales(W(0, 1, 1, 0)) == M{{1, 1}, {4, 1}});
    CHECK(dual_scales(W(1, 1, 1, 1)) ==
          M{{1, 1}, {2, Rational(2, 3)}, {3, Rational(2, 3)}, {4, 1}});
    // explicit reference classes
    CHECK(dual_scales(W(1, 0, 1, 0), 2) ==
          M{{1, Rational(7, 6)}, {2, 1}, {4, Rational(7, 4)}});
    CHECK(dual_scales(W(1, 1, 0, 1), 3) ==
          M{{1, Rational(9, 8)}, {2, Rational(9, 11)}, {3, 1}, {4, Rational(9, 7)}});
    // ratios are normalization-free
    auto a = dual_scales(W(1, 0, 1, 0)), b = dual_scales(W(1, 0, 1, 0), 2);
    CHECK(a.at(1) / a.at(4) == b.at(1) / b.at(4));
    CHECK_THROWS(dual_scales(W(1, 0, 0, 0), 1));
    // scaled centers share the hyperplane of the seed vertex
    for (const auto& w : uniform_weights()) {
        auto s = dual_scales(w);
        std::set<Rational> heights;
        for (const auto& [k, sk] : s) {
            Weight c{};
            c[k - 1] = sk;
            heights.insert(weight_dot(c, w));
        }
        CHECK(heights.size() == 1);
    }
}

TEST_CASE("dual polytope counts and shells") {
    auto d = dual_polytope(W(0, 1, 0, 0));
    CHECK(d.vertices.size() == 10);
    CHECK(d.cells.size() == 10);
    CHECK(dual_polytope(W(1, 1, 0, 0)).vertices.size() == 10);
    CHECK(dual_polytope(W(1, 1, 0, 0)).cells.size() == 20);
    CHECK(dual_polytope(W(1, 0, 0, 1)).vertices.size() == 30);
    CHECK(dual_polytope(W(1, 0, 0, 1)).cells.size() == 20);
    CHECK(dual_polytope(W(1, 1, 1, 0)).vertices.size() == 20);
    CHECK(dual_polytope(W(1, 1, 1, 0)).cells.size() == 60);
    CHECK(dual_polytope(W(1, 1, 1, 1)).vertices.size() == 30);
    CHECK(dual_polytope(W(1, 1, 1, 1)).cells.size() == 120);

    // duality involution on the counts, for all uniform weights
    for (const auto& w : uniform_weights()) {
        auto dp = dual_polytope(w);
        std::size_t primal_cells = 0;
        for (const auto& t : cell_types(w)) primal_cells += t.count;
        CHECK(dp.vertices.size() == primal_cells);
        CHECK(dp.cells.size() == orbit(w).size());
    }

    // runcinated 5-cell: 10 vertices at radius² 4/5 and 20 at 6/5
    auto r = dual_polytope(W(1, 0, 0, 1));
    CHECK(r.shells.at(1) == std::pair<Rational, std::size_t>{Rational(4, 5), 5});
    CHECK(r.shells.at(4) == std::pair<Rational, std::size_t>{Rational(4, 5), 5});
    CHECK(r.shells.at(2) == std::pair<Rational, std::size_t>{Rational(6, 5), 10});
    CHECK(r.shells.at(3) == std::pair<Rational, std::size_t>{Rational(6, 5), 10});

    // cantellated 5-cell shells with the prism centers unscaled
    auto c = dual_polytope(W(1, 0, 1, 0), 2);
    CHECK(c.shells.at(1) == std::pair<Rational, std::size_t>{Rational(49, 45), 5});
    CHECK(c.shells.at(2) == std::pair<Rational, std::size_t>{Rational(6, 5), 10});
    CHECK(c.shells.at(4) == std::pair<Rational, std::size_t>{Rational(49, 20), 5});
}

TEST_CASE("self-duality of the 5-cell") {
    auto d = dual_polytope(W(1, 0, 0, 0));
    std::set<Weight> got(d.vertices.begin(), d.vertices.end()), want;
    for (const auto& v : orbit(W(1, 0, 0, 0))) want.insert(neg(v));
    CHECK(got == want);
}

TEST_CASE("flatness of every dual cell") {
    for (auto w : {W(0, 1, 0, 0), W(1, 1, 0, 0), W(1, 0, 1, 0), W(1, 1, 1, 1)})
        for (const auto& v : orbit(w)) {
            auto rep = dual_cell_geometry(w, v);
            for (const auto& u : rep.vertices)
                CHECK(weight_dot(u, v) == rep.plane_constant);
        }
}

TEST_CASE("dipyramid and pyramid metrics") {
    // with the tetrahedron centers unscaled: edges² 2, 9/2
    auto rep = dual_cell_geometry(W(0, 1, 0, 0), W(0, 1, 0, 0), 1);
    CHECK(rep.vertices.size() == 5);
    CHECK(rep.distances_sq == std::vector<Rational>{2, Rational(9, 2)});
    // default normalization scales everything by 2/3
    auto rep2 = dual_cell_geometry(W(0, 1, 0, 0), W(0, 1, 0, 0));
    CHECK(rep2.distances_sq == std::vector<Rational>{Rational(8, 9), 2});
    // pyramid over an equilateral triangle: side² 38/49, base² 2
    auto pyr = dual_cell_geometry(W(1, 1, 0, 0), W(1, 1, 0, 0));
    CHECK(pyr.vertices.size() == 4);
    CHECK(pyr.distances_sq == std::vector<Rational>{Rational(38, 49), 2});
}

TEST_CASE("bitruncated dual cell is an isosceles tetrahedron") {
    auto rep = dual_cell_geometry(W(0, 1, 1, 0), W(0, 1, 1, 0));
    CHECK(rep.vertices.size() == 4);
    CHECK(rep.distances_sq == std::vector<Rational>{Rational(6, 5), 2});
}

TEST_CASE("rhombohedron cell of the runcinated 5-cell") {
    auto rep = dual_cell_geometry(W(1, 0, 0, 1), W(1, 0, 0, 1));
    CHECK(rep.vertices.size() == 8);
    CHECK(rep.norm_sq == 2);
    REQUIRE(rep.norm.has_value());
    CHECK(*rep.norm == FieldScalar::sqrt2());
    CHECK(rep.plane_constant == 1);

    // unit-frame coordinates against the tabulated cell, common factor 1/√10
    auto k = FieldScalar::integer(1) / FieldScalar::sqrt10();
    auto tau = FieldScalar::tau(), sig = FieldScalar::sigma();
    auto one = FieldScalar::integer(1), two = FieldScalar::integer(2);
    std::set<std::array<FieldScalar, 3>> want;
    for (auto [x, y, z] : {std::array<FieldScalar, 3>{one, one, -one},
                           {-one, -one, one},
                           {tau, sig, two},
                           {sig, -two, -tau},
                           {-two, tau, -sig},
                           {two, -tau, sig},
                           {-sig, two, tau},
                           {-tau, -sig, -two}})
        want.insert({k * x, k * y, k * z});
    std::set<std::array<FieldScalar, 3>> got;
    for (const auto& c : rep.raw_coords)
        got.insert({c[0] / *rep.norm, c[1] / *rep.norm, c[2] / *rep.norm});
    CHECK(got == want);
}

TEST_CASE("stabilizer symmetry of the dual cell") {
    // Klein 4-group for the cantellated, D3 for the runcinated seed vertex
    for (auto w : {W(1, 0, 1, 0), W(1, 0, 0, 1), W(1, 1, 1, 0)}) {
        auto rep = dual_cell_geometry(w, w);
        std::set<Weight> cell(rep.vertices.begin(), rep.vertices.end());
        auto st = stabilizer(w);
        CHECK(st.order() == (w == W(1, 0, 0, 1) ? 6 : w == W(1, 0, 1, 0) ? 4 : 2));
        for (const auto& g : st.elements) {
            std::set<Weight> img;
            for (const auto& u : cell) img.insert(g.apply(u));
            CHECK(img == cell);
        }
    }
}

TEST_CASE("dynkin-flip covariance") {
    for (auto w : {W(1, 1, 0, 0), W(1, 0, 1, 0), W(1, 1, 0, 1), W(0, 1, 0, 0)}) {
        auto a = dual_polytope(w);
        auto b = dual_polytope(dynkin_flip(w));
        std::set<Weight> negated;
        for (const auto& v : a.vertices) negated.insert(neg(v));
        CHECK(std::set<Weight>(b.vertices.begin(), b.vertices.end()) == negated);
    }
}
