#pragma once

#include "spolya/geometry.hpp"
#include "spolya/polynomial.hpp"

#include <random>
#include <string>
#include <vector>

namespace fixtures {

using spolya::SparsePoly;

inline SparsePoly P2(const std::string& s);
inline std::vector<std::string> vars(std::size_t n, const std::string& prefix = "t") {
    return spolya::default_variable_names(n, prefix);
}

// Homogeneous cubic in t1..t4 whose Newton polytope misses the t1^3 vertex of 3*simplex.
inline SparsePoly prism_cubic() {
    return spolya::parse_polynomial(
        "t4^3 + t1*t4^2 - 1.9*t2*t4^2 + t2^2*t4 + t3*t4^2 + t1*t3*t4 - 1.9*t2*t3*t4 + t2^2*t3", vars(4));
}

// prism_cubic plus the three missing pure cubes.
inline SparsePoly prism_cubic_h() {
    return prism_cubic() + spolya::parse_polynomial("t1^3 + t2^3 + t3^3", vars(4));
}

// prism_cubic with t4 = 1; its Newton polytope is triangle x segment.
inline SparsePoly prism_dehom() {
    return spolya::parse_polynomial("1 + t1 - 1.9*t2 + t2^2 + t3 + t1*t3 - 1.9*t2*t3 + t2^2*t3", vars(3));
}

inline SparsePoly pentagon_poly() {
    return spolya::parse_polynomial("1 + t1 + t2 + t1^2 - 2*t1*t2 + t2^2 + t1*t2^2 + t1^2*t2", vars(2));
}

inline SparsePoly quadrilateral_poly() {
    return spolya::parse_polynomial(
        "1 + t1 + t2 - 2*t1*t2 + t1^2*t2 + t2^2 + t1*t2^2 + t1^2*t2^2 + t1^3*t2^2", vars(2));
}

inline SparsePoly hexagon_f1() {
    return spolya::parse_polynomial("2*t1^2 + t1*t2 + t2^2 - 2*t1*t3 + t2*t3 + t3^2", vars(3));
}

inline SparsePoly hexagon_f2() {
    return spolya::parse_polynomial(
        "t1^2*t2^2 + t1^2*t2*t3 - 2*t1*t2^2*t3 + t1^2*t3^2 + t1*t2*t3^2 + 2*t2^2*t3^2", vars(3));
}

inline SparsePoly hexagon_poly() {
    return spolya::parse_polynomial(
        "2*t1^4*t2^2 + t1^3*t2^3 + t1^2*t2^4 + 2*t1^4*t2*t3 - 5*t1^3*t2^2*t3 - 2*t1*t2^4*t3"
        " + 2*t1^4*t3^2 + t1^3*t2*t3^2 + 12*t1^2*t2^2*t3^2 + t1*t2^3*t3^2 + 2*t2^4*t3^2"
        " - 2*t1^3*t3^3 - 5*t1*t2^2*t3^3 + 2*t2^3*t3^3 + t1^2*t3^4 + t1*t2*t3^4 + 2*t2^2*t3^4",
        vars(3));
}

inline SparsePoly hexagon_g1() {
    return spolya::parse_polynomial("t1^2 + t1*t2 + t2^2 + t1*t3 + t2*t3 + t3^2", vars(3));
}

inline SparsePoly hexagon_g2() {
    return spolya::parse_polynomial(
        "t1^2*t2^2 + t1^2*t2*t3 + t1*t2^2*t3 + t1^2*t3^2 + t1*t2*t3^2 + t2^2*t3^2", vars(3));
}

// Second Symanzik polynomial of the banana graph at m = (1,1,1), s = 897/100.
inline SparsePoly banana_instance() {
    return spolya::parse_polynomial(
        "-597/100*x1*x2*x3 + x2^2*x3 + x2*x3^2 + x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x3^2", vars(3, "x"));
}

inline SparsePoly random_poly(std::mt19937_64& rng, std::size_t dim, std::size_t terms, int max_exp,
                              bool allow_negative_exponents = false) {
    std::uniform_int_distribution<int> e(allow_negative_exponents ? -max_exp : 0, max_exp);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<std::pair<spolya::ExponentVector, spolya::Rational>> t;
    for (std::size_t i = 0; i < terms; ++i) {
        spolya::ExponentVector a(dim);
        for (auto& x : a) x = e(rng);
        spolya::Rational c(num(rng), den(rng));
        c.canonicalize();
        if (sgn(c) == 0) c = 1;
        t.emplace_back(std::move(a), c);
    }
    return SparsePoly::from_terms(dim, std::move(t));
}

inline std::vector<spolya::Rational> random_positive_point(std::mt19937_64& rng, std::size_t dim) {
    std::uniform_int_distribution<int> k(1, 100);
    std::vector<spolya::Rational> p;
    for (std::size_t i = 0; i < dim; ++i) {
        spolya::Rational q(k(rng), 10);
        q.canonicalize();
        p.push_back(q);
    }
    return p;
}

}  // namespace fixtures

namespace fixtures {
inline SparsePoly P2(const std::string& s) { return spolya::parse_polynomial(s, vars(2)); }
// Newton polytopes with facets in the labelling used by the worked examples.
inline spolya::LatticePolytope prism() {
    return spolya::reorder_facets(spolya::newton_polytope(prism_dehom()),
                                  {{1, 0, 0}, {0, 1, 0}, {-2, -1, 0}, {0, 0, 1}, {0, 0, -1}});
}

inline spolya::LatticePolytope pentagon() {
    return spolya::reorder_facets(spolya::newton_polytope(pentagon_poly()), {{1, 0}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}});
}

inline spolya::LatticePolytope quadrilateral() {
    return spolya::reorder_facets(spolya::newton_polytope(quadrilateral_poly()), {{1, 0}, {0, 1}, {-1, 1}, {0, -1}});
}

}  // namespace fixtures

#include "spolya/feynman.hpp"

namespace fixtures {

inline spolya::InternalEdge edge(std::size_t u, std::size_t v, const std::string& mass) {
    return {u, v, spolya::MassTag::parse(mass)};
}

// Two vertices joined by three edges; p1, p2 enter at vertex 1 and p3, p4 at vertex 2.
inline spolya::FeynmanGraph banana_graph(const std::string& m3 = "m3") {
    spolya::FeynmanGraph g;
    g.vertex_count = 2;
    g.edges = {edge(1, 2, "m1"), edge(1, 2, "m2"), edge(1, 2, m3)};
    g.legs = {{1, 1}, {1, 2}, {2, 3}, {2, 4}};
    return g;
}

// k13 + k14 + k23 + k24 = -s.
inline spolya::KinematicSpec banana_kinematics() {
    spolya::KinematicSpec k;
    for (std::size_t i : {1, 2})
        for (std::size_t j : {3, 4}) k.set(i, j, spolya::parse_linear_form("-s/4"));
    return k;
}

// Non-planar double box; vertices A..F are 1..6.
inline spolya::FeynmanGraph double_box_graph(const std::string& m2 = "m2") {
    spolya::FeynmanGraph g;
    g.vertex_count = 6;
    g.edges = {edge(2, 4, "m1"), edge(1, 2, m2), edge(1, 3, "0"), edge(3, 6, "0"),
               edge(3, 5, "0"), edge(4, 6, "0"), edge(4, 5, "0")};
    g.legs = {{2, 1}, {1, 2}, {5, 3}, {6, 4}};
    return g;
}

// Massless external legs with momentum conservation, in terms of s and t.
inline spolya::KinematicSpec double_box_kinematics() {
    spolya::KinematicSpec k;
    k.momentum_conservation = true;
    for (std::size_t i = 1; i <= 4; ++i) k.set(i, i, {});
    k.set(1, 2, spolya::parse_linear_form("s/2"));
    k.set(3, 4, spolya::parse_linear_form("s/2"));
    k.set(1, 4, spolya::parse_linear_form("t/2"));
    k.set(2, 3, spolya::parse_linear_form("t/2"));
    k.set(1, 3, spolya::parse_linear_form("-(s + t)/2"));
    k.set(2, 4, spolya::parse_linear_form("-(s + t)/2"));
    return k;
}

}  // namespace fixtures
