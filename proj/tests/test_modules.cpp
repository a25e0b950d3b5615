#include <doctest.h>

#include "helpers.hpp"

using namespace gradedres;
using namespace gradedres::testing;

TEST_CASE("hilbert function of the free ring and of artinian quotients") {
    GradedRingPtr R = poly_ring({"x", "y"});
    ModulePresentation free_module = cyclic(R, {});
    for (int t = 0; t <= 5; ++t) CHECK(free_module.hilbert_function(t) == t + 1);
    CHECK_FALSE(free_module.length().has_value());

    ModulePresentation m = cyclic(R, {"x^2", "y^2"});
    CHECK(m.hilbert_function(0) == 1);
    CHECK(m.hilbert_function(1) == 2);
    CHECK(m.hilbert_function(2) == 1);
    CHECK(m.hilbert_function(3) == 0);
    CHECK(m.length() == 4);
    CHECK(m.top_degree() == 2);
    CHECK(m.standard_basis(1).size() == 2);
}

TEST_CASE("staircase finiteness test rejects positive-dimensional cokernels") {
    GradedRingPtr R = poly_ring({"x", "y"});
    CHECK_FALSE(cyclic(R, {"x"}).length().has_value());
    CHECK_FALSE(cyclic(R, {"x*y"}).length().has_value());
    CHECK(cyclic(R, {"x", "y"}).length() == 1);
}

TEST_CASE("lengths over quotient rings count standard monomials of R") {
    GradedRingPtr node = quotient_ring({"x", "y"}, {"x*y"});
    CHECK(cyclic(node, {"x - y"}).length() == 2);
    CHECK_FALSE(cyclic(node, {"x"}).length().has_value());  // R/(x) = k[y]
    GradedRingPtr cone = quotient_ring({"x", "y", "z"}, {"x^2 - y*z"});
    CHECK(cyclic(cone, {"y", "z"}).length() == 2);
}

TEST_CASE("ring invariants: dimension and complete intersection detection") {
    CHECK(poly_ring({"x", "y"})->dimension() == 2);
    CHECK(poly_ring({"x", "y"})->is_complete_intersection());
    GradedRingPtr node = quotient_ring({"x", "y"}, {"x*y"});
    CHECK(node->dimension() == 1);
    CHECK(node->is_complete_intersection());
    GradedRingPtr cone = quotient_ring({"x", "y", "z"}, {"x^2 - y*z"});
    CHECK(cone->dimension() == 2);
    CHECK(cone->is_complete_intersection());
    GradedRingPtr fat = quotient_ring({"x", "y"}, {"x^2", "x*y", "y^2"});
    CHECK(fat->dimension() == 0);
    CHECK_FALSE(fat->is_complete_intersection());
    CHECK(quotient_ring({"x", "y", "z", "w"}, {"x*y", "z*w"})->dimension() == 2);
}

TEST_CASE("quotient reduction gives canonical representatives") {
    GradedRingPtr node = quotient_ring({"x", "y"}, {"x*y"});
    CHECK(node->reduce(pp(node, "x*y + x")) == pp(node, "x"));
    CHECK(node->reduce(pp(node, "x^2*y^3")).is_zero());
    CHECK(node->description() == "F(101)[x,y]/(x*y)");
}

TEST_CASE("zero modules are recognized") {
    GradedRingPtr R = poly_ring({"x", "y"});
    CHECK(cyclic(R, {"1"}).is_zero_module());
    CHECK_FALSE(cyclic(R, {"x", "y"}).is_zero_module());
}

TEST_CASE("graded maps validate entry degrees against the twists") {
    GradedRingPtr R = poly_ring({"x", "y"});
    std::vector<std::vector<Polynomial>> rows{{pp(R, "x"), pp(R, "y^2")}};
    CHECK_THROWS_WITH_AS(
        GradedMap(R, GradedFreeModule{{1, 1}}, GradedFreeModule{{0}}, rows),
        doctest::Contains("entry"), algebra_error);
    GradedMap ok(R, GradedFreeModule{{1, 2}}, GradedFreeModule{{0}}, rows);
    CHECK(ok.entry(0, 1) == pp(R, "y^2"));
    CHECK_FALSE(ok.has_constant_entry());
}

TEST_CASE("non-cyclic presentations: graded pieces of a twisted cokernel") {
    GradedRingPtr R = poly_ring({"x"});
    // coker of [x^2] (+) [x]: k[x]/(x^2) (+) k[x]/(x) with the second
    // generator in internal degree 1
    std::vector<std::vector<Polynomial>> rows{
        {pp(R, "x^2"), Polynomial(R->poly())},
        {Polynomial(R->poly()), pp(R, "x")}};
    GradedMap map(R, GradedFreeModule{{2, 2}}, GradedFreeModule{{0, 1}}, rows);
    ModulePresentation m(R, map);
    CHECK(m.hilbert_function(0) == 1);
    CHECK(m.hilbert_function(1) == 2);
    CHECK(m.hilbert_function(2) == 0);
    CHECK(m.length() == 3);
}
