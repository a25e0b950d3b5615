#include <doctest.h>

#include "helpers.hpp"

using namespace gradedres;
using namespace gradedres::testing;

TEST_CASE("frobenius power scales exponents and fixes prime-field scalars") {
    GradedRingPtr R = poly_ring({"x", "y"}, 3);
    CHECK(frobenius_power(pp(R, "x + 2*y"), 3) == pp(R, "x^3 + 2*y^3"));
    CHECK(frobenius_power(pp(R, "x^2*y + x"), 3) == pp(R, "x^6*y^3 + x^3"));
    GradedRingPtr node = quotient_ring({"x", "y"}, {"x*y"}, 3);
    // (x - y)^3 = x^3 - y^3 survives reduction mod the node relation
    CHECK(frobenius_power(pp(node, "x - y"), 3) == pp(node, "x^3 - y^3"));
}

TEST_CASE("frobenius twist of a Koszul complex cubes the entries") {
    GradedRingPtr R = poly_ring({"x", "y"}, 3);
    ChainComplex k = koszul_complex(R, polys(R, {"x", "y"}));
    ChainComplex cube = koszul_complex(R, polys(R, {"x^3", "y^3"}));
    ChainComplex tw = frobenius_twist(k, 1);
    CHECK(tw.ranks() == cube.ranks());
    for (int n = tw.lo(); n <= tw.hi(); ++n) {
        CHECK(tw.module(n).twists == cube.module(n).twists);
        if (n > tw.lo())
            CHECK(tw.diff(n).rows() == cube.diff(n).rows());
    }
    // e = 0 is the identity twist
    ChainComplex same = frobenius_twist(k, 0);
    for (int n = k.lo() + 1; n <= k.hi(); ++n)
        CHECK(same.diff(n).rows() == k.diff(n).rows());
    // twists compose: phi^1 of phi^1 equals phi^2
    ChainComplex twice = frobenius_twist(frobenius_twist(k, 1), 1);
    ChainComplex sq = frobenius_twist(k, 2);
    for (int n = k.lo() + 1; n <= k.hi(); ++n)
        CHECK(twice.diff(n).rows() == sq.diff(n).rows());
}

TEST_CASE("frobenius twist needs positive characteristic") {
    GradedRingPtr R = poly_ring({"x"}, 0);
    ChainComplex k = koszul_complex(R, polys(R, {"x"}));
    CHECK_THROWS_WITH_AS(frobenius_twist(k, 1),
                         "Frobenius requires positive characteristic",
                         algebra_error);
}

TEST_CASE("normalized Frobenius Euler characteristics") {
    GradedRingPtr R = poly_ring({"x", "y"}, 3);
    ChainComplex k = koszul_complex(R, polys(R, {"x", "y"}));
    DuttaSequence d = dutta_sequence(k, 2);
    CHECK(d.constant);
    CHECK(d.values == std::vector<mpq_class>{1, 1, 1});

    GradedRingPtr node = quotient_ring({"x", "y"}, {"x*y"}, 3);
    Resolution res =
        minimal_free_resolution(cyclic(node, {"x - y"}), 5);
    DuttaSequence dn = dutta_sequence(res.complex, 2);
    CHECK(dn.constant);
    CHECK(dn.values == std::vector<mpq_class>{2, 2, 2});

    // shifting by one homological degree negates every value
    DuttaSequence ds = dutta_sequence(k.shifted(1), 2);
    CHECK(ds.constant);
    CHECK(ds.values == std::vector<mpq_class>{-1, -1, -1});
}

TEST_CASE("frobenius minimality audit on a finite-colength quotient") {
    GradedRingPtr R = poly_ring({"x", "y"}, 3);
    Resolution res =
        minimal_free_resolution(cyclic(R, {"x^2", "x*y", "y^2"}), 4);
    CHECK(frobenius_minimality_audit(res.complex, 1));
    // H_0 of the twisted resolution is R/(x^6, x^3 y^3, y^6), length 27
    ChainComplex tw = frobenius_twist(res.complex, 1);
    CHECK(homology_lengths(tw)[0] == 27);
}

TEST_CASE("frobenius twist commutes with the symmetric square") {
    GradedRingPtr R = poly_ring({"x", "y"}, 5);
    ChainComplex f = koszul_complex(R, polys(R, {"x^2", "y"}));
    ChainComplex a = frobenius_twist(sym2(f), 1);
    ChainComplex b = sym2(frobenius_twist(f, 1));
    CHECK(a.ranks() == b.ranks());
    for (int n = a.lo() + 1; n <= a.hi(); ++n)
        CHECK(a.diff(n).rows() == b.diff(n).rows());
}
