#include <doctest.h>

#include "helpers.hpp"

using namespace gradedres;
using namespace gradedres::testing;

TEST_CASE("koszul complexes have binomial ranks and resolve the quotient") {
    GradedRingPtr R = poly_ring({"x", "y", "z"});
    ChainComplex k3 = koszul_complex(R, polys(R, {"x", "y", "z"}));
    CHECK(k3.ranks() == std::vector<int>{1, 3, 3, 1});
    CHECK(k3.is_minimal());
    CHECK(homology_lengths(k3) == std::vector<long>{1, 0, 0, 0});

    ChainComplex mixed = koszul_complex(R, polys(R, {"x^2", "y", "z^3"}));
    CHECK(mixed.module(3).twists == std::vector<int>{6});
    CHECK(homology_lengths(mixed) == std::vector<long>{6, 0, 0, 0});
}

TEST_CASE("regular sequence detection through Koszul homology") {
    GradedRingPtr R = poly_ring({"x", "y"});
    CHECK(is_regular_sequence(*R, polys(R, {"x", "y"})));
    CHECK(is_regular_sequence(*R, polys(R, {"x^2", "y^3"})));
    CHECK_FALSE(is_regular_sequence(*R, polys(R, {"x", "x*y"})));
    CHECK(is_regular_sequence(*R, {}));
    GradedRingPtr node = quotient_ring({"x", "y"}, {"x*y"});
    CHECK(is_regular_sequence(*node, polys(node, {"x - y"})));
    CHECK_FALSE(is_regular_sequence(*node, polys(node, {"x"})));
}

TEST_CASE("homology length computation rejects non-finite-length homology") {
    GradedRingPtr R = poly_ring({"x", "y"});
    ChainComplex bad = koszul_complex(R, polys(R, {"x", "x*y"}));
    CHECK_THROWS_WITH_AS(homology_lengths(bad), "complex not in Perf^fl",
                         algebra_error);
}

TEST_CASE("tensor square ranks are the convolution of the input ranks") {
    GradedRingPtr R = poly_ring({"x", "y"});
    CHECK(tensor_square(koszul_complex(R, polys(R, {"x"}))).ranks() ==
          std::vector<int>{1, 2, 1});
    CHECK(tensor_square(koszul_complex(R, polys(R, {"x", "y"}))).ranks() ==
          std::vector<int>{1, 4, 6, 4, 1});
    ChainComplex point = ChainComplex::single_free(R, GradedFreeModule{{0}});
    CHECK(tensor_square(point).ranks() == std::vector<int>{1});
}

TEST_CASE("the signed swap is an audited involution with the block signs") {
    GradedRingPtr R = poly_ring({"x", "y"}, 0);
    ComplexInvolution t = tau(koszul_complex(R, polys(R, {"x", "y"})));
    // degree 1 = blocks (0,1) and (1,0): an unsigned swap
    const auto& m1 = t.matrix(1);
    CHECK(m1[2][0] == 1);
    CHECK(m1[0][2] == 1);
    // degree 2 basis: (0,2) at 0, the four (1,1) pairs at 1..4, (2,0) at 5
    const auto& m2 = t.matrix(2);
    CHECK(m2[1][1] == -1);  // (1,1) pair (0,0) is fixed with sign -1
    CHECK(m2[4][4] == -1);
    CHECK(m2[3][2] == -1);  // (1,1) pairs (0,1) <-> (1,0), sign -1
    CHECK(m2[2][3] == -1);
    CHECK(m2[5][0] == 1);   // (0,2) <-> (2,0) cross block, sign +1
    CHECK(m2[0][5] == 1);
    CHECK(m2[0][0] == 0);
}

TEST_CASE("sym2/wedge2 ranks follow the diagonal parity rule") {
    GradedRingPtr R1 = poly_ring({"x"});
    ChainComplex k1 = koszul_complex(R1, polys(R1, {"x"}));
    CHECK(sym2(k1).ranks() == std::vector<int>{1, 1, 0});
    CHECK(wedge2(k1).ranks() == std::vector<int>{0, 1, 1});

    GradedRingPtr R = poly_ring({"x", "y"});
    ChainComplex k2 = koszul_complex(R, polys(R, {"x", "y"}));
    CHECK(sym2(k2).ranks() == std::vector<int>{1, 2, 2, 2, 1});
    CHECK(wedge2(k2).ranks() == std::vector<int>{0, 2, 4, 2, 0});

    // concentrated in degree 0: the classical squares
    ChainComplex flat = ChainComplex::single_free(R, GradedFreeModule{{0, 0, 0}});
    CHECK(sym2(flat).ranks() == std::vector<int>{6});
    CHECK(wedge2(flat).ranks() == std::vector<int>{3});
}

TEST_CASE("rank and homology-length additivity of the splitting") {
    GradedRingPtr R = poly_ring({"x", "y"});
    for (const auto& elems :
         {std::vector<std::string>{"x", "y"}, {"x^2", "y"}, {"x^2", "y^3"}}) {
        ChainComplex f = koszul_complex(R, polys(R, elems));
        ChainComplex t2 = tensor_square(f);
        ChainComplex s = sym2(f);
        ChainComplex l = wedge2(f);
        for (int n = t2.lo(); n <= t2.hi(); ++n)
            CHECK(s.rank(n) + l.rank(n) == t2.rank(n));
        std::vector<long> hs = homology_lengths(s);
        std::vector<long> hl = homology_lengths(l);
        std::vector<long> ht = homology_lengths(t2);
        for (std::size_t k = 0; k < ht.size(); ++k)
            CHECK(hs[k] + hl[k] == ht[k]);
    }
}

TEST_CASE("characteristic 2 cannot split the tensor square") {
    GradedRingPtr R = poly_ring({"x"}, 2);
    ChainComplex k = koszul_complex(R, polys(R, {"x"}));
    CHECK_THROWS_WITH_AS(sym2(k), "Adams splitting requires 2 invertible",
                         algebra_error);
    CHECK_THROWS_WITH_AS(wedge2(k), "Adams splitting requires 2 invertible",
                         algebra_error);
}

TEST_CASE("brute-force slice homology agrees with the Groebner path") {
    GradedRingPtr R = poly_ring({"x", "y"});
    std::vector<ChainComplex> cases;
    cases.push_back(koszul_complex(R, polys(R, {"x", "y"})));
    cases.push_back(koszul_complex(R, polys(R, {"x^2", "y"})));
    cases.push_back(tensor_square(cases[1]));
    cases.push_back(sym2(cases[0]));
    cases.push_back(wedge2(cases[0]));
    GradedRingPtr node = quotient_ring({"x", "y"}, {"x*y"});
    cases.push_back(
        minimal_free_resolution(cyclic(node, {"x - y"}), 5).complex);
    for (const ChainComplex& c : cases)
        CHECK(homology_lengths_bruteforce(c, default_slice_bound(c)) ==
              homology_lengths(c));
}

TEST_CASE("the brute-force oracle flags an insufficient degree bound") {
    GradedRingPtr R = poly_ring({"x", "y"});
    ChainComplex k = koszul_complex(R, polys(R, {"x^3", "y^3"}));
    CHECK_THROWS_WITH_AS(homology_lengths_bruteforce(k, 2),
                         "degree bound insufficient", algebra_error);
}

TEST_CASE("euler characteristics: base cases, shifts and direct sums") {
    GradedRingPtr R = poly_ring({"x", "y"});
    ChainComplex k = koszul_complex(R, polys(R, {"x", "y"}));
    CHECK(euler_characteristic(k) == 1);
    CHECK(euler_characteristic(k.shifted(1)) == -1);
    CHECK(euler_characteristic(k.shifted(2)) == 1);
    ChainComplex sum = k.direct_sum(k.shifted(1));
    CHECK(euler_characteristic(sum) == 0);
    ChainComplex m = koszul_complex(R, polys(R, {"x^2", "y"}));
    CHECK(euler_characteristic(k.direct_sum(m)) ==
          euler_characteristic(k) + euler_characteristic(m));
    // two points meeting improperly in the plane: the alternating sum of
    // the Tor lengths vanishes
    CHECK(euler_characteristic(tensor_square(m)) == 0);
}

TEST_CASE("psi2 matches 2^d on Koszul classes") {
    GradedRingPtr R1 = poly_ring({"x"});
    CHECK(psi2_euler(koszul_complex(R1, polys(R1, {"x"}))) == 2);
    GradedRingPtr R = poly_ring({"x", "y"});
    CHECK(psi2_euler(koszul_complex(R, polys(R, {"x", "y"}))) == 4);
    Resolution res = minimal_free_resolution(cyclic(R1, {"x^2"}), 3);
    CHECK(psi2_euler(res.complex) == 4);
}

TEST_CASE("complexes audit d squared") {
    GradedRingPtr R = poly_ring({"x", "y"});
    GradedFreeModule f0{{0}}, f1{{1}}, f2{{2}};
    std::vector<GradedMap> diffs;
    diffs.push_back(GradedMap(R, f1, f0, {{pp(R, "x")}}));
    diffs.push_back(GradedMap(R, f2, f1, {{pp(R, "y")}}));
    CHECK_THROWS_AS(ChainComplex(R, 0, {f0, f1, f2}, diffs), algebra_error);
}
