#include <doctest.h>

#include "helpers.hpp"

using namespace gradedres;
using namespace gradedres::testing;

namespace {

long slice_dim_free(int nvars, const BettiTable& betti, int i, int t) {
    // dim of the degree-t piece of (+)_j R(-j)^{beta_ij}
    long dim = 0;
    for (const auto& [key, rank] : betti.entries()) {
        if (key.first != i) continue;
        int d = t - key.second;
        if (d < 0) continue;
        long binom = 1;
        for (int k = 0; k < nvars - 1; ++k) binom = binom * (d + 1 + k) / (k + 1);
        dim += rank * binom;
    }
    return dim;
}

}  // namespace

TEST_CASE("residue field over two variables has the Koszul resolution") {
    GradedRingPtr R = poly_ring({"x", "y"});
    Resolution res = minimal_free_resolution(cyclic(R, {"x", "y"}),
                                             default_resolution_cap(*R));
    CHECK(res.projective_dimension == 2);
    CHECK(res.betti.row_sums() == std::vector<long>{1, 2, 1});
    CHECK(res.betti.entry(1, 1) == 2);
    CHECK(res.betti.entry(2, 2) == 1);
    CHECK(res.complex.is_minimal());
}

TEST_CASE("square of the irrelevant ideal: betti (1,3,2) and Hilbert consistency") {
    GradedRingPtr R = poly_ring({"x", "y"});
    ModulePresentation m = cyclic(R, {"x^2", "x*y", "y^2"});
    Resolution res = minimal_free_resolution(m, default_resolution_cap(*R));
    CHECK(res.betti.row_sums() == std::vector<long>{1, 3, 2});
    CHECK(res.betti.entry(1, 2) == 3);
    CHECK(res.betti.entry(2, 3) == 2);
    // alternating sum of the resolution's graded pieces recovers M
    for (int t = 0; t <= 6; ++t) {
        long alternating = 0;
        for (int i = 0; i <= res.projective_dimension; ++i) {
            long piece = slice_dim_free(2, res.betti, i, t);
            alternating += (i % 2 == 0) ? piece : -piece;
        }
        CHECK(alternating == m.hilbert_function(t));
    }
}

TEST_CASE("hypersurface quotients resolve finitely exactly when pd is finite") {
    GradedRingPtr node = quotient_ring({"x", "y"}, {"x*y"});
    Resolution res = minimal_free_resolution(cyclic(node, {"x - y"}), 10);
    CHECK(res.projective_dimension == 1);
    CHECK(res.betti.row_sums() == std::vector<long>{1, 1});

    CHECK_THROWS_WITH_AS(
        minimal_free_resolution(cyclic(node, {"x"}), 10),
        "projective dimension exceeds cap (infinite resolution suspected)",
        algebra_error);
}

TEST_CASE("the zero module cannot be resolved") {
    GradedRingPtr R = poly_ring({"x"});
    CHECK_THROWS_WITH_AS(minimal_free_resolution(cyclic(R, {"1"}), 5),
                         doctest::Contains("zero module"), algebra_error);
}

TEST_CASE("the Tor self test certifies conormal freeness") {
    GradedRingPtr R = poly_ring({"x", "y"});
    // complete intersections have free conormal modules
    CHECK(tor1_self_test(cyclic(R, {"x", "y"}), 6));
    CHECK(tor1_self_test(cyclic(R, {"x^2", "y"}), 6));
    // the square of the maximal ideal does not
    CHECK_FALSE(tor1_self_test(cyclic(R, {"x^2", "x*y", "y^2"}), 6));
}

TEST_CASE("pruning removes unit entries without changing homology") {
    GradedRingPtr R = poly_ring({"x", "y"});
    ChainComplex koszul = koszul_complex(R, polys(R, {"x", "y"}));
    // glue an identity complex on top of the Koszul complex
    GradedFreeModule one{{3}};
    std::vector<GradedMap> id_diff{GradedMap(
        R, one, one, {{Polynomial::constant(R->poly(), 1)}})};
    ChainComplex identity(R, 1, {one, one}, id_diff);
    ChainComplex fat = koszul.direct_sum(identity);
    CHECK_FALSE(fat.is_minimal());
    ChainComplex pruned = prune_complex(fat);
    CHECK(pruned.is_minimal());
    CHECK(pruned.ranks() == koszul.ranks());
    CHECK(homology_lengths(pruned) == homology_lengths(fat));
    CHECK(euler_characteristic(pruned) == euler_characteristic(koszul));
}

TEST_CASE("minimal generator selection drops redundant generators") {
    GradedRingPtr R = poly_ring({"x", "y"});
    std::vector<FreeVector> gens;
    for (const Polynomial& f : polys(R, {"x", "x^2", "y", "x*y + y^2"}))
        gens.push_back(FreeVector::wrap(f));
    std::vector<int> ambient{0};
    std::vector<FreeVector> minimal = minimalize_generators(*R, gens, ambient);
    CHECK(minimal.size() == 2);
}

TEST_CASE("lifting through generators reproduces the targets") {
    GradedRingPtr R = poly_ring({"x", "y"});
    std::vector<FreeVector> gens{FreeVector::wrap(pp(R, "x^2")),
                                 FreeVector::wrap(pp(R, "y^2"))};
    std::vector<FreeVector> targets{FreeVector::wrap(pp(R, "x^2*y + x*y^2"))};
    std::vector<int> ambient{0};
    auto coords = lift_through(*R, gens, targets, ambient);
    REQUIRE(coords.size() == 1);
    FreeVector acc(R->poly(), 1);
    for (std::size_t k = 0; k < gens.size(); ++k)
        acc = acc + gens[k].poly_multiple(coords[0][k]);
    CHECK(acc == targets[0]);

    std::vector<FreeVector> outside{FreeVector::wrap(pp(R, "x*y"))};
    CHECK_THROWS_WITH_AS(lift_through(*R, gens, outside, ambient),
                         doctest::Contains("lift failed"), algebra_error);
}

TEST_CASE("resolution caps default to nvars + 2") {
    CHECK(default_resolution_cap(*poly_ring({"x", "y", "z"})) == 5);
}
