#include <benchmark/benchmark.h>

#include "gradedres/checks.hpp"
#include "gradedres/frobenius.hpp"
#include "gradedres/homology.hpp"
#include "gradedres/koszul.hpp"
#include "gradedres/resolution.hpp"
#include "gradedres/tensor_ops.hpp"

using namespace gradedres;

namespace {

GradedRingPtr ring_dim(int d) {
    std::vector<std::string> names{"x1", "x2", "x3", "x4"};
    names.resize(d);
    return std::make_shared<GradedRing>(
        make_poly_ring(Field::prime(101), std::move(names)));
}

std::vector<Polynomial> variables(const GradedRingPtr& r, int d) {
    std::vector<Polynomial> v;
    for (int i = 0; i < d; ++i) v.push_back(Polynomial::variable(r->poly(), i));
    return v;
}

void bm_groebner_socle_power(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    GradedRingPtr r = ring_dim(2);
    std::vector<Polynomial> gens;
    for (int i = 0; i <= d; ++i)
        gens.push_back(parse_polynomial(
            r->poly(), "x1^" + std::to_string(d - i) + "*x2^" + std::to_string(i)));
    for (auto _ : state) {
        GroebnerBasis gb = buchberger_ideal(gens);
        benchmark::DoNotOptimize(gb.gens.size());
    }
}
BENCHMARK(bm_groebner_socle_power)->Arg(4)->Arg(8)->Arg(12);

void bm_residue_field_resolution(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    GradedRingPtr r = ring_dim(d);
    for (auto _ : state) {
        Resolution res = minimal_free_resolution(
            ModulePresentation::cyclic(r, variables(r, d)), d + 2);
        benchmark::DoNotOptimize(res.complex.hi());
    }
}
BENCHMARK(bm_residue_field_resolution)->Arg(2)->Arg(3)->Arg(4);

void bm_psi2_euler(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    GradedRingPtr r = ring_dim(d);
    ChainComplex k = koszul_complex(r, variables(r, d));
    for (auto _ : state) benchmark::DoNotOptimize(psi2_euler(k));
}
BENCHMARK(bm_psi2_euler)->Arg(1)->Arg(2)->Arg(3);

void bm_homology_lengths_tensor_square(benchmark::State& state) {
    GradedRingPtr r = ring_dim(2);
    ChainComplex t2 = tensor_square(koszul_complex(r, variables(r, 2)));
    for (auto _ : state) benchmark::DoNotOptimize(homology_lengths(t2));
}
BENCHMARK(bm_homology_lengths_tensor_square);

void bm_dutta_sequence(benchmark::State& state) {
    GradedRingPtr r = std::make_shared<GradedRing>(
        make_poly_ring(Field::prime(3), {"x", "y"}));
    ChainComplex k = koszul_complex(
        r, {Polynomial::variable(r->poly(), 0), Polynomial::variable(r->poly(), 1)});
    for (auto _ : state)
        benchmark::DoNotOptimize(dutta_sequence(k, 2).values.size());
}
BENCHMARK(bm_dutta_sequence);

}  // namespace

BENCHMARK_MAIN();
