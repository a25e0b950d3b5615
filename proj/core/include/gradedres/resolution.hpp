#ifndef GRADEDRES_RESOLUTION_HPP
#define GRADEDRES_RESOLUTION_HPP

#include "gradedres/betti_table.hpp"
#include "gradedres/chain_complex.hpp"

namespace gradedres {

/// Generators of { v : sum v_j columns[j] = 0 over R } for columns living in
/// a free module with the given twists. The returned set is a minimal
/// (graded Nakayama) generating set, each entry reduced modulo J.
std::vector<FreeVector> kernel_generators(const GradedRing& ring,
                                          const std::vector<FreeVector>& columns,
                                          const std::vector<int>& ambient_twists);

/// Expresses each of `targets` as an R-combination of `generators` (all in a
/// free module with the given twists). Throws if some target is not in the
/// span. Result[j] is the coordinate vector of targets[j].
std::vector<std::vector<Polynomial>> lift_through(const GradedRing& ring,
                                                  const std::vector<FreeVector>& generators,
                                                  const std::vector<FreeVector>& targets,
                                                  const std::vector<int>& ambient_twists);

/// Greedy minimal generating set over R, processed in increasing degree.
std::vector<FreeVector> minimalize_generators(const GradedRing& ring,
                                              std::vector<FreeVector> gens,
                                              const std::vector<int>& ambient_twists);

struct Resolution {
    ChainComplex complex;
    BettiTable betti;
    int projective_dimension;
};

/// Minimal graded free resolution of coker(presentation), built by iterated
/// kernel computation with minimal generators at each step. Throws
/// "projective dimension exceeds cap (infinite resolution suspected)" when
/// more than `cap` syzygy steps are needed.
Resolution minimal_free_resolution(const ModulePresentation& module, int cap);

/// Default cap: number of variables + 2.
int default_resolution_cap(const GradedRing& ring);

/// For cyclic M = R/I: whether Tor_1(R/I, R/I) = H_1(F (x) M) is free over
/// R/I of the forced rank beta_1, i.e. has length beta_1 * length(M).
bool tor1_self_test(const ModulePresentation& module, int cap);

/// Gaussian elimination of invertible constant entries across a complex;
/// returns a quasi-isomorphic complex with no unit entries.
ChainComplex prune_complex(const ChainComplex& complex);

}  // namespace gradedres

#endif
