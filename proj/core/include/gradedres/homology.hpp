#ifndef GRADEDRES_HOMOLOGY_HPP
#define GRADEDRES_HOMOLOGY_HPP

#include "gradedres/chain_complex.hpp"

namespace gradedres {

/// Presentation of H_i(c) = ker d_i / im d_{i+1}: generators are a minimal
/// generating set of the kernel, relations are the lifted image columns
/// together with the syzygies of the kernel generators.
ModulePresentation homology_presentation(const ChainComplex& c, int i);

/// length of H_i(c); throws "complex not in Perf^fl" when infinite.
long homology_length(const ChainComplex& c, int i);

/// lengths of H_i(c) for i = lo()..hi().
std::vector<long> homology_lengths(const ChainComplex& c);

/// Independent oracle: dim_k ker - rank im on each graded slice up to
/// degree_bound. Throws "degree bound insufficient" when the top slice
/// still carries homology.
std::vector<long> homology_lengths_bruteforce(const ChainComplex& c, int degree_bound);

/// A slice bound that is safe for complexes with finite-length homology:
/// past it every kernel element is hit, judged from the twists present.
int default_slice_bound(const ChainComplex& c);

/// sum (-1)^i lengths[i - lo].
long euler_characteristic(const ChainComplex& c, const std::vector<long>& lengths);
long euler_characteristic(const ChainComplex& c);

/// chi(S2 c) - chi(L2 c); the class-level second Adams operation.
long psi2_euler(const ChainComplex& c);

}  // namespace gradedres

#endif
