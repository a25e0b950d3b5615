#ifndef GRADEDRES_KOSZUL_HPP
#define GRADEDRES_KOSZUL_HPP

#include "gradedres/chain_complex.hpp"

namespace gradedres {

/// Koszul complex on homogeneous ring elements. Basis of the i-th module:
/// size-i index subsets in lexicographic order; d(e_T) = sum_j (-1)^(j+1)
/// y_{T[j]} e_{T minus T[j]}.
ChainComplex koszul_complex(GradedRingPtr ring, const std::vector<Polynomial>& elements);

/// Depth sensitivity of the Koszul complex: true iff H_i vanishes for i > 0.
bool is_regular_sequence(const GradedRing& ring, const std::vector<Polynomial>& elements);

/// H_i(C) = 0, decided exactly: every kernel generator of d_i lies in the
/// image of d_{i+1} over R.
bool homology_is_zero(const ChainComplex& complex, int i);

}  // namespace gradedres

#endif
