#ifndef GRADEDRES_TENSOR_OPS_HPP
#define GRADEDRES_TENSOR_OPS_HPP

#include "gradedres/chain_complex.hpp"

namespace gradedres {

/// Second tensor power T2(F)_n = (+)_{i+j=n} F_i (x) F_j with the Koszul-sign
/// differential d(x (x) y) = dx (x) y + (-1)^{|x|} x (x) dy. The basis of
/// degree n lists blocks (i, j) by ascending i, pairs (a, b) lexicographic.
ChainComplex tensor_square(const ChainComplex& f);

/// The signed swap t(x (x) y) = (-1)^{|x||y|} y (x) x as degreewise scalar
/// matrices on tensor_square(f). Squares to the identity and commutes with
/// the differential; both are verified at construction.
class ComplexInvolution {
   public:
    explicit ComplexInvolution(const ChainComplex& f);

    const ChainComplex& complex() const { return square_; }
    /// Matrix of t on T2(F)_n.
    const std::vector<std::vector<mpq_class>>& matrix(int n) const;

   private:
    ChainComplex square_;
    int lo_;
    std::vector<std::vector<std::vector<mpq_class>>> matrices_;
};

ComplexInvolution tau(const ChainComplex& f);

/// The invariant (S2) and anti-invariant (L2) summands of the tensor square,
/// with explicit integral bases: for blocks i < j the (anti)symmetrized cross
/// vectors; on the diagonal block the classical Sym2/Lambda2 bases, swapped
/// between the two summands when i is odd.
/// Requires an odd or zero characteristic.
ChainComplex sym2(const ChainComplex& f);
ChainComplex wedge2(const ChainComplex& f);

}  // namespace gradedres

#endif
