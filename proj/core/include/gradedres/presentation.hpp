#ifndef GRADEDRES_PRESENTATION_HPP
#define GRADEDRES_PRESENTATION_HPP

#include <optional>

#include "gradedres/graded_map.hpp"

namespace gradedres {

/// A finitely presented graded module M = coker(presentation map) over a
/// graded ring R = S/J. The Groebner basis of the column span (with the
/// J-relations appended, so membership is over R) drives Hilbert function
/// and length computations.
class ModulePresentation {
   public:
    ModulePresentation(GradedRingPtr ring, GradedMap presentation);
    /// Cyclic module R/I with the given ideal generators.
    static ModulePresentation cyclic(GradedRingPtr ring, const std::vector<Polynomial>& ideal);

    const GradedRingPtr& ring() const { return ring_; }
    const GradedMap& presentation() const { return map_; }
    const GradedFreeModule& ambient() const { return map_.target(); }
    const GroebnerBasis& column_basis() const { return gb_; }

    bool is_zero_module() const;
    bool is_cyclic() const { return ambient().rank() == 1; }

    /// dim_k of the degree-t piece of coker.
    long hilbert_function(int t) const;

    /// Sum of the Hilbert function when the staircase test certifies finite
    /// length; nullopt otherwise.
    std::optional<long> length() const;

    /// Largest degree with a nonzero graded piece (finite length only).
    int top_degree() const;

    /// Standard monomial basis of the degree-t piece as (component, monomial).
    std::vector<std::pair<int, Monomial>> standard_basis(int t) const;

   private:
    bool staircase_is_finite(std::vector<int>& bounds) const;

    GradedRingPtr ring_;
    GradedMap map_;
    GroebnerBasis gb_;
    mutable std::optional<std::optional<long>> length_cache_;
};

/// All monomials of the given total degree, in descending ring order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree, TermOrder order);

}  // namespace gradedres

#endif
