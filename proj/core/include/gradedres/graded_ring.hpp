#ifndef GRADEDRES_GRADED_RING_HPP
#define GRADEDRES_GRADED_RING_HPP

#include "gradedres/groebner.hpp"

namespace gradedres {

/// A standard-graded polynomial ring k[x_1..x_n], optionally modulo a
/// homogeneous ideal J. Krull dimension is read off the initial ideal of J;
/// the complete-intersection flag records whether the given J-generators form
/// a regular sequence (Koszul criterion, computed lazily).
class GradedRing {
   public:
    /// J empty: the polynomial ring itself.
    GradedRing(PolyRingPtr poly_ring, std::vector<Polynomial> quotient_generators = {});

    const PolyRingPtr& poly() const { return poly_; }
    const Field& field() const { return poly_->field; }
    int nvars() const { return poly_->nvars(); }
    const std::vector<Polynomial>& quotient_generators() const { return j_gens_; }
    const GroebnerBasis& quotient_basis() const { return j_basis_; }
    bool is_quotient() const { return !j_gens_.empty(); }

    int dimension() const { return dim_; }
    bool is_complete_intersection() const;

    /// Canonical representative in R = S/J (normal form against GB(J)).
    Polynomial reduce(const Polynomial& f) const;

    /// The defining relations of J placed in every component of R^rank;
    /// appended to submodule computations so they happen over R.
    std::vector<FreeVector> quotient_relations(int rank) const;

    std::string description() const;

   private:
    PolyRingPtr poly_;
    std::vector<Polynomial> j_gens_;
    GroebnerBasis j_basis_;
    int dim_;
    mutable int ci_flag_ = -1;  // -1 unknown, 0 no, 1 yes
};

using GradedRingPtr = std::shared_ptr<const GradedRing>;

}  // namespace gradedres

#endif
