#ifndef GRADEDRES_CHAIN_COMPLEX_HPP
#define GRADEDRES_CHAIN_COMPLEX_HPP

#include "gradedres/presentation.hpp"

namespace gradedres {

/// Bounded complex of graded free modules F_lo .. F_hi with differentials
/// d_i : F_i -> F_{i-1}. Construction verifies d o d = 0 exactly.
class ChainComplex {
   public:
    ChainComplex(GradedRingPtr ring, int lo, std::vector<GradedFreeModule> modules,
                 std::vector<GradedMap> diffs, bool audit = true);

    /// The complex with the single module R in homological degree 0.
    static ChainComplex single_free(GradedRingPtr ring, GradedFreeModule module, int degree = 0);

    const GradedRingPtr& ring() const { return ring_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(modules_.size()) - 1; }
    bool in_range(int i) const { return i >= lo_ && i <= hi(); }

    const GradedFreeModule& module(int i) const;
    int rank(int i) const { return in_range(i) ? module(i).rank() : 0; }
    /// d_i : F_i -> F_{i-1}; valid for lo < i <= hi.
    const GradedMap& diff(int i) const;
    bool has_diff(int i) const { return i > lo_ && i <= hi(); }

    /// Homological shift C[s]: module(i) = C.module(i-s), differential scaled
    /// by (-1)^s.
    ChainComplex shifted(int s) const;
    ChainComplex direct_sum(const ChainComplex& other) const;

    /// True when every differential entry lies in the irrelevant ideal.
    bool is_minimal() const;

    std::vector<int> ranks() const;

   private:
    void audit_d_squared() const;

    GradedRingPtr ring_;
    int lo_;
    std::vector<GradedFreeModule> modules_;
    std::vector<GradedMap> diffs_;  // diffs_[k] = d_{lo+1+k}
};

}  // namespace gradedres

#endif
