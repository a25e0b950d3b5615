#ifndef GRADEDRES_GRADED_MAP_HPP
#define GRADEDRES_GRADED_MAP_HPP

#include "gradedres/graded_ring.hpp"

namespace gradedres {

/// Graded free module: its generators' internal degrees.
struct GradedFreeModule {
    std::vector<int> twists;
    int rank() const { return static_cast<int>(twists.size()); }
};

/// Homogeneous map between graded free modules, entries as polynomials.
/// Column j is the image of source generator j; entry (i, j) must be
/// homogeneous of degree twist_source(j) - twist_target(i) or zero.
class GradedMap {
   public:
    GradedMap() = default;
    GradedMap(GradedRingPtr ring, GradedFreeModule source, GradedFreeModule target,
              std::vector<std::vector<Polynomial>> rows, bool validate = true);

    static GradedMap zero(GradedRingPtr ring, GradedFreeModule source, GradedFreeModule target);
    static GradedMap from_columns(GradedRingPtr ring, GradedFreeModule source,
                                  GradedFreeModule target, const std::vector<FreeVector>& cols,
                                  bool validate = true);

    const GradedRingPtr& ring() const { return ring_; }
    const GradedFreeModule& source() const { return source_; }
    const GradedFreeModule& target() const { return target_; }
    const Polynomial& entry(int i, int j) const { return rows_.at(i).at(j); }
    const std::vector<std::vector<Polynomial>>& rows() const { return rows_; }

    FreeVector column(int j) const;
    std::vector<FreeVector> columns() const;
    FreeVector apply(const FreeVector& v) const;
    GradedMap compose(const GradedMap& g) const;  // this o g
    GradedMap negated() const;
    bool is_zero() const;
    /// True when some entry has a nonzero constant part (minimality audit).
    bool has_constant_entry() const;

    void validate_homogeneity() const;

   private:
    GradedRingPtr ring_;
    GradedFreeModule source_, target_;
    std::vector<std::vector<Polynomial>> rows_;  // rows_[i][j]
};

}  // namespace gradedres

#endif
