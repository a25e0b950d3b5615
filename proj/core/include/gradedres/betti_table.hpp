#ifndef GRADEDRES_BETTI_TABLE_HPP
#define GRADEDRES_BETTI_TABLE_HPP

#include <map>
#include <string>
#include <vector>

namespace gradedres {

/// Graded Betti numbers: entries (homological degree i, internal degree j) -> rank.
class BettiTable {
   public:
    void add(int i, int j, long rank);
    long entry(int i, int j) const;
    const std::map<std::pair<int, int>, long>& entries() const { return entries_; }

    /// beta_i = sum over internal degrees.
    long row_sum(int i) const;
    std::vector<long> row_sums() const;
    long total() const;
    int projective_dimension() const;

    /// Macaulay-style grid: rows are slices j - i, columns homological degree.
    std::string render_grid() const;

    bool operator==(const BettiTable& other) const { return entries_ == other.entries_; }

   private:
    std::map<std::pair<int, int>, long> entries_;
};

}  // namespace gradedres

#endif
