#ifndef GRADEDRES_SCALAR_MATRIX_HPP
#define GRADEDRES_SCALAR_MATRIX_HPP

#include <vector>

#include "gradedres/field.hpp"

namespace gradedres {

/// Rank of a dense matrix over an exact field, by Gaussian elimination.
inline long scalar_matrix_rank(const Field& field, std::vector<std::vector<mpq_class>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    long rank = 0;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t pr = pivot_row;
        while (pr < rows && m[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(m[pr], m[pivot_row]);
        mpq_class inv = field.inv(m[pivot_row][c]);
        for (std::size_t cc = c; cc < cols; ++cc)
            m[pivot_row][cc] = field.mul(m[pivot_row][cc], inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || m[r][c] == 0) continue;
            mpq_class factor = m[r][c];
            for (std::size_t cc = c; cc < cols; ++cc)
                m[r][cc] = field.sub(m[r][cc], field.mul(factor, m[pivot_row][cc]));
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

}  // namespace gradedres

#endif
