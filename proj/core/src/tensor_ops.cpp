#include "gradedres/tensor_ops.hpp"

namespace gradedres {

namespace {

// position of e_a^(i) (x) e_b^(j) inside the ordered basis of T2(F)_n
int tensor_index(const ChainComplex& f, int n, int i, int a, int b) {
    int off = 0;
    for (int ii = std::max(f.lo(), n - f.hi()); ii < i; ++ii)
        off += f.rank(ii) * f.rank(n - ii);
    return off + a * f.rank(n - i) + b;
}

int tensor_rank(const ChainComplex& f, int n) {
    int r = 0;
    for (int i = std::max(f.lo(), n - f.hi()); i <= std::min(f.hi(), n - f.lo()); ++i)
        r += f.rank(i) * f.rank(n - i);
    return r;
}

struct SplitBasisVector {
    // one or two (tensor index, sign) parts; signs are +-1
    std::vector<std::pair<int, int>> parts;
    int twist;
};

struct SplitBasis {
    std::vector<SplitBasisVector> sym;  // basis of the tau-invariant part
    std::vector<SplitBasisVector> alt;  // basis of the anti-invariant part
};

SplitBasis split_basis(const ChainComplex& f, int n) {
    SplitBasis out;
    const int ilo = std::max(f.lo(), n - f.hi());
    const int ihi = std::min(f.hi(), n - f.lo());
    for (int i = ilo; i <= ihi; ++i) {
        int j = n - i;
        if (i > j) break;
        if (i < j) {
            int eps = (i * j) % 2 == 0 ? 1 : -1;
            for (int a = 0; a < f.rank(i); ++a)
                for (int b = 0; b < f.rank(j); ++b) {
                    int p = tensor_index(f, n, i, a, b);
                    int q = tensor_index(f, n, j, b, a);
                    int tw = f.module(i).twists[a] + f.module(j).twists[b];
                    out.sym.push_back({{{p, 1}, {q, eps}}, tw});
                    out.alt.push_back({{{p, 1}, {q, -eps}}, tw});
                }
        } else {
            // diagonal block: plain swap carries the sign (-1)^i
            const int r = f.rank(i);
            std::vector<SplitBasisVector> classical_sym, classical_alt;
            for (int a = 0; a < r; ++a)
                for (int b = a; b < r; ++b) {
                    int tw = f.module(i).twists[a] + f.module(i).twists[b];
                    if (a == b) {
                        classical_sym.push_back(
                            {{{tensor_index(f, n, i, a, a), 1}}, tw});
                    } else {
                        int p = tensor_index(f, n, i, a, b);
                        int q = tensor_index(f, n, i, b, a);
                        classical_sym.push_back({{{p, 1}, {q, 1}}, tw});
                        classical_alt.push_back({{{p, 1}, {q, -1}}, tw});
                    }
                }
            if (i % 2 == 0) {
                for (auto& v : classical_sym) out.sym.push_back(std::move(v));
                for (auto& v : classical_alt) out.alt.push_back(std::move(v));
            } else {
                for (auto& v : classical_alt) out.sym.push_back(std::move(v));
                for (auto& v : classical_sym) out.alt.push_back(std::move(v));
            }
        }
    }
    return out;
}

}  // namespace

ChainComplex tensor_square(const ChainComplex& f) {
    const GradedRingPtr& ring = f.ring();
    const PolyRingPtr& poly = ring->poly();
    const int lo2 = 2 * f.lo();
    const int hi2 = 2 * f.hi();

    std::vector<GradedFreeModule> modules;
    for (int n = lo2; n <= hi2; ++n) {
        GradedFreeModule m;
        for (int i = std::max(f.lo(), n - f.hi()); i <= std::min(f.hi(), n - f.lo()); ++i) {
            int j = n - i;
            for (int a = 0; a < f.rank(i); ++a)
                for (int b = 0; b < f.rank(j); ++b)
                    m.twists.push_back(f.module(i).twists[a] + f.module(j).twists[b]);
        }
        modules.push_back(std::move(m));
    }

    std::vector<GradedMap> diffs;
    for (int n = lo2 + 1; n <= hi2; ++n) {
        const GradedFreeModule& src = modules[n - lo2];
        const GradedFreeModule& tgt = modules[n - 1 - lo2];
        std::vector<std::vector<Polynomial>> rows(
            tgt.rank(), std::vector<Polynomial>(src.rank(), Polynomial(poly)));
        for (int i = std::max(f.lo(), n - f.hi()); i <= std::min(f.hi(), n - f.lo()); ++i) {
            int j = n - i;
            for (int a = 0; a < f.rank(i); ++a)
                for (int b = 0; b < f.rank(j); ++b) {
                    int col = tensor_index(f, n, i, a, b);
                    if (f.has_diff(i) && f.in_range(i - 1)) {
                        const GradedMap& d = f.diff(i);
                        for (int r = 0; r < d.target().rank(); ++r) {
                            if (d.entry(r, a).is_zero()) continue;
                            int row = tensor_index(f, n - 1, i - 1, r, b);
                            rows[row][col] = rows[row][col] + d.entry(r, a);
                        }
                    }
                    if (f.has_diff(j) && f.in_range(j - 1)) {
                        const GradedMap& d = f.diff(j);
                        for (int r = 0; r < d.target().rank(); ++r) {
                            if (d.entry(r, b).is_zero()) continue;
                            int row = tensor_index(f, n - 1, i, a, r);
                            Polynomial e = (i % 2 == 0) ? d.entry(r, b) : -d.entry(r, b);
                            rows[row][col] = rows[row][col] + e;
                        }
                    }
                }
        }
        diffs.push_back(GradedMap(ring, src, tgt, std::move(rows)));
    }
    return ChainComplex(ring, lo2, std::move(modules), std::move(diffs));
}

ComplexInvolution::ComplexInvolution(const ChainComplex& f) : square_(tensor_square(f)) {
    lo_ = square_.lo();
    const Field& field = f.ring()->field();
    for (int n = square_.lo(); n <= square_.hi(); ++n) {
        const int rank = tensor_rank(f, n);
        std::vector<std::vector<mpq_class>> m(rank, std::vector<mpq_class>(rank, 0));
        for (int i = std::max(f.lo(), n - f.hi()); i <= std::min(f.hi(), n - f.lo()); ++i) {
            int j = n - i;
            int sign = (i * j) % 2 == 0 ? 1 : -1;
            for (int a = 0; a < f.rank(i); ++a)
                for (int b = 0; b < f.rank(j); ++b) {
                    int col = tensor_index(f, n, i, a, b);
                    int row = tensor_index(f, n, j, b, a);
                    m[row][col] = field.from_int(sign);
                }
        }
        matrices_.push_back(std::move(m));
    }

    // audit: involution squares to the identity
    for (const auto& m : matrices_) {
        const int r = static_cast<int>(m.size());
        for (int col = 0; col < r; ++col) {
            for (int row = 0; row < r; ++row) {
                mpq_class acc = 0;
                for (int k = 0; k < r; ++k)
                    if (m[row][k] != 0 && m[k][col] != 0)
                        acc = field.add(acc, field.mul(m[row][k], m[k][col]));
                if (acc != (row == col ? field.one() : field.zero()))
                    throw algebra_error("involution does not square to the identity");
            }
        }
    }
    // audit: chain map (tau o d = d o tau)
    const PolyRingPtr& poly = f.ring()->poly();
    for (int n = square_.lo() + 1; n <= square_.hi(); ++n) {
        const GradedMap& d = square_.diff(n);
        const auto& tn = matrix(n);
        const auto& tn1 = matrix(n - 1);
        for (int row = 0; row < d.target().rank(); ++row)
            for (int col = 0; col < d.source().rank(); ++col) {
                Polynomial lhs(poly), rhs(poly);
                for (int k = 0; k < d.target().rank(); ++k)
                    if (tn1[row][k] != 0 && !d.entry(k, col).is_zero())
                        lhs = lhs + d.entry(k, col).scaled(tn1[row][k]);
                for (int k = 0; k < d.source().rank(); ++k)
                    if (tn[k][col] != 0 && !d.entry(row, k).is_zero())
                        rhs = rhs + d.entry(row, k).scaled(tn[k][col]);
                if (lhs != rhs)
                    throw algebra_error("involution does not commute with the differential");
            }
    }
}

const std::vector<std::vector<mpq_class>>& ComplexInvolution::matrix(int n) const {
    if (n < lo_ || n >= lo_ + static_cast<int>(matrices_.size()))
        throw algebra_error("homological degree out of range");
    return matrices_[n - lo_];
}

ComplexInvolution tau(const ChainComplex& f) { return ComplexInvolution(f); }

namespace {

ChainComplex split_summand(const ChainComplex& f, bool symmetric) {
    const GradedRingPtr& ring = f.ring();
    const Field& field = ring->field();
    if (field.characteristic() == 2)
        throw algebra_error("Adams splitting requires 2 invertible");
    const PolyRingPtr& poly = ring->poly();
    const mpq_class half = field.canonical(mpq_class(1, 2));

    ChainComplex t2 = tensor_square(f);
    const int lo2 = t2.lo();
    const int hi2 = t2.hi();

    std::vector<SplitBasis> bases;
    for (int n = lo2; n <= hi2; ++n) bases.push_back(split_basis(f, n));

    auto pick = [&](int n) -> const std::vector<SplitBasisVector>& {
        return symmetric ? bases[n - lo2].sym : bases[n - lo2].alt;
    };
    auto other = [&](int n) -> const std::vector<SplitBasisVector>& {
        return symmetric ? bases[n - lo2].alt : bases[n - lo2].sym;
    };

    std::vector<GradedFreeModule> modules;
    for (int n = lo2; n <= hi2; ++n) {
        GradedFreeModule m;
        for (const auto& v : pick(n)) m.twists.push_back(v.twist);
        modules.push_back(std::move(m));
    }

    auto coordinate = [&](const std::vector<Polynomial>& w, const SplitBasisVector& beta) {
        if (beta.parts.size() == 1) return w[beta.parts[0].first];
        const auto& [p, sp] = beta.parts[0];
        const auto& [q, sq] = beta.parts[1];
        (void)sp;
        Polynomial c = w[p] + w[q].scaled(field.from_int(sq));
        return c.scaled(half);
    };

    std::vector<GradedMap> diffs;
    for (int n = lo2 + 1; n <= hi2; ++n) {
        const GradedMap& dt = t2.diff(n);
        const auto& src = pick(n);
        const auto& tgt = pick(n - 1);
        const auto& tgt_other = other(n - 1);
        std::vector<std::vector<Polynomial>> rows(
            tgt.size(), std::vector<Polynomial>(src.size(), Polynomial(poly)));
        for (std::size_t col = 0; col < src.size(); ++col) {
            // image of the basis vector inside T2, in tensor coordinates
            std::vector<Polynomial> w(dt.target().rank(), Polynomial(poly));
            for (const auto& [p, sign] : src[col].parts)
                for (int r = 0; r < dt.target().rank(); ++r)
                    if (!dt.entry(r, p).is_zero())
                        w[r] = w[r] + dt.entry(r, p).scaled(field.from_int(sign));
            for (std::size_t row = 0; row < tgt.size(); ++row)
                rows[row][col] = ring->reduce(coordinate(w, tgt[row]));
            // the complementary coordinates must vanish; this pins the sign
            // conventions down exactly
            for (const auto& beta : tgt_other)
                if (!coordinate(w, beta).is_zero())
                    throw algebra_error("split summand is not closed under the differential");
        }
        diffs.push_back(GradedMap(ring, modules[n - lo2], modules[n - 1 - lo2],
                                  std::move(rows)));
    }
    return ChainComplex(ring, lo2, std::move(modules), std::move(diffs));
}

}  // namespace

ChainComplex sym2(const ChainComplex& f) { return split_summand(f, true); }
ChainComplex wedge2(const ChainComplex& f) { return split_summand(f, false); }

}  // namespace gradedres
