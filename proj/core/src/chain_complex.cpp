#include "gradedres/chain_complex.hpp"

namespace gradedres {

ChainComplex::ChainComplex(GradedRingPtr ring, int lo, std::vector<GradedFreeModule> modules,
                           std::vector<GradedMap> diffs, bool audit)
    : ring_(std::move(ring)), lo_(lo), modules_(std::move(modules)), diffs_(std::move(diffs)) {
    if (modules_.empty()) throw algebra_error("empty complex");
    if (diffs_.size() + 1 != modules_.size())
        throw algebra_error("differential count does not match module count");
    for (std::size_t k = 0; k < diffs_.size(); ++k) {
        if (diffs_[k].source().rank() != modules_[k + 1].rank() ||
            diffs_[k].target().rank() != modules_[k].rank())
            throw algebra_error("differential ranks do not match modules");
    }
    if (audit) audit_d_squared();
}

ChainComplex ChainComplex::single_free(GradedRingPtr ring, GradedFreeModule module, int degree) {
    return ChainComplex(std::move(ring), degree, {std::move(module)}, {}, false);
}

const GradedFreeModule& ChainComplex::module(int i) const {
    if (!in_range(i)) throw algebra_error("homological degree out of range");
    return modules_[i - lo_];
}

const GradedMap& ChainComplex::diff(int i) const {
    if (!has_diff(i)) throw algebra_error("no differential at this degree");
    return diffs_[i - lo_ - 1];
}

void ChainComplex::audit_d_squared() const {
    for (int i = lo_ + 2; i <= hi(); ++i) {
        GradedMap composite = diff(i - 1).compose(diff(i));
        if (!composite.is_zero()) throw algebra_error("differential does not square to zero");
    }
}

ChainComplex ChainComplex::shifted(int s) const {
    std::vector<GradedMap> diffs = diffs_;
    if (s % 2 != 0)
        for (auto& d : diffs) d = d.negated();
    return ChainComplex(ring_, lo_ + s, modules_, std::move(diffs), false);
}

ChainComplex ChainComplex::direct_sum(const ChainComplex& other) const {
    int lo = std::min(lo_, other.lo_);
    int hi_deg = std::max(hi(), other.hi());
    std::vector<GradedFreeModule> modules;
    std::vector<GradedMap> diffs;
    for (int i = lo; i <= hi_deg; ++i) {
        GradedFreeModule m;
        if (in_range(i))
            m.twists.insert(m.twists.end(), module(i).twists.begin(), module(i).twists.end());
        if (other.in_range(i))
            m.twists.insert(m.twists.end(), other.module(i).twists.begin(),
                            other.module(i).twists.end());
        modules.push_back(std::move(m));
    }
    for (int i = lo + 1; i <= hi_deg; ++i) {
        const GradedFreeModule& src = modules[i - lo];
        const GradedFreeModule& tgt = modules[i - 1 - lo];
        std::vector<std::vector<Polynomial>> rows(
            tgt.rank(), std::vector<Polynomial>(src.rank(), Polynomial(ring_->poly())));
        int row_off = in_range(i - 1) ? module(i - 1).rank() : 0;
        int col_off = in_range(i) ? module(i).rank() : 0;
        if (has_diff(i)) {
            const GradedMap& d = diff(i);
            for (int r = 0; r < d.target().rank(); ++r)
                for (int c = 0; c < d.source().rank(); ++c) rows[r][c] = d.entry(r, c);
        }
        if (other.has_diff(i)) {
            const GradedMap& d = other.diff(i);
            for (int r = 0; r < d.target().rank(); ++r)
                for (int c = 0; c < d.source().rank(); ++c)
                    rows[row_off + r][col_off + c] = d.entry(r, c);
        }
        diffs.push_back(GradedMap(ring_, src, tgt, std::move(rows)));
    }
    return ChainComplex(ring_, lo, std::move(modules), std::move(diffs), false);
}

bool ChainComplex::is_minimal() const {
    for (const auto& d : diffs_)
        if (d.has_constant_entry()) return false;
    return true;
}

std::vector<int> ChainComplex::ranks() const {
    std::vector<int> r;
    for (const auto& m : modules_) r.push_back(m.rank());
    return r;
}

}  // namespace gradedres
