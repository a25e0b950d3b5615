#include "gradedres/graded_map.hpp"

namespace gradedres {

GradedMap::GradedMap(GradedRingPtr ring, GradedFreeModule source, GradedFreeModule target,
                     std::vector<std::vector<Polynomial>> rows, bool validate)
    : ring_(std::move(ring)),
      source_(std::move(source)),
      target_(std::move(target)),
      rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != target_.rank())
        throw algebra_error("matrix row count does not match target rank");
    for (auto& row : rows_) {
        if (static_cast<int>(row.size()) != source_.rank())
            throw algebra_error("matrix column count does not match source rank");
        for (auto& f : row) f = ring_->reduce(f);
    }
    if (validate) validate_homogeneity();
}

GradedMap GradedMap::zero(GradedRingPtr ring, GradedFreeModule source, GradedFreeModule target) {
    std::vector<std::vector<Polynomial>> rows(
        target.rank(), std::vector<Polynomial>(source.rank(), Polynomial(ring->poly())));
    return GradedMap(std::move(ring), std::move(source), std::move(target), std::move(rows),
                     false);
}

GradedMap GradedMap::from_columns(GradedRingPtr ring, GradedFreeModule source,
                                  GradedFreeModule target, const std::vector<FreeVector>& cols,
                                  bool validate) {
    if (static_cast<int>(cols.size()) != source.rank())
        throw algebra_error("column count does not match source rank");
    std::vector<std::vector<Polynomial>> rows(
        target.rank(), std::vector<Polynomial>(source.rank(), Polynomial(ring->poly())));
    for (int j = 0; j < source.rank(); ++j) {
        if (cols[j].rank() != target.rank())
            throw algebra_error("column rank does not match target rank");
        for (int i = 0; i < target.rank(); ++i) rows[i][j] = cols[j][i];
    }
    return GradedMap(std::move(ring), std::move(source), std::move(target), std::move(rows),
                     validate);
}

FreeVector GradedMap::column(int j) const {
    FreeVector v(ring_->poly(), target_.rank());
    for (int i = 0; i < target_.rank(); ++i) v.component(i) = rows_[i][j];
    return v;
}

std::vector<FreeVector> GradedMap::columns() const {
    std::vector<FreeVector> cols;
    cols.reserve(source_.rank());
    for (int j = 0; j < source_.rank(); ++j) cols.push_back(column(j));
    return cols;
}

FreeVector GradedMap::apply(const FreeVector& v) const {
    if (v.rank() != source_.rank()) throw algebra_error("free module rank mismatch");
    FreeVector out(ring_->poly(), target_.rank());
    for (int i = 0; i < target_.rank(); ++i) {
        Polynomial acc(ring_->poly());
        for (int j = 0; j < source_.rank(); ++j) {
            if (rows_[i][j].is_zero() || v[j].is_zero()) continue;
            acc = acc + rows_[i][j] * v[j];
        }
        out.component(i) = ring_->reduce(acc);
    }
    return out;
}

GradedMap GradedMap::compose(const GradedMap& g) const {
    if (g.target_.rank() != source_.rank()) throw algebra_error("free module rank mismatch");
    std::vector<std::vector<Polynomial>> rows(
        target_.rank(), std::vector<Polynomial>(g.source_.rank(), Polynomial(ring_->poly())));
    for (int i = 0; i < target_.rank(); ++i)
        for (int j = 0; j < g.source_.rank(); ++j) {
            Polynomial acc(ring_->poly());
            for (int k = 0; k < source_.rank(); ++k) {
                if (rows_[i][k].is_zero() || g.rows_[k][j].is_zero()) continue;
                acc = acc + rows_[i][k] * g.rows_[k][j];
            }
            rows[i][j] = ring_->reduce(acc);
        }
    return GradedMap(ring_, g.source_, target_, std::move(rows), false);
}

GradedMap GradedMap::negated() const {
    std::vector<std::vector<Polynomial>> rows = rows_;
    for (auto& row : rows)
        for (auto& f : row) f = -f;
    return GradedMap(ring_, source_, target_, std::move(rows), false);
}

bool GradedMap::is_zero() const {
    for (const auto& row : rows_)
        for (const auto& f : row)
            if (!f.is_zero()) return false;
    return true;
}

bool GradedMap::has_constant_entry() const {
    for (const auto& row : rows_)
        for (const auto& f : row)
            if (f.constant_part() != 0) return true;
    return false;
}

void GradedMap::validate_homogeneity() const {
    for (int i = 0; i < target_.rank(); ++i)
        for (int j = 0; j < source_.rank(); ++j) {
            const Polynomial& f = rows_[i][j];
            if (f.is_zero()) continue;
            auto d = f.homogeneous_degree();
            int expected = source_.twists[j] - target_.twists[i];
            if (!d || *d != expected)
                throw algebra_error("matrix entry (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") is not homogeneous of degree " +
                                    std::to_string(expected));
        }
}

}  // namespace gradedres
