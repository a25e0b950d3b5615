#include "gradedres/graded_ring.hpp"

#include "gradedres/koszul.hpp"

namespace gradedres {

namespace {

/// Krull dimension of S/in(J): the largest set of variables not meeting the
/// support of any leading monomial spans a coordinate subspace surviving in
/// the staircase.
int staircase_dimension(const GroebnerBasis& jb, int nvars) {
    std::vector<Monomial> leads;
    for (const auto& g : jb.gens) leads.push_back(g[0].leading_term().mono);
    int best = 0;
    for (unsigned mask = 0; mask < (1u << nvars); ++mask) {
        bool ok = true;
        for (const auto& m : leads) {
            bool inside = true;
            for (int v = 0; v < nvars && inside; ++v)
                if (m[v] > 0 && !(mask & (1u << v))) inside = false;
            if (inside) { ok = false; break; }
        }
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

}  // namespace

GradedRing::GradedRing(PolyRingPtr poly_ring, std::vector<Polynomial> quotient_generators)
    : poly_(std::move(poly_ring)), j_gens_(std::move(quotient_generators)) {
    for (const auto& f : j_gens_) {
        if (f.is_zero() || !f.is_homogeneous())
            throw algebra_error("inhomogeneous generator");
    }
    j_basis_ = buchberger_ideal(j_gens_);
    dim_ = j_gens_.empty() ? poly_->nvars() : staircase_dimension(j_basis_, poly_->nvars());
}

bool GradedRing::is_complete_intersection() const {
    if (ci_flag_ < 0) {
        if (j_gens_.empty()) {
            ci_flag_ = 1;
        } else {
            GradedRing ambient(poly_);
            ci_flag_ = is_regular_sequence(ambient, j_gens_) ? 1 : 0;
        }
    }
    return ci_flag_ == 1;
}

Polynomial GradedRing::reduce(const Polynomial& f) const {
    if (j_gens_.empty()) return f;
    return normal_form(f, j_basis_);
}

std::vector<FreeVector> GradedRing::quotient_relations(int rank) const {
    std::vector<FreeVector> rels;
    for (const auto& h : j_gens_)
        for (int l = 0; l < rank; ++l)
            rels.push_back(FreeVector::basis_vector(poly_, rank, l, h));
    return rels;
}

std::string GradedRing::description() const {
    std::string s = poly_->field.kind() == FieldKind::rationals
                        ? "Q"
                        : "F(" + std::to_string(poly_->field.characteristic()) + ")";
    s += "[";
    for (int v = 0; v < nvars(); ++v) {
        if (v) s += ",";
        s += poly_->vars[v];
    }
    s += "]";
    if (!j_gens_.empty()) {
        s += "/(";
        for (std::size_t i = 0; i < j_gens_.size(); ++i) {
            if (i) s += ", ";
            s += j_gens_[i].to_string();
        }
        s += ")";
    }
    return s;
}

}  // namespace gradedres
