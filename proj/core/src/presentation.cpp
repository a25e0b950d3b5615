#include "gradedres/presentation.hpp"

#include <algorithm>

namespace gradedres {

namespace {

void gen_monomials(int nvars, int degree, int var, std::vector<int>& cur,
                   std::vector<Monomial>& out) {
    if (var == nvars - 1) {
        cur[var] = degree;
        out.push_back(Monomial(cur));
        cur[var] = 0;
        return;
    }
    for (int e = degree; e >= 0; --e) {
        cur[var] = e;
        gen_monomials(nvars, degree - e, var + 1, cur, out);
    }
    cur[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree, TermOrder order) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    if (nvars == 0) {
        if (degree == 0) out.push_back(Monomial::one(0));
        return out;
    }
    std::vector<int> cur(nvars, 0);
    gen_monomials(nvars, degree, 0, cur, out);
    std::sort(out.begin(), out.end(), [order](const Monomial& a, const Monomial& b) {
        return compare(a, b, order) > 0;
    });
    return out;
}

ModulePresentation::ModulePresentation(GradedRingPtr ring, GradedMap presentation)
    : ring_(std::move(ring)), map_(std::move(presentation)) {
    std::vector<FreeVector> gens = map_.columns();
    for (const auto& rel : ring_->quotient_relations(ambient().rank())) gens.push_back(rel);
    BuchbergerOptions opts;
    opts.twists = &ambient().twists;
    gb_ = buchberger(std::move(gens), ModuleOrder::top(ring_->poly()->order), opts);
    gb_.rank = ambient().rank();
}

ModulePresentation ModulePresentation::cyclic(GradedRingPtr ring,
                                              const std::vector<Polynomial>& ideal) {
    GradedFreeModule target{{0}};
    std::vector<int> src_twists;
    std::vector<std::vector<Polynomial>> rows(1);
    for (const auto& f : ideal) {
        Polynomial g = ring->reduce(f);
        if (g.is_zero()) continue;
        auto d = g.homogeneous_degree();
        if (!d) throw algebra_error("inhomogeneous generator");
        src_twists.push_back(*d);
        rows[0].push_back(g);
    }
    GradedFreeModule source{std::move(src_twists)};
    return ModulePresentation(ring,
                              GradedMap(ring, std::move(source), target, std::move(rows)));
}

bool ModulePresentation::is_zero_module() const {
    for (int l = 0; l < ambient().rank(); ++l) {
        FreeVector e = FreeVector::basis_vector(ring_->poly(), ambient().rank(), l,
                                                Polynomial::constant(ring_->poly(), 1));
        if (!normal_form(e, gb_).is_zero()) return false;
    }
    return true;
}

long ModulePresentation::hilbert_function(int t) const {
    const int rank = ambient().rank();
    long count = 0;
    for (int l = 0; l < rank; ++l) {
        int d = t - ambient().twists[l];
        if (d < 0) continue;
        std::vector<Monomial> leads;
        for (const auto& g : gb_.gens) {
            ModuleTerm lt = lead_term(g, gb_.order);
            if (lt.comp == l) leads.push_back(lt.mono);
        }
        for (const auto& m : monomials_of_degree(ring_->nvars(), d, ring_->poly()->order)) {
            bool standard = true;
            for (const auto& lm : leads)
                if (lm.divides(m)) { standard = false; break; }
            if (standard) ++count;
        }
    }
    return count;
}

bool ModulePresentation::staircase_is_finite(std::vector<int>& bounds) const {
    const int rank = ambient().rank();
    const int n = ring_->nvars();
    bounds.assign(rank, 0);
    std::vector<std::vector<Monomial>> leads(rank);
    for (const auto& g : gb_.gens) {
        ModuleTerm lt = lead_term(g, gb_.order);
        leads[lt.comp].push_back(lt.mono);
    }
    for (int l = 0; l < rank; ++l) {
        bool dead = false;  // a degree-0 lead kills the whole component
        for (const auto& m : leads[l])
            if (m.degree() == 0) { dead = true; break; }
        if (dead) {
            bounds[l] = ambient().twists[l] - 1;
            continue;
        }
        int sum = 0;
        for (int v = 0; v < n; ++v) {
            int best = -1;
            for (const auto& m : leads[l]) {
                bool pure = m[v] > 0;
                for (int w = 0; w < n && pure; ++w)
                    if (w != v && m[w] > 0) pure = false;
                if (pure && (best < 0 || m[v] < best)) best = m[v];
            }
            if (best < 0) return false;
            sum += best - 1;
        }
        bounds[l] = ambient().twists[l] + sum;
    }
    return true;
}

std::optional<long> ModulePresentation::length() const {
    if (length_cache_) return *length_cache_;
    std::optional<long> result;
    if (ambient().rank() == 0) {
        result = 0;
    } else {
        std::vector<int> bounds;
        if (staircase_is_finite(bounds)) {
            int lo = *std::min_element(ambient().twists.begin(), ambient().twists.end());
            int hi = *std::max_element(bounds.begin(), bounds.end());
            long total = 0;
            for (int t = lo; t <= hi; ++t) total += hilbert_function(t);
            result = total;
        }
    }
    length_cache_ = result;
    return result;
}

int ModulePresentation::top_degree() const {
    std::vector<int> bounds;
    if (ambient().rank() == 0) return 0;
    if (!staircase_is_finite(bounds)) throw algebra_error("module not finite length");
    int lo = *std::min_element(ambient().twists.begin(), ambient().twists.end());
    int hi = *std::max_element(bounds.begin(), bounds.end());
    for (int t = hi; t >= lo; --t)
        if (hilbert_function(t) > 0) return t;
    return lo - 1;
}

std::vector<std::pair<int, Monomial>> ModulePresentation::standard_basis(int t) const {
    std::vector<std::pair<int, Monomial>> out;
    for (int l = 0; l < ambient().rank(); ++l) {
        int d = t - ambient().twists[l];
        if (d < 0) continue;
        std::vector<Monomial> leads;
        for (const auto& g : gb_.gens) {
            ModuleTerm lt = lead_term(g, gb_.order);
            if (lt.comp == l) leads.push_back(lt.mono);
        }
        for (const auto& m : monomials_of_degree(ring_->nvars(), d, ring_->poly()->order)) {
            bool standard = true;
            for (const auto& lm : leads)
                if (lm.divides(m)) { standard = false; break; }
            if (standard) out.emplace_back(l, m);
        }
    }
    return out;
}

}  // namespace gradedres
