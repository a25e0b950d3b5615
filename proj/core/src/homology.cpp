#include "gradedres/homology.hpp"

#include <map>

#include "gradedres/resolution.hpp"
#include "gradedres/scalar_matrix.hpp"
#include "gradedres/tensor_ops.hpp"

namespace gradedres {

namespace {

std::vector<FreeVector> kernel_of_diff(const ChainComplex& c, int i) {
    const GradedRing& ring = *c.ring();
    if (!c.has_diff(i)) {
        // no outgoing differential: the kernel is everything
        std::vector<FreeVector> basis;
        const int r = c.rank(i);
        for (int l = 0; l < r; ++l)
            basis.push_back(FreeVector::basis_vector(
                ring.poly(), r, l, Polynomial::constant(ring.poly(), 1)));
        return basis;
    }
    return kernel_generators(ring, c.diff(i).columns(), c.module(i - 1).twists);
}

}  // namespace

ModulePresentation homology_presentation(const ChainComplex& c, int i) {
    const GradedRingPtr& ring = c.ring();
    const std::vector<int>& ambient = c.module(i).twists;

    std::vector<FreeVector> kernel = kernel_of_diff(c, i);
    GradedFreeModule gens;
    for (const FreeVector& k : kernel) {
        auto deg = k.homogeneous_degree(ambient);
        if (!deg) throw algebra_error("kernel generator is not homogeneous");
        gens.twists.push_back(*deg);
    }

    std::vector<FreeVector> relations;
    if (c.has_diff(i + 1) && !kernel.empty()) {
        auto coords = lift_through(*ring, kernel, c.diff(i + 1).columns(), ambient);
        for (const auto& v : coords) {
            FreeVector rel(ring->poly(), static_cast<int>(kernel.size()));
            for (std::size_t k = 0; k < v.size(); ++k)
                rel.component(static_cast<int>(k)) = v[k];
            if (!rel.is_zero()) relations.push_back(std::move(rel));
        }
    }
    if (!kernel.empty())
        for (FreeVector& s : kernel_generators(*ring, kernel, ambient))
            relations.push_back(std::move(s));

    GradedFreeModule src;
    for (const FreeVector& rel : relations) {
        auto deg = rel.homogeneous_degree(gens.twists);
        if (!deg) throw algebra_error("homology relation is not homogeneous");
        src.twists.push_back(*deg);
    }
    return ModulePresentation(ring,
                              GradedMap::from_columns(ring, src, gens, relations));
}

long homology_length(const ChainComplex& c, int i) {
    ModulePresentation h = homology_presentation(c, i);
    auto len = h.length();
    if (!len) throw algebra_error("complex not in Perf^fl");
    return *len;
}

std::vector<long> homology_lengths(const ChainComplex& c) {
    std::vector<long> out;
    for (int i = c.lo(); i <= c.hi(); ++i) out.push_back(homology_length(c, i));
    return out;
}

namespace {

// standard monomials of R = S/J in one degree: monomials outside the initial
// ideal of J
std::vector<Monomial> standard_monomials(const GradedRing& ring, int degree) {
    std::vector<Monomial> all =
        monomials_of_degree(ring.nvars(), degree, ring.poly()->order);
    if (!ring.is_quotient()) return all;
    std::vector<Monomial> leads;
    for (const FreeVector& g : ring.quotient_basis().gens)
        leads.push_back(lead_term(g, ring.quotient_basis().order).mono);
    std::vector<Monomial> out;
    for (Monomial& m : all) {
        bool standard = true;
        for (const Monomial& l : leads)
            if (l.divides(m)) {
                standard = false;
                break;
            }
        if (standard) out.push_back(std::move(m));
    }
    return out;
}

struct SliceBasis {
    std::vector<std::pair<int, Monomial>> elems;  // (component, monomial)
    std::map<std::pair<int, std::vector<int>>, int> index;
};

SliceBasis slice_basis(const GradedRing& ring, const GradedFreeModule& mod, int t) {
    SliceBasis b;
    for (int l = 0; l < mod.rank(); ++l) {
        int d = t - mod.twists[l];
        if (d < 0) continue;
        for (Monomial& m : standard_monomials(ring, d)) {
            b.index[{l, m.exponents()}] = static_cast<int>(b.elems.size());
            b.elems.emplace_back(l, std::move(m));
        }
    }
    return b;
}

// matrix of the map on the degree-t slices, columns indexed by src basis
std::vector<std::vector<mpq_class>> slice_matrix(const GradedRing& ring,
                                                 const GradedMap& map,
                                                 const SliceBasis& src,
                                                 const SliceBasis& tgt) {
    std::vector<std::vector<mpq_class>> m(
        tgt.elems.size(), std::vector<mpq_class>(src.elems.size(), 0));
    for (std::size_t col = 0; col < src.elems.size(); ++col) {
        const auto& [l, mono] = src.elems[col];
        for (int r = 0; r < map.target().rank(); ++r) {
            const Polynomial& e = map.entry(r, l);
            if (e.is_zero()) continue;
            Polynomial image = ring.reduce(e.term_multiple(1, mono));
            for (const Term& term : image.terms()) {
                auto it = tgt.index.find({r, term.mono.exponents()});
                if (it == tgt.index.end())
                    throw algebra_error("image leaves the standard monomial span");
                m[it->second][col] = term.coeff;
            }
        }
    }
    return m;
}

}  // namespace

std::vector<long> homology_lengths_bruteforce(const ChainComplex& c, int degree_bound) {
    const GradedRing& ring = *c.ring();
    const Field& field = ring.field();
    int tmin = degree_bound;
    for (int i = c.lo(); i <= c.hi(); ++i)
        for (int w : c.module(i).twists) tmin = std::min(tmin, w);

    std::vector<long> lengths(c.hi() - c.lo() + 1, 0);
    std::vector<long> top_slice(lengths.size(), 0);
    for (int t = tmin; t <= degree_bound; ++t) {
        std::vector<SliceBasis> bases;
        for (int i = c.lo(); i <= c.hi(); ++i)
            bases.push_back(slice_basis(ring, c.module(i), t));
        std::vector<long> ranks(lengths.size() + 1, 0);  // ranks[k] = rank d_{lo+k}
        for (int i = c.lo() + 1; i <= c.hi(); ++i)
            ranks[i - c.lo()] = scalar_matrix_rank(
                field, slice_matrix(ring, c.diff(i), bases[i - c.lo()],
                                    bases[i - 1 - c.lo()]));
        for (int i = c.lo(); i <= c.hi(); ++i) {
            long dim = static_cast<long>(bases[i - c.lo()].elems.size());
            long h = dim - ranks[i - c.lo()] - ranks[i - c.lo() + 1];
            lengths[i - c.lo()] += h;
            if (t == degree_bound) top_slice[i - c.lo()] = h;
        }
    }
    for (long h : top_slice)
        if (h != 0) throw algebra_error("degree bound insufficient");
    return lengths;
}

int default_slice_bound(const ChainComplex& c) {
    int wmax = 0;
    for (int i = c.lo(); i <= c.hi(); ++i)
        for (int w : c.module(i).twists) wmax = std::max(wmax, w);
    int jdeg = 0;
    for (const Polynomial& g : c.ring()->quotient_generators())
        jdeg += std::max(0, g.degree() - 1);
    return wmax + jdeg + c.ring()->nvars() + 1;
}

long euler_characteristic(const ChainComplex& c, const std::vector<long>& lengths) {
    long chi = 0;
    for (std::size_t k = 0; k < lengths.size(); ++k) {
        int i = c.lo() + static_cast<int>(k);
        chi += (i % 2 == 0 ? 1 : -1) * lengths[k];
    }
    return chi;
}

long euler_characteristic(const ChainComplex& c) {
    return euler_characteristic(c, homology_lengths(c));
}

long psi2_euler(const ChainComplex& c) {
    return euler_characteristic(sym2(c)) - euler_characteristic(wedge2(c));
}

}  // namespace gradedres
