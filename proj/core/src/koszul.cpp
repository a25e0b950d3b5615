#include "gradedres/koszul.hpp"

#include <algorithm>

#include "gradedres/resolution.hpp"

namespace gradedres {

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // lexicographic enumeration
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

ChainComplex koszul_complex(GradedRingPtr ring, const std::vector<Polynomial>& elements) {
    std::vector<Polynomial> ys;
    std::vector<int> ydegs;
    for (const auto& f : elements) {
        Polynomial g = ring->reduce(f);
        auto d = g.homogeneous_degree();
        if (!d) throw algebra_error("inhomogeneous generator");
        ys.push_back(g);
        ydegs.push_back(*d);
    }
    const int n = static_cast<int>(ys.size());
    const PolyRingPtr& poly = ring->poly();

    std::vector<GradedFreeModule> modules;
    std::vector<std::vector<std::vector<int>>> bases;
    for (int i = 0; i <= n; ++i) {
        auto subs = subsets_of_size(n, i);
        GradedFreeModule m;
        for (const auto& t : subs) {
            int tw = 0;
            for (int v : t) tw += ydegs[v];
            m.twists.push_back(tw);
        }
        bases.push_back(std::move(subs));
        modules.push_back(std::move(m));
    }

    std::vector<GradedMap> diffs;
    for (int i = 1; i <= n; ++i) {
        const auto& src = bases[i];
        const auto& tgt = bases[i - 1];
        std::vector<std::vector<Polynomial>> rows(
            tgt.size(), std::vector<Polynomial>(src.size(), Polynomial(poly)));
        for (std::size_t c = 0; c < src.size(); ++c) {
            const auto& t = src[c];
            for (int j = 0; j < i; ++j) {
                std::vector<int> omit;
                for (int l = 0; l < i; ++l)
                    if (l != j) omit.push_back(t[l]);
                auto it = std::find(tgt.begin(), tgt.end(), omit);
                std::size_t r = static_cast<std::size_t>(it - tgt.begin());
                Polynomial term = (j % 2 == 0) ? ys[t[j]] : -ys[t[j]];
                rows[r][c] = rows[r][c] + term;
            }
        }
        diffs.push_back(GradedMap(ring, modules[i], modules[i - 1], std::move(rows)));
    }
    return ChainComplex(ring, 0, std::move(modules), std::move(diffs));
}

bool homology_is_zero(const ChainComplex& complex, int i) {
    if (!complex.in_range(i) || complex.rank(i) == 0) return true;
    const GradedRing& ring = *complex.ring();
    const std::vector<int>& twists = complex.module(i).twists;

    std::vector<FreeVector> kernel;
    if (complex.has_diff(i)) {
        kernel = kernel_generators(ring, complex.diff(i).columns(),
                                   complex.module(i - 1).twists);
        // kernel generators live in coordinates of the columns of d_i, which
        // are exactly the generators of F_i
    } else {
        for (int l = 0; l < complex.rank(i); ++l)
            kernel.push_back(FreeVector::basis_vector(
                ring.poly(), complex.rank(i), l, Polynomial::constant(ring.poly(), 1)));
    }
    if (kernel.empty()) return true;

    std::vector<FreeVector> image;
    if (complex.has_diff(i + 1)) image = complex.diff(i + 1).columns();
    for (const auto& rel : ring.quotient_relations(complex.rank(i))) image.push_back(rel);
    BuchbergerOptions opts;
    opts.twists = &twists;
    GroebnerBasis gb = buchberger(image, ModuleOrder::top(ring.poly()->order), opts);
    for (const auto& k : kernel)
        if (!normal_form(k, gb).is_zero()) return false;
    return true;
}

bool is_regular_sequence(const GradedRing& ring, const std::vector<Polynomial>& elements) {
    if (elements.empty()) return true;
    auto ring_ptr = std::make_shared<const GradedRing>(ring);
    ChainComplex k = koszul_complex(ring_ptr, elements);
    for (int i = 1; i <= k.hi(); ++i)
        if (!homology_is_zero(k, i)) return false;
    return true;
}

}  // namespace gradedres
