#include "gradedres/resolution.hpp"

#include <algorithm>

#include "gradedres/scalar_matrix.hpp"

namespace gradedres {

namespace {

std::vector<int> column_degrees(const std::vector<FreeVector>& cols,
                                const std::vector<int>& ambient_twists) {
    std::vector<int> degs;
    degs.reserve(cols.size());
    for (const auto& c : cols) {
        auto d = c.homogeneous_degree(ambient_twists);
        degs.push_back(d ? *d : 0);
    }
    return degs;
}

}  // namespace

std::vector<FreeVector> minimalize_generators(const GradedRing& ring,
                                              std::vector<FreeVector> gens,
                                              const std::vector<int>& ambient_twists) {
    const int rank = static_cast<int>(ambient_twists.size());
    std::vector<FreeVector> nonzero;
    for (auto& g : gens) {
        FreeVector r(ring.poly(), rank);
        for (int i = 0; i < rank; ++i) r.component(i) = ring.reduce(g[i]);
        if (!r.is_zero()) nonzero.push_back(std::move(r));
    }
    std::vector<int> degs = column_degrees(nonzero, ambient_twists);
    std::vector<int> idx(nonzero.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return degs[a] < degs[b]; });

    std::vector<FreeVector> chosen;
    std::vector<FreeVector> basis_input = ring.quotient_relations(rank);
    BuchbergerOptions opts;
    opts.twists = &ambient_twists;
    GroebnerBasis gb = buchberger(basis_input, ModuleOrder::top(ring.poly()->order), opts);
    for (int i : idx) {
        if (normal_form(nonzero[i], gb).is_zero()) continue;
        chosen.push_back(nonzero[i]);
        basis_input.push_back(nonzero[i]);
        gb = buchberger(basis_input, ModuleOrder::top(ring.poly()->order), opts);
    }
    return chosen;
}

std::vector<FreeVector> kernel_generators(const GradedRing& ring,
                                          const std::vector<FreeVector>& columns,
                                          const std::vector<int>& ambient_twists) {
    const int m = static_cast<int>(columns.size());
    if (m == 0) return {};
    const int rank = static_cast<int>(ambient_twists.size());
    std::vector<FreeVector> inputs = columns;
    for (const auto& rel : ring.quotient_relations(rank)) inputs.push_back(rel);

    BuchbergerOptions opts;
    opts.twists = &ambient_twists;
    TrackedBasis tracked =
        tracked_buchberger(inputs, ModuleOrder::top(ring.poly()->order), opts);

    std::vector<FreeVector> raw;
    for (const auto& syz : tracked.syzygies) {
        FreeVector v(ring.poly(), m);
        for (int j = 0; j < m; ++j) v.component(j) = ring.reduce(syz[j]);
        if (!v.is_zero()) raw.push_back(std::move(v));
    }
    std::vector<int> col_degs = column_degrees(columns, ambient_twists);
    return minimalize_generators(ring, std::move(raw), col_degs);
}

std::vector<std::vector<Polynomial>> lift_through(const GradedRing& ring,
                                                  const std::vector<FreeVector>& generators,
                                                  const std::vector<FreeVector>& targets,
                                                  const std::vector<int>& ambient_twists) {
    const int s = static_cast<int>(generators.size());
    std::vector<FreeVector> inputs = generators;
    for (const auto& rel : ring.quotient_relations(static_cast<int>(ambient_twists.size())))
        inputs.push_back(rel);
    BuchbergerOptions opts;
    opts.twists = &ambient_twists;
    TrackedBasis tracked =
        tracked_buchberger(inputs, ModuleOrder::top(ring.poly()->order), opts);

    std::vector<std::vector<Polynomial>> out;
    for (const auto& w : targets) {
        DivisionResult dr = divide(w, tracked.basis, ModuleOrder::top(ring.poly()->order));
        if (!dr.remainder.is_zero())
            throw algebra_error("lift failed: element is not in the span of the generators");
        std::vector<Polynomial> coords(s, Polynomial(ring.poly()));
        for (std::size_t k = 0; k < tracked.basis.size(); ++k) {
            if (dr.quotients[k].is_zero()) continue;
            for (int i = 0; i < s; ++i)
                if (!tracked.expr[k][i].is_zero())
                    coords[i] = coords[i] + dr.quotients[k] * tracked.expr[k][i];
        }
        for (auto& f : coords) f = ring.reduce(f);
        out.push_back(std::move(coords));
    }
    return out;
}

ChainComplex prune_complex(const ChainComplex& complex) {
    const GradedRingPtr& ring = complex.ring();
    const Field& field = ring->field();
    int lo = complex.lo();
    int hi = complex.hi();
    std::vector<GradedFreeModule> modules;
    // matrices[k] = d_{lo+1+k} as rows
    std::vector<std::vector<std::vector<Polynomial>>> mats;
    for (int i = lo; i <= hi; ++i) modules.push_back(complex.module(i));
    for (int i = lo + 1; i <= hi; ++i) mats.push_back(complex.diff(i).rows());

    auto erase_row = [](std::vector<std::vector<Polynomial>>& m, int r) {
        m.erase(m.begin() + r);
    };
    auto erase_col = [](std::vector<std::vector<Polynomial>>& m, int c) {
        for (auto& row : m) row.erase(row.begin() + c);
    };

    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t k = 0; k < mats.size() && !progress; ++k) {
            auto& d = mats[k];  // d_{lo+1+k} : modules[k+1] -> modules[k]
            const int nrows = static_cast<int>(d.size());
            const int ncols = nrows ? static_cast<int>(d[0].size()) : 0;
            for (int r = 0; r < nrows && !progress; ++r) {
                for (int c = 0; c < ncols && !progress; ++c) {
                    const Polynomial& e = d[r][c];
                    if (e.is_zero() || !e.is_constant()) continue;
                    mpq_class u = e.constant_part();
                    mpq_class uinv = field.inv(u);
                    // clear row r via column operations (source basis change)
                    for (int c2 = 0; c2 < ncols; ++c2) {
                        if (c2 == c || d[r][c2].is_zero()) continue;
                        Polynomial lambda = d[r][c2].scaled(uinv);
                        for (int r2 = 0; r2 < nrows; ++r2)
                            d[r2][c2] = ring->reduce(d[r2][c2] - lambda * d[r2][c]);
                        // compensate on the next differential: row c += lambda * row c2
                        if (k + 1 < mats.size()) {
                            auto& up = mats[k + 1];
                            for (std::size_t j = 0; j < up[c].size(); ++j)
                                up[c][j] = ring->reduce(up[c][j] + lambda * up[c2][j]);
                        }
                    }
                    // clear column c via row operations (target basis change)
                    for (int r2 = 0; r2 < nrows; ++r2) {
                        if (r2 == r || d[r2][c].is_zero()) continue;
                        Polynomial mu = d[r2][c].scaled(uinv);
                        for (int c2 = 0; c2 < ncols; ++c2)
                            d[r2][c2] = ring->reduce(d[r2][c2] - mu * d[r][c2]);
                        // compensate on the previous differential: col r += mu * col r2
                        if (k > 0) {
                            auto& down = mats[k - 1];
                            for (auto& row : down)
                                row[r] = ring->reduce(row[r] + mu * row[r2]);
                        }
                    }
                    // the split summand is now isolated; drop it
                    erase_row(d, r);
                    erase_col(d, c);
                    if (k + 1 < mats.size()) erase_row(mats[k + 1], c);
                    if (k > 0) erase_col(mats[k - 1], r);
                    modules[k].twists.erase(modules[k].twists.begin() + r);
                    modules[k + 1].twists.erase(modules[k + 1].twists.begin() + c);
                    progress = true;
                }
            }
        }
    }

    std::vector<GradedMap> diffs;
    for (std::size_t k = 0; k < mats.size(); ++k)
        diffs.push_back(GradedMap(ring, modules[k + 1], modules[k], mats[k]));
    return ChainComplex(ring, lo, std::move(modules), std::move(diffs));
}

int default_resolution_cap(const GradedRing& ring) { return ring.nvars() + 2; }

Resolution minimal_free_resolution(const ModulePresentation& module, int cap) {
    const GradedRingPtr ring = module.ring();
    if (module.is_zero_module()) throw algebra_error("cannot resolve the zero module");

    // minimize the presentation: prune unit entries, then pick minimal columns
    GradedFreeModule f0 = module.ambient();
    std::vector<FreeVector> cols;
    for (const auto& c : module.presentation().columns()) {
        FreeVector r(ring->poly(), f0.rank());
        for (int i = 0; i < f0.rank(); ++i) r.component(i) = ring->reduce(c[i]);
        if (!r.is_zero()) cols.push_back(std::move(r));
    }
    if (!cols.empty()) {
        std::vector<int> degs = column_degrees(cols, f0.twists);
        GradedFreeModule f1{degs};
        GradedMap d1 = GradedMap::from_columns(ring, f1, f0, cols);
        ChainComplex pres(ring, 0, {f0, f1}, {d1}, false);
        ChainComplex pruned = prune_complex(pres);
        f0 = pruned.module(0);
        cols = pruned.rank(1) > 0 ? pruned.diff(1).columns() : std::vector<FreeVector>{};
        cols = minimalize_generators(*ring, std::move(cols), f0.twists);
    }

    std::vector<GradedFreeModule> modules{f0};
    std::vector<GradedMap> diffs;
    while (!cols.empty()) {
        GradedFreeModule prev = modules.back();
        GradedFreeModule next{column_degrees(cols, prev.twists)};
        diffs.push_back(GradedMap::from_columns(ring, next, prev, cols));
        modules.push_back(next);
        int steps = static_cast<int>(modules.size()) - 1;
        cols = kernel_generators(*ring, diffs.back().columns(), prev.twists);
        if (!cols.empty() && steps >= cap)
            throw algebra_error(
                "projective dimension exceeds cap (infinite resolution suspected)");
    }

    ChainComplex complex(ring, 0, modules, diffs);
    if (!complex.is_minimal())
        throw algebra_error("internal error: resolution is not minimal");

    Resolution res{std::move(complex), BettiTable{},
                   static_cast<int>(modules.size()) - 1};
    for (std::size_t i = 0; i < modules.size(); ++i)
        for (int t : modules[i].twists) res.betti.add(static_cast<int>(i), t, 1);
    return res;
}

bool tor1_self_test(const ModulePresentation& module, int cap) {
    if (!module.is_cyclic()) throw algebra_error("module is not cyclic");
    auto len = module.length();
    if (!len) throw algebra_error("module not finite length");

    Resolution res = minimal_free_resolution(module, cap);
    const ChainComplex& f = res.complex;
    if (f.hi() < 1) return true;  // free module, Tor_1 = 0
    long beta1 = f.rank(1);

    // brute-force graded pieces of F (x) M up to the vanishing bound
    const GradedRing& ring = *module.ring();
    const Field& field = ring.field();
    int top = module.top_degree();
    int max_twist = 0;
    for (int i = f.lo(); i <= f.hi(); ++i)
        for (int t : f.module(i).twists) max_twist = std::max(max_twist, t);
    int bound = top + max_twist;

    // relations of M as an ideal basis (cyclic): the module GB already has them
    const GroebnerBasis& mgb = module.column_basis();

    long h1 = 0;
    for (int t = 0; t <= bound; ++t) {
        auto piece = [&](int i) {
            std::vector<std::pair<int, Monomial>> basis;  // (generator of F_i, monomial of M)
            if (!f.in_range(i)) return basis;
            for (int g = 0; g < f.rank(i); ++g) {
                int d = t - f.module(i).twists[g];
                for (const auto& [comp, m] : module.standard_basis(d)) {
                    (void)comp;  // cyclic: single component
                    basis.emplace_back(g, m);
                }
            }
            return basis;
        };
        auto matrix_of = [&](int i, const std::vector<std::pair<int, Monomial>>& src,
                             const std::vector<std::pair<int, Monomial>>& tgt) {
            std::vector<std::vector<mpq_class>> m(tgt.size(),
                                                  std::vector<mpq_class>(src.size(), 0));
            if (!f.has_diff(i)) return m;
            const GradedMap& d = f.diff(i);
            for (std::size_t c = 0; c < src.size(); ++c) {
                auto [g, mono] = src[c];
                for (int r = 0; r < d.target().rank(); ++r) {
                    const Polynomial& e = d.entry(r, g);
                    if (e.is_zero()) continue;
                    Polynomial image = normal_form(
                        e.term_multiple(1, mono), mgb);
                    for (const auto& term : image.terms()) {
                        for (std::size_t rr = 0; rr < tgt.size(); ++rr) {
                            if (tgt[rr].first == r && tgt[rr].second == term.mono) {
                                m[rr][c] = field.add(m[rr][c], term.coeff);
                                break;
                            }
                        }
                    }
                }
            }
            return m;
        };
        auto b0 = piece(0), b1 = piece(1), b2 = piece(2);
        long dim1 = static_cast<long>(b1.size());
        long rank_d1 = scalar_matrix_rank(field, matrix_of(1, b1, b0));
        long rank_d2 = scalar_matrix_rank(field, matrix_of(2, b2, b1));
        h1 += dim1 - rank_d1 - rank_d2;
    }
    return h1 == beta1 * (*len);
}

}  // namespace gradedres
