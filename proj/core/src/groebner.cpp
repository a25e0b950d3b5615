#include "gradedres/groebner.hpp"

#include <algorithm>
#include <set>

namespace gradedres {

namespace {

void validate_homogeneous(const std::vector<FreeVector>& gens, const BuchbergerOptions& opts) {
    if (!opts.require_homogeneous) return;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        std::vector<int> twists =
            opts.twists ? *opts.twists : std::vector<int>(g.rank(), 0);
        if (!g.homogeneous_degree(twists)) throw algebra_error("inhomogeneous generator");
    }
}

struct Pair {
    int deg;
    int i, j;
    bool operator<(const Pair& o) const {
        if (deg != o.deg) return deg < o.deg;
        if (j != o.j) return j < o.j;
        return i < o.i;
    }
};

int pair_degree(const ModuleTerm& a, const ModuleTerm& b) {
    return Monomial::lcm(a.mono, b.mono).degree();
}

}  // namespace

DivisionResult divide(const FreeVector& v, const std::vector<FreeVector>& gens,
                      const ModuleOrder& ord) {
    const PolyRingPtr& ring = v.ring();
    const Field& field = ring->field;
    std::vector<Polynomial> quotients(gens.size(), Polynomial(ring));

    // cache generator leads
    std::vector<ModuleTerm> leads;
    std::vector<bool> usable(gens.size(), false);
    leads.reserve(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (!gens[k].is_zero()) {
            leads.push_back(lead_term(gens[k], ord));
            usable[k] = true;
        } else {
            leads.push_back(ModuleTerm{0, Monomial::one(ring->nvars()), 0});
        }
    }

    FreeVector rem(ring, v.rank());
    FreeVector cur = v;
    while (!cur.is_zero()) {
        ModuleTerm lt = lead_term(cur, ord);
        bool reduced_step = false;
        for (std::size_t k = 0; k < gens.size(); ++k) {
            if (!usable[k]) continue;
            if (leads[k].comp != lt.comp || !leads[k].mono.divides(lt.mono)) continue;
            Monomial u = lt.mono.quotient(leads[k].mono);
            mpq_class c = field.div(lt.coeff, leads[k].coeff);
            cur = cur - gens[k].term_multiple(c, u);
            quotients[k] = quotients[k] + Polynomial::monomial(ring, u, c);
            reduced_step = true;
            break;
        }
        if (!reduced_step) {
            Polynomial t = Polynomial::monomial(ring, lt.mono, lt.coeff);
            rem.component(lt.comp) = rem.component(lt.comp) + t;
            cur.component(lt.comp) = cur.component(lt.comp) - t;
        }
    }
    return DivisionResult{std::move(rem), std::move(quotients)};
}

GroebnerBasis buchberger(std::vector<FreeVector> generators, const ModuleOrder& order,
                         const BuchbergerOptions& opts) {
    validate_homogeneous(generators, opts);

    PolyRingPtr ring;
    int rank = 0;
    std::vector<FreeVector> basis;
    for (auto& g : generators) {
        if (g.is_zero()) continue;
        if (!ring) {
            ring = g.ring();
            rank = g.rank();
        } else if (g.rank() != rank) {
            throw algebra_error("free module rank mismatch");
        }
        ModuleTerm lt = lead_term(g, order);
        basis.push_back(g.scaled(g.ring()->field.inv(lt.coeff)));
    }

    GroebnerBasis out;
    out.order = order;
    out.rank = rank;
    if (basis.empty()) {
        out.reduced = true;
        return out;
    }
    const Field& field = ring->field;

    std::vector<ModuleTerm> leads;
    for (const auto& g : basis) leads.push_back(lead_term(g, order));

    std::set<Pair> pending;
    auto add_pairs = [&](int j) {
        for (int i = 0; i < j; ++i) {
            if (leads[i].comp != leads[j].comp) continue;
            pending.insert(Pair{pair_degree(leads[i], leads[j]), i, j});
        }
    };
    for (int j = 1; j < static_cast<int>(basis.size()); ++j) add_pairs(j);

    auto in_pending = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        for (const auto& p : pending)
            if (p.i == a && p.j == b) return true;
        return false;
    };

    while (!pending.empty()) {
        Pair p = *pending.begin();
        pending.erase(pending.begin());
        if (opts.degree_cap > 0 && p.deg > opts.degree_cap)
            throw algebra_error("degree cap exceeded in Groebner computation");

        const ModuleTerm &li = leads[p.i], &lj = leads[p.j];
        // product criterion (ideal case only)
        if (rank == 1 && Monomial::coprime(li.mono, lj.mono)) continue;
        // chain criterion
        Monomial l = Monomial::lcm(li.mono, lj.mono);
        bool skip = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (leads[k].comp != li.comp || !leads[k].mono.divides(l)) continue;
            if (!in_pending(p.i, k) && !in_pending(p.j, k)) skip = true;
        }
        if (skip) continue;

        FreeVector spair =
            basis[p.i].term_multiple(1, l.quotient(li.mono)) -
            basis[p.j].term_multiple(1, l.quotient(lj.mono));
        FreeVector r = divide(spair, basis, order).remainder;
        if (r.is_zero()) continue;
        ModuleTerm lt = lead_term(r, order);
        basis.push_back(r.scaled(field.inv(lt.coeff)));
        leads.push_back(lead_term(basis.back(), order));
        add_pairs(static_cast<int>(basis.size()) - 1);
    }

    // interreduce to the canonical reduced basis
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t a = 0; a < basis.size(); ++a) {
        if (!keep[a]) continue;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (a == b || !keep[b]) continue;
            if (leads[b].comp == leads[a].comp && leads[b].mono.divides(leads[a].mono) &&
                !(leads[a].mono == leads[b].mono && b > a)) {
                keep[a] = false;
                break;
            }
        }
    }
    std::vector<FreeVector> survivors;
    for (std::size_t a = 0; a < basis.size(); ++a)
        if (keep[a]) survivors.push_back(basis[a]);

    std::vector<FreeVector> final_basis;
    for (std::size_t a = 0; a < survivors.size(); ++a) {
        std::vector<FreeVector> others;
        for (std::size_t b = 0; b < survivors.size(); ++b)
            if (b != a) others.push_back(survivors[b]);
        FreeVector r = divide(survivors[a], others, order).remainder;
        ModuleTerm lt = lead_term(r, order);
        final_basis.push_back(r.scaled(field.inv(lt.coeff)));
    }
    std::sort(final_basis.begin(), final_basis.end(),
              [&](const FreeVector& x, const FreeVector& y) {
                  ModuleTerm a = lead_term(x, order), b = lead_term(y, order);
                  return order.compare(a.comp, a.mono, b.comp, b.mono) > 0;
              });

    out.gens = std::move(final_basis);
    out.reduced = true;
    return out;
}

GroebnerBasis buchberger_ideal(const std::vector<Polynomial>& generators,
                               const BuchbergerOptions& opts) {
    std::vector<FreeVector> vecs;
    PolyRingPtr ring;
    for (const auto& f : generators) {
        vecs.push_back(FreeVector::wrap(f));
        if (!ring) ring = f.ring();
    }
    TermOrder base = ring ? ring->order : TermOrder::degrevlex;
    GroebnerBasis gb = buchberger(std::move(vecs), ModuleOrder::top(base), opts);
    gb.rank = 1;
    return gb;
}

FreeVector normal_form(const FreeVector& v, const GroebnerBasis& gb) {
    if (gb.rank != 0 && v.rank() != gb.rank && !gb.gens.empty())
        throw algebra_error("ambient module mismatch");
    return divide(v, gb.gens, gb.order).remainder;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    return normal_form(FreeVector::wrap(f), gb)[0];
}

TrackedBasis tracked_buchberger(const std::vector<FreeVector>& inputs, const ModuleOrder& ord,
                                const BuchbergerOptions& opts) {
    validate_homogeneous(inputs, opts);
    TrackedBasis out;
    out.input_count = static_cast<int>(inputs.size());
    if (inputs.empty()) return out;

    PolyRingPtr ring;
    for (const auto& v : inputs)
        if (v.ring()) { ring = v.ring(); break; }
    if (!ring) return out;
    const Field& field = ring->field;
    const int n_in = out.input_count;

    auto unit_expr = [&](int i) {
        std::vector<Polynomial> e(n_in, Polynomial(ring));
        e[i] = Polynomial::constant(ring, 1);
        return e;
    };

    // zero inputs contribute the trivial syzygy e_i directly
    std::vector<int> basis_to_input;
    for (int i = 0; i < n_in; ++i) {
        if (inputs[i].is_zero()) {
            FreeVector syz(ring, n_in);
            syz.component(i) = Polynomial::constant(ring, 1);
            out.syzygies.push_back(std::move(syz));
        } else {
            out.basis.push_back(inputs[i]);
            out.expr.push_back(unit_expr(i));
        }
    }
    if (out.basis.empty()) return out;

    std::vector<ModuleTerm> leads;
    for (const auto& g : out.basis) leads.push_back(lead_term(g, ord));

    std::set<Pair> pending;
    auto add_pairs = [&](int j) {
        for (int i = 0; i < j; ++i) {
            if (leads[i].comp != leads[j].comp) continue;
            pending.insert(Pair{pair_degree(leads[i], leads[j]), i, j});
        }
    };
    for (int j = 1; j < static_cast<int>(out.basis.size()); ++j) add_pairs(j);

    auto expr_combination = [&](const std::vector<std::pair<int, Polynomial>>& combo) {
        std::vector<Polynomial> acc(n_in, Polynomial(ring));
        for (const auto& [k, coeff] : combo) {
            if (coeff.is_zero()) continue;
            for (int i = 0; i < n_in; ++i)
                if (!out.expr[k][i].is_zero()) acc[i] = acc[i] + coeff * out.expr[k][i];
        }
        return acc;
    };

    while (!pending.empty()) {
        Pair p = *pending.begin();
        pending.erase(pending.begin());
        if (opts.degree_cap > 0 && p.deg > opts.degree_cap)
            throw algebra_error("degree cap exceeded in Groebner computation");

        const ModuleTerm &li = leads[p.i], &lj = leads[p.j];
        Monomial l = Monomial::lcm(li.mono, lj.mono);
        Monomial ui = l.quotient(li.mono);
        Monomial uj = l.quotient(lj.mono);
        mpq_class ci = field.inv(li.coeff);
        mpq_class cj = field.inv(lj.coeff);

        FreeVector spair = out.basis[p.i].term_multiple(ci, ui) -
                           out.basis[p.j].term_multiple(cj, uj);
        DivisionResult dr = divide(spair, out.basis, ord);

        // combination of basis elements equal to spair - remainder, in basis coords
        std::vector<std::pair<int, Polynomial>> combo;
        combo.emplace_back(p.i, Polynomial::monomial(ring, ui, ci));
        combo.emplace_back(p.j, Polynomial::monomial(ring, uj, field.neg(cj)));
        for (std::size_t k = 0; k < dr.quotients.size(); ++k)
            if (!dr.quotients[k].is_zero())
                combo.emplace_back(static_cast<int>(k), -dr.quotients[k]);

        if (dr.remainder.is_zero()) {
            std::vector<Polynomial> sy = expr_combination(combo);
            FreeVector syz(ring, n_in);
            for (int i = 0; i < n_in; ++i) syz.component(i) = sy[i];
            if (!syz.is_zero()) out.syzygies.push_back(std::move(syz));
        } else {
            out.basis.push_back(dr.remainder);
            out.expr.push_back(expr_combination(combo));
            leads.push_back(lead_term(dr.remainder, ord));
            add_pairs(static_cast<int>(out.basis.size()) - 1);
        }
    }
    return out;
}

std::vector<FreeVector> syzygies(const GroebnerBasis& gb) {
    TrackedBasis t = tracked_buchberger(gb.gens, gb.order);
    return t.syzygies;
}

bool spair_closure_holds(const GroebnerBasis& gb) {
    const auto& gens = gb.gens;
    std::vector<ModuleTerm> leads;
    for (const auto& g : gens) leads.push_back(lead_term(g, gb.order));
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if (leads[i].comp != leads[j].comp) continue;
            Monomial l = Monomial::lcm(leads[i].mono, leads[j].mono);
            const Field& field = gens[i].ring()->field;
            FreeVector spair =
                gens[i].term_multiple(field.inv(leads[i].coeff), l.quotient(leads[i].mono)) -
                gens[j].term_multiple(field.inv(leads[j].coeff), l.quotient(leads[j].mono));
            if (!divide(spair, gens, gb.order).remainder.is_zero()) return false;
        }
    }
    return true;
}

}  // namespace gradedres
