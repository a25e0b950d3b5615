#include "gradedres/frobenius.hpp"

#include "gradedres/homology.hpp"

namespace gradedres {

Polynomial frobenius_power(const Polynomial& f, long q) {
    std::vector<Term> terms;
    for (const Term& t : f.terms()) terms.push_back({t.mono.pow(q), t.coeff});
    return Polynomial::from_terms(f.ring(), std::move(terms));
}

ChainComplex frobenius_twist(const ChainComplex& c, int e) {
    const GradedRingPtr& ring = c.ring();
    const long p = ring->field().characteristic();
    if (p == 0) throw algebra_error("Frobenius requires positive characteristic");
    if (e < 0) throw algebra_error("Frobenius exponent must be nonnegative");
    long q = 1;
    for (int k = 0; k < e; ++k) q *= p;

    std::vector<GradedFreeModule> modules;
    for (int i = c.lo(); i <= c.hi(); ++i) {
        GradedFreeModule m = c.module(i);
        for (int& w : m.twists) w = static_cast<int>(w * q);
        modules.push_back(std::move(m));
    }
    std::vector<GradedMap> diffs;
    for (int i = c.lo() + 1; i <= c.hi(); ++i) {
        const GradedMap& d = c.diff(i);
        std::vector<std::vector<Polynomial>> rows = d.rows();
        for (auto& row : rows)
            for (Polynomial& entry : row) entry = frobenius_power(entry, q);
        diffs.push_back(GradedMap(ring, modules[i - c.lo()], modules[i - 1 - c.lo()],
                                  std::move(rows)));
    }
    return ChainComplex(ring, c.lo(), std::move(modules), std::move(diffs));
}

DuttaSequence dutta_sequence(const ChainComplex& c, int emax) {
    const GradedRing& ring = *c.ring();
    const long p = ring.field().characteristic();
    if (p == 0) throw algebra_error("Frobenius requires positive characteristic");
    if (emax < 0) throw algebra_error("emax must be nonnegative");
    const int d = ring.dimension();

    DuttaSequence out;
    out.constant = true;
    mpz_class denom = 1;  // p^(d*e)
    mpz_class pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(d));
    for (int e = 0; e <= emax; ++e) {
        ChainComplex twisted = frobenius_twist(c, e);
        long chi = euler_characteristic(twisted, homology_lengths(twisted));
        mpq_class value(mpz_class(chi), denom);
        value.canonicalize();
        if (e > 0 && value != out.values.back()) out.constant = false;
        out.values.push_back(std::move(value));
        denom *= pd;
    }
    return out;
}

bool frobenius_minimality_audit(const ChainComplex& c, int e) {
    ChainComplex twisted = frobenius_twist(c, e);
    if (!twisted.is_minimal()) return false;
    for (int i = twisted.lo() + 1; i <= twisted.hi(); ++i)
        if (homology_presentation(twisted, i).length() != std::optional<long>(0))
            return false;
    return homology_presentation(twisted, twisted.lo()).length().has_value();
}

}  // namespace gradedres
