#include "gradedres/free_vector.hpp"

namespace gradedres {

FreeVector::FreeVector(PolyRingPtr ring, int rank) : ring_(ring) {
    comps_.assign(rank, Polynomial(ring));
}

FreeVector FreeVector::wrap(const Polynomial& f) {
    FreeVector v(f.ring(), 1);
    v.comps_[0] = f;
    return v;
}

FreeVector FreeVector::basis_vector(PolyRingPtr ring, int rank, int index,
                                    const Polynomial& entry) {
    FreeVector v(std::move(ring), rank);
    v.comps_.at(index) = entry;
    return v;
}

bool FreeVector::is_zero() const {
    for (const auto& f : comps_)
        if (!f.is_zero()) return false;
    return true;
}

FreeVector FreeVector::operator+(const FreeVector& w) const {
    if (rank() != w.rank()) throw algebra_error("free module rank mismatch");
    FreeVector out(ring_, rank());
    for (int i = 0; i < rank(); ++i) out.comps_[i] = comps_[i] + w.comps_[i];
    return out;
}

FreeVector FreeVector::operator-(const FreeVector& w) const { return *this + (-w); }

FreeVector FreeVector::operator-() const {
    FreeVector out(ring_, rank());
    for (int i = 0; i < rank(); ++i) out.comps_[i] = -comps_[i];
    return out;
}

FreeVector FreeVector::scaled(const mpq_class& c) const {
    FreeVector out(ring_, rank());
    for (int i = 0; i < rank(); ++i) out.comps_[i] = comps_[i].scaled(c);
    return out;
}

FreeVector FreeVector::term_multiple(const mpq_class& c, const Monomial& m) const {
    FreeVector out(ring_, rank());
    for (int i = 0; i < rank(); ++i) out.comps_[i] = comps_[i].term_multiple(c, m);
    return out;
}

FreeVector FreeVector::poly_multiple(const Polynomial& f) const {
    FreeVector out(ring_, rank());
    for (int i = 0; i < rank(); ++i) out.comps_[i] = comps_[i] * f;
    return out;
}

std::optional<int> FreeVector::homogeneous_degree(const std::vector<int>& twists) const {
    std::optional<int> deg;
    for (int i = 0; i < rank(); ++i) {
        if (comps_[i].is_zero()) continue;
        auto d = comps_[i].homogeneous_degree();
        if (!d) return std::nullopt;
        int total = *d + twists.at(i);
        if (deg && *deg != total) return std::nullopt;
        deg = total;
    }
    return deg;
}

std::string FreeVector::to_string() const {
    std::string s = "(";
    for (int i = 0; i < rank(); ++i) {
        if (i) s += ", ";
        s += comps_[i].to_string();
    }
    return s + ")";
}

ModuleOrder ModuleOrder::top(TermOrder base) {
    ModuleOrder o;
    o.base_ = base;
    return o;
}

ModuleOrder ModuleOrder::schreyer(TermOrder base,
                                  std::vector<std::pair<int, Monomial>> gen_leads) {
    ModuleOrder o;
    o.base_ = base;
    o.schreyer_ = true;
    o.gen_leads_ = std::move(gen_leads);
    return o;
}

int ModuleOrder::compare(int c1, const Monomial& m1, int c2, const Monomial& m2) const {
    if (schreyer_) {
        const auto& [tc1, tm1] = gen_leads_.at(c1);
        const auto& [tc2, tm2] = gen_leads_.at(c2);
        Monomial p1 = m1 * tm1;
        Monomial p2 = m2 * tm2;
        int c = gradedres::compare(p1, p2, base_);
        if (c != 0) return c;
        if (tc1 != tc2) return tc1 < tc2 ? 1 : -1;
        if (c1 != c2) return c1 < c2 ? 1 : -1;  // position tie-break
        return 0;
    }
    int c = gradedres::compare(m1, m2, base_);
    if (c != 0) return c;
    if (c1 != c2) return c1 < c2 ? 1 : -1;  // lower component is larger
    return 0;
}

ModuleTerm lead_term(const FreeVector& v, const ModuleOrder& ord) {
    ModuleTerm cur{0, Monomial::one(0), 0};
    bool have = false;
    for (int i = 0; i < v.rank(); ++i) {
        if (v[i].is_zero()) continue;
        const Term& lt = v[i].leading_term();
        if (!have || ord.compare(i, lt.mono, cur.comp, cur.mono) > 0) {
            cur = ModuleTerm{i, lt.mono, lt.coeff};
            have = true;
        }
    }
    if (!have) throw algebra_error("leading term of zero vector");
    return cur;
}

}  // namespace gradedres
