#include "gradedres/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace gradedres {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_)
        if (e < 0) throw algebra_error("negative exponent");
    deg_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial Monomial::one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

bool Monomial::divides(const Monomial& m) const {
    if (nvars() != m.nvars()) throw algebra_error("variable-set mismatch");
    for (int i = 0; i < nvars(); ++i)
        if (exps_[i] > m.exps_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
    if (nvars() != m.nvars()) throw algebra_error("variable-set mismatch");
    std::vector<int> e(exps_);
    for (int i = 0; i < nvars(); ++i) e[i] += m.exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::quotient(const Monomial& m) const {
    if (!m.divides(*this)) throw algebra_error("monomial quotient is not exact");
    std::vector<int> e(exps_);
    for (int i = 0; i < nvars(); ++i) e[i] -= m.exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::pow(long k) const {
    std::vector<int> e(exps_);
    for (auto& x : e) x = static_cast<int>(x * k);
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw algebra_error("variable-set mismatch");
    std::vector<int> e(a.exps_);
    for (int i = 0; i < a.nvars(); ++i) e[i] = std::max(e[i], b.exps_[i]);
    return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nvars(); ++i)
        if (a.exps_[i] > 0 && b.exps_[i] > 0) return false;
    return true;
}

int compare(const Monomial& a, const Monomial& b, TermOrder order) {
    if (a.nvars() != b.nvars()) throw algebra_error("variable-set mismatch");
    switch (order) {
        case TermOrder::degrevlex: {
            if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
            // last differing exponent: the one with the smaller exponent is larger
            for (int i = a.nvars() - 1; i >= 0; --i) {
                if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
            }
            return 0;
        }
        case TermOrder::lex: {
            for (int i = 0; i < a.nvars(); ++i) {
                if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
            }
            return 0;
        }
    }
    return 0;
}

}  // namespace gradedres
