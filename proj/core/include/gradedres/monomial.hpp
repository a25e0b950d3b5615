#ifndef GRADEDRES_MONOMIAL_HPP
#define GRADEDRES_MONOMIAL_HPP

#include <vector>

#include "gradedres/field.hpp"

namespace gradedres {

/// Exponent vector with a cached total degree.
class Monomial {
   public:
    explicit Monomial(std::vector<int> exps);
    static Monomial one(int nvars);

    int nvars() const { return static_cast<int>(exps_.size()); }
    int degree() const { return deg_; }
    int operator[](int i) const { return exps_[i]; }
    const std::vector<int>& exponents() const { return exps_; }

    bool divides(const Monomial& m) const;
    Monomial operator*(const Monomial& m) const;
    /// this / m; requires m.divides(*this).
    Monomial quotient(const Monomial& m) const;
    Monomial pow(long k) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static bool coprime(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& m) const { return exps_ == m.exps_; }
    bool operator!=(const Monomial& m) const { return !(*this == m); }

   private:
    std::vector<int> exps_;
    int deg_;
};

enum class TermOrder { degrevlex, lex };

/// Three-way comparison: -1, 0 or 1 as a <, =, > b under the order.
int compare(const Monomial& a, const Monomial& b, TermOrder order);

}  // namespace gradedres

#endif
