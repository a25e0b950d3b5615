#ifndef GRADEDRES_POLYNOMIAL_HPP
#define GRADEDRES_POLYNOMIAL_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gradedres/monomial.hpp"

namespace gradedres {

/// Shared arithmetic context: the coefficient field, the variable names and
/// the active monomial order. Polynomials hold a pointer to one of these.
struct PolyRing {
    Field field;
    std::vector<std::string> vars;
    TermOrder order = TermOrder::degrevlex;

    int nvars() const { return static_cast<int>(vars.size()); }
    bool compatible(const PolyRing& other) const {
        return field == other.field && vars == other.vars && order == other.order;
    }
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

PolyRingPtr make_poly_ring(Field field, std::vector<std::string> vars,
                           TermOrder order = TermOrder::degrevlex);

struct Term {
    Monomial mono;
    mpq_class coeff;  // nonzero, canonical in the ring's field
};

/// Sparse distributed multivariate polynomial. Terms are kept sorted in
/// strictly descending monomial order with no zero coefficients.
class Polynomial {
   public:
    Polynomial() = default;  // detached zero; usable only as a placeholder
    explicit Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial constant(PolyRingPtr ring, const mpq_class& c);
    static Polynomial variable(PolyRingPtr ring, int index);
    static Polynomial monomial(PolyRingPtr ring, Monomial m, const mpq_class& c);
    static Polynomial from_terms(PolyRingPtr ring, std::vector<Term> terms);

    const PolyRingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    const Term& leading_term() const;
    /// Total degree of the highest-degree term; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    /// Degree when homogeneous and nonzero, nullopt otherwise.
    std::optional<int> homogeneous_degree() const;
    /// Degree-0 part as a scalar (zero if none); used for minimality checks.
    mpq_class constant_part() const;
    bool is_constant() const;

    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& g) const;
    Polynomial scaled(const mpq_class& c) const;
    /// c * m * this
    Polynomial term_multiple(const mpq_class& c, const Monomial& m) const;

    bool operator==(const Polynomial& g) const;
    bool operator!=(const Polynomial& g) const { return !(*this == g); }

    std::string to_string() const;

   private:
    void check_same_ring(const Polynomial& g) const;

    PolyRingPtr ring_;
    std::vector<Term> terms_;
};

/// Parses the harness text syntax: terms joined by `+`/`-`, `*` for products,
/// `^` for powers, integer or `a/b` rational coefficients.
/// Throws algebra_error with a column position on bad input.
Polynomial parse_polynomial(const PolyRingPtr& ring, std::string_view text);

}  // namespace gradedres

#endif
