#ifndef GRADEDRES_FREE_VECTOR_HPP
#define GRADEDRES_FREE_VECTOR_HPP

#include <optional>

#include "gradedres/polynomial.hpp"

namespace gradedres {

/// Element of a free module R^rank, stored as one polynomial per component.
class FreeVector {
   public:
    FreeVector() = default;
    FreeVector(PolyRingPtr ring, int rank);
    /// Wraps a single polynomial as a rank-1 vector (ideal case).
    static FreeVector wrap(const Polynomial& f);
    static FreeVector basis_vector(PolyRingPtr ring, int rank, int index,
                                   const Polynomial& entry);

    const PolyRingPtr& ring() const { return ring_; }
    int rank() const { return static_cast<int>(comps_.size()); }
    const Polynomial& operator[](int i) const { return comps_[i]; }
    Polynomial& component(int i) { return comps_[i]; }
    const std::vector<Polynomial>& components() const { return comps_; }

    bool is_zero() const;

    FreeVector operator+(const FreeVector& w) const;
    FreeVector operator-(const FreeVector& w) const;
    FreeVector operator-() const;
    FreeVector scaled(const mpq_class& c) const;
    FreeVector term_multiple(const mpq_class& c, const Monomial& m) const;
    FreeVector poly_multiple(const Polynomial& f) const;

    bool operator==(const FreeVector& w) const { return comps_ == w.comps_; }

    /// Homogeneous degree of the vector given the component twists
    /// (degree of entry i plus twists[i], equal across components).
    /// nullopt when zero or inhomogeneous.
    std::optional<int> homogeneous_degree(const std::vector<int>& twists) const;

    std::string to_string() const;

   private:
    PolyRingPtr ring_;
    std::vector<Polynomial> comps_;
};

/// A term position in a free module: component index + monomial + coefficient.
struct ModuleTerm {
    int comp;
    Monomial mono;
    mpq_class coeff;
};

/// Order on module monomials (comp, mono). The default compares monomials
/// under the ring order with lower component index breaking ties (TOP).
/// A Schreyer order compares images under a fixed list of leading terms,
/// breaking ties by position.
class ModuleOrder {
   public:
    static ModuleOrder top(TermOrder base);
    static ModuleOrder schreyer(TermOrder base, std::vector<std::pair<int, Monomial>> gen_leads);

    /// -1, 0, 1 as (c1, m1) <, =, > (c2, m2).
    int compare(int c1, const Monomial& m1, int c2, const Monomial& m2) const;
    TermOrder base() const { return base_; }
    bool is_schreyer() const { return schreyer_; }

   private:
    TermOrder base_ = TermOrder::degrevlex;
    bool schreyer_ = false;
    std::vector<std::pair<int, Monomial>> gen_leads_;
};

/// Leading module term of v under ord; throws on the zero vector.
ModuleTerm lead_term(const FreeVector& v, const ModuleOrder& ord);

}  // namespace gradedres

#endif
