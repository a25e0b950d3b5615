#ifndef GRADEDRES_FIELD_HPP
#define GRADEDRES_FIELD_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gradedres {

/// Base error type; every failure the library reports derives from it.
class algebra_error : public std::runtime_error {
   public:
    explicit algebra_error(const std::string& what) : std::runtime_error(what) {}
};

enum class FieldKind { prime, rationals };

/// An exact coefficient field: F_p for an odd machine-word prime p, or Q.
/// Elements are mpq_class values kept in canonical form (for F_p: an
/// integer representative in [0, p)).
class Field {
   public:
    static Field prime(long p);
    static Field rationals();

    FieldKind kind() const { return kind_; }
    long characteristic() const { return p_; }

    mpq_class zero() const { return mpq_class(0); }
    mpq_class one() const { return mpq_class(1); }
    mpq_class from_int(long n) const;

    /// Canonical representative of an arbitrary rational value.
    /// In F_p a denominator is cleared by modular inversion.
    mpq_class canonical(const mpq_class& a) const;

    mpq_class add(const mpq_class& a, const mpq_class& b) const;
    mpq_class sub(const mpq_class& a, const mpq_class& b) const;
    mpq_class mul(const mpq_class& a, const mpq_class& b) const;
    mpq_class neg(const mpq_class& a) const;
    mpq_class inv(const mpq_class& a) const;
    mpq_class div(const mpq_class& a, const mpq_class& b) const;

    std::string to_string(const mpq_class& a) const;

    bool operator==(const Field& other) const {
        return kind_ == other.kind_ && p_ == other.p_;
    }

   private:
    Field(FieldKind kind, long p) : kind_(kind), p_(p) {}

    FieldKind kind_;
    long p_;  // 0 for Q
};

}  // namespace gradedres

#endif
