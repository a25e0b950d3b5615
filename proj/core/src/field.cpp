#include "gradedres/field.hpp"

namespace gradedres {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

}  // namespace

Field Field::prime(long p) {
    if (!is_prime(p)) throw algebra_error("field characteristic must be prime");
    return Field(FieldKind::prime, p);
}

Field Field::rationals() { return Field(FieldKind::rationals, 0); }

mpq_class Field::from_int(long n) const { return canonical(mpq_class(n)); }

mpq_class Field::canonical(const mpq_class& a) const {
    if (kind_ == FieldKind::rationals) {
        mpq_class r(a);
        r.canonicalize();
        return r;
    }
    mpz_class num = a.get_num();
    mpz_class den = a.get_den();
    mpz_class p(p_);
    mpz_class r;
    mpz_mod(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    if (den != 1) {
        mpz_class dinv;
        if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            throw algebra_error("division by zero");
        r = (r * dinv) % p;
        if (r < 0) r += p;
    }
    return mpq_class(r);
}

mpq_class Field::add(const mpq_class& a, const mpq_class& b) const {
    return canonical(a + b);
}

mpq_class Field::sub(const mpq_class& a, const mpq_class& b) const {
    return canonical(a - b);
}

mpq_class Field::mul(const mpq_class& a, const mpq_class& b) const {
    return canonical(a * b);
}

mpq_class Field::neg(const mpq_class& a) const { return canonical(-a); }

mpq_class Field::inv(const mpq_class& a) const {
    if (a == 0) throw algebra_error("division by zero");
    if (kind_ == FieldKind::rationals) return canonical(1 / a);
    mpz_class num = canonical(a).get_num();
    mpz_class p(p_);
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()) == 0)
        throw algebra_error("division by zero");
    return mpq_class(r);
}

mpq_class Field::div(const mpq_class& a, const mpq_class& b) const {
    return mul(a, inv(b));
}

std::string Field::to_string(const mpq_class& a) const {
    return canonical(a).get_str();
}

}  // namespace gradedres
