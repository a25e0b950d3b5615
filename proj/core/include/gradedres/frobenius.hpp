#ifndef GRADEDRES_FROBENIUS_HPP
#define GRADEDRES_FROBENIUS_HPP

#include "gradedres/chain_complex.hpp"

namespace gradedres {

/// f with every exponent multiplied by q (the q-th Frobenius power of the
/// monomials; coefficients are fixed by Frobenius over F_p).
Polynomial frobenius_power(const Polynomial& f, long q);

/// Termwise Frobenius pullback of the complex: exponents and twists scaled
/// by p^e, entries reduced in R. Throws unless the coefficient field has
/// positive characteristic.
ChainComplex frobenius_twist(const ChainComplex& c, int e);

struct DuttaSequence {
    std::vector<mpq_class> values;  // values[e] = chi(phi^e c) / p^(dim R * e)
    bool constant;                  // all entries equal
};

/// Normalized Euler characteristics of the Frobenius twists, e = 0..emax.
DuttaSequence dutta_sequence(const ChainComplex& c, int emax);

/// True when phi^e(c) is again a minimal resolution of a finite-length
/// module: exact in positive degrees, H_0 of finite length, and no constant
/// differential entries.
bool frobenius_minimality_audit(const ChainComplex& c, int e);

}  // namespace gradedres

#endif
