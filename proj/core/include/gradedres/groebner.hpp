#ifndef GRADEDRES_GROEBNER_HPP
#define GRADEDRES_GROEBNER_HPP

#include "gradedres/free_vector.hpp"

namespace gradedres {

struct BuchbergerOptions {
    /// Abort if an S-pair of total degree above this appears (0 = no cap).
    int degree_cap = 0;
    /// Validate that every generator is homogeneous (twists all zero unless
    /// supplied).
    bool require_homogeneous = true;
    const std::vector<int>* twists = nullptr;  // ambient twists for validation
};

/// A Groebner basis of a submodule of R^rank (rank 1 = ideal case).
/// Generators are monic with sorted, deterministic ordering when reduced.
struct GroebnerBasis {
    std::vector<FreeVector> gens;
    ModuleOrder order{ModuleOrder::top(TermOrder::degrevlex)};
    int rank = 0;
    bool reduced = false;
};

/// Buchberger's algorithm with normal (lowest degree first) pair selection and
/// the chain criterion; output is the unique reduced basis for the order.
GroebnerBasis buchberger(std::vector<FreeVector> generators, const ModuleOrder& order,
                         const BuchbergerOptions& opts = {});

/// Convenience wrapper for ideals.
GroebnerBasis buchberger_ideal(const std::vector<Polynomial>& generators,
                               const BuchbergerOptions& opts = {});

/// Full normal form (every term reduced). Zero iff v lies in the submodule.
FreeVector normal_form(const FreeVector& v, const GroebnerBasis& gb);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// Division with quotient tracking: v = sum_k quotients[k] * gens[k] + remainder.
struct DivisionResult {
    FreeVector remainder;
    std::vector<Polynomial> quotients;
};
DivisionResult divide(const FreeVector& v, const std::vector<FreeVector>& gens,
                      const ModuleOrder& ord);

/// Buchberger run that keeps every input generator in place and records, for
/// each basis element, its expression in the inputs, and for each S-pair that
/// reduces to zero, the resulting syzygy written in input coordinates.
/// No pair criteria are applied, so the syzygies generate the full syzygy
/// module of the inputs (Schreyer).
struct TrackedBasis {
    std::vector<FreeVector> basis;             // inputs first, then appended
    std::vector<std::vector<Polynomial>> expr; // expr[k][i]: basis[k] = sum expr[k][i]*input[i]
    std::vector<FreeVector> syzygies;          // rank = number of inputs
    int input_count = 0;
};
TrackedBasis tracked_buchberger(const std::vector<FreeVector>& inputs, const ModuleOrder& ord,
                                const BuchbergerOptions& opts = {});

/// Generators of the first syzygy module of gb's generator list.
std::vector<FreeVector> syzygies(const GroebnerBasis& gb);

/// Post-hoc audit used in test mode: every S-pair reduces to zero.
bool spair_closure_holds(const GroebnerBasis& gb);

}  // namespace gradedres

#endif
