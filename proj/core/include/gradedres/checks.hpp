#ifndef GRADEDRES_CHECKS_HPP
#define GRADEDRES_CHECKS_HPP

#include "gradedres/instance.hpp"
#include "gradedres/resolution.hpp"

namespace gradedres {

/// One executed check: verdict plus the exact quantities that justify it,
/// in a stable key order.
struct CheckRecord {
    std::string check;
    std::string target;
    std::string verdict;  // holds | fails | inapplicable
    std::string reason;   // nonempty for fails / inapplicable
    std::vector<std::pair<std::string, std::string>> data;
};

struct VerificationReport {
    std::vector<CheckRecord> records;
    bool all_clear() const;  // no record has verdict "fails"
};

struct RunOptions {
    std::optional<int> emax;  // default 3
    std::optional<int> cap;   // default nvars + 2
    bool oracle = false;      // cross-check homology lengths against slices
};

/// Total-Betti-number bound: total >= 2^d, with the full inequality chain
/// 2^d l(M) <= sum_even lH(S2F) + sum_odd lH(L2F) <= sum lH(T2F)
/// <= l(M) sum beta_i recorded term by term.
CheckRecord beh_total_check(const ModulePresentation& m, int cap, bool oracle);

/// Entrywise bound beta_i >= C(d, i).
CheckRecord binomial_check(const ModulePresentation& m, int cap);

/// chi(psi2 F) = 2^d chi(F) for the supplied complex.
CheckRecord quasi_roberts_check(const ChainComplex& f, bool oracle);

/// When total = 2^d: trivial differentials of F (x) M, cyclicity, a regular
/// sequence extracted from d_1, and the length comparison with its quotient.
CheckRecord equality_case_analyze(const ModulePresentation& m, int cap);

/// Dutta sequences of F, S2F, L2F plus the termwise 2^d identity (enforced
/// on complete-intersection rings) and positivity of each term.
CheckRecord dutta_check(const ChainComplex& f, int emax);

/// Executes the instance's checks in declared order.
VerificationReport run(const ProblemInstance& inst, const RunOptions& opts = {});

}  // namespace gradedres

#endif
