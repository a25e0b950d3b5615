#ifndef GRADEDRES_INSTANCE_HPP
#define GRADEDRES_INSTANCE_HPP

#include <map>
#include <optional>

#include "gradedres/chain_complex.hpp"

namespace gradedres {

/// One `check <kind> on <name> [emax=k] [cap=k]` line.
struct CheckRequest {
    std::string kind;  // beh | binomial | psi2 | equality | dutta
    std::string target;
    std::optional<int> emax;
    std::optional<int> cap;
    int line = 0;
};

/// A parsed instance file: one ring, named modules, named complexes
/// (Koszul complexes are built eagerly; resolutions are recorded by module
/// name and materialized at run time, when the cap is known).
struct ProblemInstance {
    GradedRingPtr ring;
    std::map<std::string, ModulePresentation> modules;
    std::map<std::string, ChainComplex> koszul_complexes;
    std::map<std::string, std::string> resolve_complexes;  // complex -> module
    std::vector<CheckRequest> checks;  // defaults filled in when none given
};

/// Parses the instance grammar:
///   ring <name> = F(<p>)[<vars>]   or   ring <name> = Q[<vars>]
///   quotient (<poly>, ...)
///   module <name> = coker [[<poly>, ...], ...]
///                   [twists target [..] source [..]]
///   complex <name> = koszul(<poly>, ...)   or   resolve(<module>)
///   check <beh|binomial|psi2|equality|dutta> on <name> [emax=<k>] [cap=<k>]
/// `#` starts a comment. Errors carry line and column positions.
ProblemInstance parse_instance(const std::string& text);

}  // namespace gradedres

#endif
