#ifndef GRADEDRES_REPORT_HPP
#define GRADEDRES_REPORT_HPP

#include "gradedres/checks.hpp"

namespace gradedres {

/// Human-readable block, one section per check.
std::string render_text(const VerificationReport& report);

/// Machine-readable JSON document with stable key order; byte-identical
/// across runs for the same input.
std::string render_machine(const VerificationReport& report);

}  // namespace gradedres

#endif
