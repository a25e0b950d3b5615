#ifndef GRADEDRES_TEST_HELPERS_HPP
#define GRADEDRES_TEST_HELPERS_HPP

#include "gradedres/checks.hpp"
#include "gradedres/frobenius.hpp"
#include "gradedres/homology.hpp"
#include "gradedres/koszul.hpp"
#include "gradedres/report.hpp"
#include "gradedres/resolution.hpp"
#include "gradedres/tensor_ops.hpp"

namespace gradedres::testing {

inline GradedRingPtr poly_ring(std::vector<std::string> vars, long p = 101) {
    Field field = p == 0 ? Field::rationals() : Field::prime(p);
    return std::make_shared<GradedRing>(make_poly_ring(field, std::move(vars)));
}

inline GradedRingPtr quotient_ring(std::vector<std::string> vars,
                                   const std::vector<std::string>& ideal, long p = 101) {
    Field field = p == 0 ? Field::rationals() : Field::prime(p);
    PolyRingPtr poly = make_poly_ring(field, std::move(vars));
    std::vector<Polynomial> gens;
    for (const std::string& s : ideal) gens.push_back(parse_polynomial(poly, s));
    return std::make_shared<GradedRing>(poly, std::move(gens));
}

inline Polynomial pp(const GradedRingPtr& ring, const std::string& text) {
    return parse_polynomial(ring->poly(), text);
}

inline std::vector<Polynomial> polys(const GradedRingPtr& ring,
                                     const std::vector<std::string>& texts) {
    std::vector<Polynomial> out;
    for (const std::string& s : texts) out.push_back(pp(ring, s));
    return out;
}

inline ModulePresentation cyclic(const GradedRingPtr& ring,
                                 const std::vector<std::string>& ideal) {
    return ModulePresentation::cyclic(ring, polys(ring, ideal));
}

}  // namespace gradedres::testing

#endif
