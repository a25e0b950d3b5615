#include <doctest.h>

#include "helpers.hpp"

using namespace gradedres;
using namespace gradedres::testing;

namespace {

// reference comparators, written independently of the library's
int ref_degrevlex(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.nvars() - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
}

int ref_lex(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nvars(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

}  // namespace

TEST_CASE("term orders agree with reference comparators on all small monomials") {
    std::vector<Monomial> all;
    for (int d = 0; d <= 4; ++d)
        for (const Monomial& m : monomials_of_degree(3, d, TermOrder::degrevlex))
            all.push_back(m);
    for (const Monomial& a : all)
        for (const Monomial& b : all) {
            CHECK(compare(a, b, TermOrder::degrevlex) == ref_degrevlex(a, b));
            CHECK(compare(a, b, TermOrder::lex) == ref_lex(a, b));
        }
}

TEST_CASE("monomials_of_degree lists each degree completely, strictly descending") {
    for (int d = 1; d <= 5; ++d) {
        auto ms = monomials_of_degree(3, d, TermOrder::degrevlex);
        // C(d+2, 2) monomials of degree d in 3 variables
        CHECK(static_cast<int>(ms.size()) == (d + 2) * (d + 1) / 2);
        for (std::size_t i = 0; i + 1 < ms.size(); ++i)
            CHECK(compare(ms[i], ms[i + 1], TermOrder::degrevlex) == 1);
    }
}

TEST_CASE("polynomial arithmetic identities") {
    GradedRingPtr R = poly_ring({"x", "y"});
    Polynomial f = pp(R, "x^2 + 2*x*y");
    Polynomial g = pp(R, "y^2 - x*y");
    Polynomial h = pp(R, "x + y");
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f + g) * h == f * h + g * h);
    CHECK(f - f == Polynomial(R->poly()));
    CHECK(pp(R, "x + y") * pp(R, "x + y") == pp(R, "x^2 + 2*x*y + y^2"));
    CHECK(f.scaled(mpq_class(3)) == f + f + f);
    CHECK(-f == f.scaled(mpq_class(-1)));
}

TEST_CASE("coefficients reduce modulo the characteristic") {
    GradedRingPtr R = poly_ring({"x", "y"}, 3);
    Polynomial h = pp(R, "x + y");
    CHECK(h * h * h == pp(R, "x^3 + y^3"));
    CHECK(pp(R, "3*x") == Polynomial(R->poly()));
}

TEST_CASE("parse and to_string round trip") {
    GradedRingPtr R = poly_ring({"x", "y", "z"});
    for (const char* s : {"x^2*y - z^3", "x + y + z", "5", "1/1*x", "x*y*z"}) {
        Polynomial f = pp(R, s);
        CHECK(pp(R, f.to_string()) == f);
    }
    GradedRingPtr Q = poly_ring({"x"}, 0);
    Polynomial f = pp(Q, "1/2*x^2 - 2/3*x");
    CHECK(pp(Q, f.to_string()) == f);
}

TEST_CASE("parser reports position and variable mismatches") {
    GradedRingPtr R = poly_ring({"x", "y"});
    CHECK_THROWS_WITH_AS(pp(R, "x + @"), doctest::Contains("column"), algebra_error);
    CHECK_THROWS_WITH_AS(pp(R, "x + z"), doctest::Contains("variable"), algebra_error);
}

TEST_CASE("homogeneity bookkeeping") {
    GradedRingPtr R = poly_ring({"x", "y"});
    CHECK(pp(R, "x^2 + x*y").homogeneous_degree() == 2);
    CHECK_FALSE(pp(R, "x^2 + y").homogeneous_degree().has_value());
    CHECK(pp(R, "x^3*y").degree() == 4);
    CHECK(pp(R, "7").is_constant());
    CHECK(pp(R, "x + 7").constant_part() == 7);
}
