#include <doctest.h>

#include <random>

#include "gradedres/field.hpp"

using namespace gradedres;

TEST_CASE("prime field arithmetic satisfies the field axioms on samples") {
    Field f = Field::prime(101);
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> dist(-500, 500);
    for (int trial = 0; trial < 200; ++trial) {
        mpq_class a = f.from_int(dist(rng));
        mpq_class b = f.from_int(dist(rng));
        mpq_class c = f.from_int(dist(rng));
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        CHECK(f.add(a, f.neg(a)) == 0);
        CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
        if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    }
}

TEST_CASE("canonical representatives live in [0, p)") {
    Field f = Field::prime(7);
    for (long n = -30; n <= 30; ++n) {
        mpq_class r = f.from_int(n);
        CHECK(r >= 0);
        CHECK(r < 7);
        CHECK(f.sub(r, f.from_int(n)) == 0);
    }
    // denominators clear by modular inversion: 1/2 = 4 mod 7
    CHECK(f.canonical(mpq_class(1, 2)) == 4);
    CHECK(f.canonical(mpq_class(3, 5)) == 2);
}

TEST_CASE("rational field is exact") {
    Field q = Field::rationals();
    mpq_class third(1, 3);
    CHECK(q.add(third, third) == mpq_class(2, 3));
    CHECK(q.mul(third, q.inv(third)) == 1);
    CHECK(q.div(mpq_class(7, 2), mpq_class(7, 2)) == 1);
    CHECK(q.characteristic() == 0);
}

TEST_CASE("division by zero is rejected") {
    CHECK_THROWS_AS(Field::prime(101).inv(mpq_class(0)), algebra_error);
    CHECK_THROWS_AS(Field::rationals().inv(mpq_class(0)), algebra_error);
    CHECK_THROWS_AS(Field::prime(6), algebra_error);
}
