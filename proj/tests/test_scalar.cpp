#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "weakhopf/scalar.hpp"

using namespace wha;
using wha::testing::random_scalar;

TEST_CASE("rational arithmetic basics") {
    CHECK((Scalar::rational(1, 2) + Scalar::rational(1, 3)).str() == "5/6");
    CHECK((Scalar::rational(5, 6) / Scalar::rational(5, 6)).str() == "1");
    CHECK((Scalar::rational(2, 4)).str() == "1/2");  // canonical form
    CHECK((Scalar::rational(-1, 2) + Scalar::rational(1, 2)).is_zero());
    CHECK((-Scalar::rational(3, 7)).str() == "-3/7");
}

TEST_CASE("prime field arithmetic") {
    const FieldSpec f3 = FieldSpec::prime(3);
    CHECK((Scalar::of_int(2, f3) * Scalar::of_int(2, f3)).str() == "1");
    CHECK((Scalar::of_int(2, f3) + Scalar::of_int(2, f3)).str() == "1");
    CHECK((Scalar::of_int(1, f3) / Scalar::of_int(2, f3)).str() == "2");
    CHECK(Scalar::of_int(-1, f3).str() == "2");
    CHECK_THROWS_AS(FieldSpec::prime(6), ParseError);
}

TEST_CASE("scalar errors") {
    const FieldSpec q = FieldSpec::rationals();
    const FieldSpec f5 = FieldSpec::prime(5);
    CHECK_THROWS_AS(Scalar::one(q) / Scalar::zero(q), DivisionByZeroError);
    CHECK_THROWS_AS(Scalar::one(f5) / Scalar::zero(f5), DivisionByZeroError);
    CHECK_THROWS_AS(Scalar::one(q) + Scalar::one(f5), FieldMismatchError);
    CHECK_THROWS_AS(Scalar::one(f5) * Scalar::one(FieldSpec::prime(7)), FieldMismatchError);
}

TEST_CASE("scalar serialization round-trips") {
    const FieldSpec q = FieldSpec::rationals();
    for (const char* text : {"0", "1", "-4", "5/6", "-22/7", "123456789012345678901/2"}) {
        CHECK(Scalar::parse(text, q).str() == text);
    }
    const FieldSpec f7 = FieldSpec::prime(7);
    CHECK(Scalar::parse("13", f7).str() == "6");
    CHECK(Scalar::parse("6", f7).str() == "6");
}

TEST_CASE("field axioms on randomized triples") {
    std::mt19937_64 rng(20240817);
    for (const FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(7)}) {
        for (int it = 0; it < 200; ++it) {
            Scalar a = random_scalar(rng, f), b = random_scalar(rng, f), c = random_scalar(rng, f);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a + Scalar::zero(f) == a);
            CHECK(a * Scalar::one(f) == a);
            CHECK((a - a).is_zero());
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == Scalar::one(f));
                CHECK((b / a) * a == b);
            }
        }
    }
}
