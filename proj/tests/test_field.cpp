#include <vector>

#include "doctest.h"
#include "gag/field.hpp"

using namespace gag;

TEST_CASE("field spec parsing") {
    CHECK(FieldSpec::parse("2")->q() == 2);
    CHECK(FieldSpec::parse("3")->q() == 3);
    CHECK(FieldSpec::parse("2^3")->q() == 8);
    CHECK(FieldSpec::parse("3^2")->q() == 9);
    // Bare prime powers factor automatically.
    const FieldSpec* f4 = FieldSpec::parse("4");
    CHECK(f4->p() == 2);
    CHECK(f4->t() == 2);
    CHECK(f4 == FieldSpec::parse("2^2"));  // interned
    CHECK(FieldSpec::parse("27")->p() == 3);
    CHECK(FieldSpec::parse("2")->str() == "2");
    CHECK(FieldSpec::parse("2^2")->str() == "2^2");
    CHECK_THROWS_AS(FieldSpec::parse("6"), parse_error);   // not a prime power
    CHECK_THROWS_AS(FieldSpec::parse("1"), parse_error);
    CHECK_THROWS_AS(FieldSpec::parse("0"), parse_error);
    CHECK_THROWS_AS(FieldSpec::parse("2^"), parse_error);
}

TEST_CASE("custom irreducible moduli") {
    // x^2 + 1 is irreducible over F_3 but splits over F_2.
    const FieldSpec* f = FieldSpec::get(3, 2, {1, 0, 1});
    FieldElement a = FieldElement::generator(f);
    CHECK(a * a == -FieldElement::one(f));
    CHECK_THROWS_AS(FieldSpec::get(2, 2, {1, 0, 1}), semantic_error);
    CHECK_THROWS_AS(FieldSpec::get(2, 2, {1, 1, 2}), semantic_error);  // non-monic (leading 2 = 0)
}

TEST_CASE("arithmetic in small extensions") {
    const FieldSpec* f4 = FieldSpec::get(2, 2);
    FieldElement a = FieldElement::generator(f4);
    FieldElement one = FieldElement::one(f4);
    CHECK(a * a == a + one);  // modulus a^2 + a + 1
    CHECK(a * (a + one) == one);
    CHECK(a.pow(3) == one);
    CHECK(a.inverse() == a + one);

    const FieldSpec* f5 = FieldSpec::get(5, 1);
    FieldElement three = FieldElement::from_int(f5, 3);
    FieldElement two = FieldElement::from_int(f5, 2);
    CHECK(three / two == FieldElement::from_int(f5, 4));
    CHECK_THROWS_AS(three / FieldElement::zero(f5), semantic_error);
}

TEST_CASE("enumeration order and indexing") {
    const FieldSpec* f4 = FieldSpec::get(2, 2);
    std::vector<std::string> names;
    for (const FieldElement& x : enumerate_field(f4)) names.push_back(x.str());
    CHECK(names == std::vector<std::string>{"0", "1", "a", "a+1"});
    for (const FieldSpec* f : {FieldSpec::get(2, 3), FieldSpec::get(3, 2), FieldSpec::get(5, 1)}) {
        auto all = enumerate_field(f);
        CHECK(all.size() == f->q());
        for (uint64_t i = 0; i < all.size(); ++i) {
            CHECK(all[i].index() == i);
            CHECK(FieldElement::from_index(f, i) == all[i]);
        }
    }
}

TEST_CASE("field axioms hold on every triple") {
    for (const FieldSpec* f : {FieldSpec::get(2, 1), FieldSpec::get(3, 1), FieldSpec::get(2, 2),
                               FieldSpec::get(5, 1), FieldSpec::get(2, 3), FieldSpec::get(3, 2)}) {
        auto all = enumerate_field(f);
        FieldElement zero = FieldElement::zero(f), one = FieldElement::one(f);
        for (const auto& x : all) {
            CHECK(x + zero == x);
            CHECK(x * one == x);
            CHECK(x + (-x) == zero);
            CHECK(x.pow(f->q()) == x);  // field equation
            if (!x.is_zero()) CHECK(x * x.inverse() == one);
            for (const auto& y : all) {
                CHECK(x + y == y + x);
                CHECK(x * y == y * x);
                // Frobenius is additive.
                CHECK((x + y).pow(f->p()) == x.pow(f->p()) + y.pow(f->p()));
                for (const auto& z : all) {
                    CHECK((x + y) + z == x + (y + z));
                    CHECK((x * y) * z == x * (y * z));
                    CHECK(x * (y + z) == x * y + x * z);
                }
            }
        }
    }
}

TEST_CASE("trace lands in the prime subfield") {
    const FieldSpec* f4 = FieldSpec::get(2, 2);
    FieldElement a = FieldElement::generator(f4);
    CHECK(a.trace_int() == 1);  // a + a^2 = a + (a+1) = 1
    CHECK(FieldElement::one(f4).trace_int() == 0);
    CHECK(FieldElement::zero(f4).trace_int() == 0);

    for (const FieldSpec* f : {FieldSpec::get(2, 2), FieldSpec::get(3, 2), FieldSpec::get(2, 3)}) {
        for (const auto& x : enumerate_field(f)) {
            // tr(x) = sum of Frobenius orbits, Frobenius-invariant, additive.
            CHECK(x.trace() == x.pow(f->p()).trace());
            CHECK(x.trace_int() < f->p());
            for (const auto& y : enumerate_field(f))
                CHECK((x + y).trace() == x.trace() + y.trace());
        }
        // The trace form is nondegenerate: some element has nonzero trace.
        bool hit = false;
        for (const auto& x : enumerate_field(f)) hit = hit || x.trace_int() != 0;
        CHECK(hit);
    }
}

TEST_CASE("element print/parse round-trip") {
    for (const FieldSpec* f : {FieldSpec::get(2, 1), FieldSpec::get(5, 1), FieldSpec::get(2, 3),
                               FieldSpec::get(3, 2), FieldSpec::get(2, 2)}) {
        for (const auto& x : enumerate_field(f)) CHECK(FieldElement::parse(f, x.str()) == x);
    }
    const FieldSpec* f9 = FieldSpec::get(3, 2);
    CHECK(FieldElement::parse(f9, "2*a+1").str() == "2*a+1");
    CHECK(FieldElement::parse(f9, "(a+1)*(a+2)") == FieldElement::parse(f9, "a^2+2"));
    CHECK(FieldElement::parse(f9, "-1") == -FieldElement::one(f9));
    CHECK_THROWS_AS(FieldElement::parse(f9, "b+1"), parse_error);
    CHECK_THROWS_AS(FieldElement::parse(FieldSpec::get(2, 1), "a"), semantic_error);
}
