#include "quadcross/laurent.hpp"

#include <doctest.h>

#include <random>

using quadcross::BigInt;
using quadcross::LaurentPoly;

namespace {

LaurentPoly mono(int e, long c) { return LaurentPoly::monomial(e, BigInt(c)); }

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 6), expo(-8, 8), coeff(-5, 5);
    LaurentPoly p;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) p += mono(expo(rng), coeff(rng));
    return p;
}

} // namespace

TEST_CASE("addition merges and cancels terms") {
    CHECK((mono(2, 1) + mono(2, -1)).is_zero());
    CHECK(mono(2, 1) + mono(-2, 1) + mono(2, 1) == mono(2, 2) + mono(-2, 1));
    CHECK((LaurentPoly::loop_factor() + mono(2, 1) + mono(-2, 1)).is_zero());
}

TEST_CASE("multiplication expands products") {
    const LaurentPoly loop = LaurentPoly::loop_factor();
    CHECK(loop * loop == mono(4, 1) + mono(0, 2) + mono(-4, 1));
    const LaurentPoly p = mono(3, 2) + mono(-1, 5);
    CHECK(p * LaurentPoly::one() == p);
    CHECK(loop.pow(3) == mono(6, -1) + mono(2, -3) + mono(-2, -3) + mono(-6, -1));
}

TEST_CASE("span") {
    CHECK((mono(6, 1) + mono(-2, 1)).span() == 8);
    CHECK(LaurentPoly::one().span() == 0);
    CHECK(LaurentPoly::zero().span() == 0);
}

TEST_CASE("variable inversion") {
    CHECK(mono(6, 1).invert_variable() == mono(-6, 1));
    CHECK((mono(2, 1) + mono(-4, 2)).invert_variable() == mono(-2, 1) + mono(4, 2));
    CHECK(LaurentPoly::loop_factor().invert_variable() == LaurentPoly::loop_factor());
}

TEST_CASE("rendering and parsing round-trip") {
    const LaurentPoly p = mono(6, -1) + mono(2, -3) + mono(-2, -3) + mono(-6, -1);
    CHECK(p.to_string() == "-A^6 - 3A^2 - 3A^-2 - A^-6");
    CHECK(LaurentPoly::parse(p.to_string()) == p);
    CHECK(LaurentPoly::parse("0").is_zero());
    CHECK(LaurentPoly::parse("1") == LaurentPoly::one());
    CHECK(LaurentPoly::parse("A") == mono(1, 1));
    CHECK(LaurentPoly::parse("-A^-3 + 2") == mono(-3, -1) + mono(0, 2));
    CHECK(LaurentPoly::zero().to_string() == "0");
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(LaurentPoly::parse(a.to_string()) == a);
        CHECK(a.invert_variable().invert_variable() == a);
        CHECK(a.invert_variable().span() == a.span());
        if (!a.is_zero() && !b.is_zero()) CHECK((a * b).span() == a.span() + b.span());
    }
}

TEST_CASE("big coefficients stay exact") {
    // (1 + A)^64 has a central coefficient far beyond 2^53.
    LaurentPoly p = LaurentPoly::one() + mono(1, 1);
    p = p.pow(64);
    CHECK(p.coefficient(32) == BigInt("1832624140942590534"));
    CHECK(p.span() == 64);
}
