#include <doctest.h>

#include "oracles.hpp"
#include "ringrs/gf2poly.hpp"
#include "ringrs/ring.hpp"
#include "ringrs/rng.hpp"

using namespace ringrs;

TEST_CASE("ring add is coefficientwise xor and charges p") {
    Ring R(7);
    uint64_t c = 0;
    // (1+x) + (x+x^2) = 1+x^2
    CHECK(R.add(0b011, 0b110, c) == 0b101);
    CHECK(c == 7);
    Rng rng(1);
    for (int i = 0; i < 50; ++i) {
        Sym a = rng.below(128);
        CHECK(R.add(a, a, c) == 0);
    }
}

TEST_CASE("phi is additive (CRT oracle via polynomial remainder)") {
    RingDomain dom(7);
    Rng rng(2);
    for (int i = 0; i < 200; ++i) {
        Sym a = rng.below(128), b = rng.below(128);
        auto pa = dom.phi(a), pb = dom.phi(b), ps = dom.phi(a ^ b);
        for (int k = 0; k < dom.t(); ++k) CHECK(ps[k] == (pa[k] ^ pb[k]));
    }
}

TEST_CASE("mul_cyclic basics") {
    Ring R(7);
    uint64_t c = 0;
    // x * x^(p-1) = 1 (circular wraparound)
    CHECK(R.mul(0b0000010, 0b1000000, c) == 1);
    Rng rng(3);
    for (int i = 0; i < 30; ++i) {
        Sym f = rng.below(128);
        CHECK(R.mul(f, 1, c) == f);
    }
    // p=7: (1+x)(1+x+x^3) = 1+x^2+x^3+x^4
    CHECK(R.mul(0b0000011, 0b0001011, c) == 0b0011101);
    CHECK(oracle::mul_mod_mp(7, 0b0000011, 0b0001011) == 0b0011101);
}

TEST_CASE("mul_cyclic == schoolbook product mod M_p, exhaustive p=7") {
    Ring R(7);
    uint64_t c = 0;
    for (Sym a = 0; a < 128; ++a)
        for (Sym b = 0; b < 128; ++b) {
            Sym got = R.canon(R.mul(a, b, c), nullptr);
            CHECK(got == oracle::mul_mod_mp(7, a, b));
        }
}

TEST_CASE("mul_cyclic == schoolbook product mod M_p, randomized p=23") {
    Ring R(23);
    Rng rng(4);
    uint64_t c = 0;
    for (int i = 0; i < 10000; ++i) {
        Sym a = rng.below(R.mp() + 1), b = rng.below(R.mp() + 1);
        CHECK(R.canon(R.mul(a, b, c), nullptr) == oracle::mul_mod_mp(23, a, b));
    }
}

TEST_CASE("meter law: mul_cyclic charges exactly p * weight(f)") {
    Ring R(23);
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        Sym f = rng.below(R.mp() + 1), g = rng.below(R.mp() + 1);
        uint64_t c = 0;
        R.mul(f, g, c);
        CHECK(c == 23u * __builtin_popcountll(f));
    }
}

TEST_CASE("canonicalize") {
    Ring R(7);
    CHECK(R.canon(R.mp(), nullptr) == 0);                 // M_p == 0
    CHECK(R.canon(Sym(1) << 6, nullptr) == 0b0111111);    // x^6 -> 1+x+...+x^5
    CHECK(oracle::reduce_mod_mp(7, Sym(1) << 6) == 0b0111111);
    Rng rng(6);
    for (int i = 0; i < 100; ++i) {
        Sym a = rng.below(128);
        Sym ca = R.canon(a, nullptr);
        CHECK(R.canon(ca, nullptr) == ca);  // idempotent
        CHECK((ca >> 6) == 0);
    }
}

TEST_CASE("preprocess: residue preserved, weight bounded, exhaustive p=7") {
    Ring R(7);
    CHECK(R.pre(0b1111110, nullptr) == 1);  // weight 6 -> complement
    CHECK(R.pre(1, nullptr) == 1);
    CHECK(R.pre(0, nullptr) == 0);
    for (Sym f = 0; f < 128; ++f) {
        Sym pf = R.pre(f, nullptr);
        CHECK(R.eq_mod_mp(pf, f));
        CHECK(__builtin_popcountll(pf) <= 3);
        CHECK(R.canon(pf, nullptr) == R.canon(f, nullptr));
    }
}

TEST_CASE("preprocess charges p only when complementing") {
    Ring R(23);
    uint64_t c = 0;
    R.pre(1, &c);
    CHECK(c == 0);
    R.pre(R.mp() ^ 1, &c);
    CHECK(c == 23);
}

TEST_CASE("congruence equality rule") {
    Ring R(7);
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        Sym a = rng.below(128), b = rng.below(128);
        bool eq = (a == b) || (a == (b ^ R.mp()));
        CHECK(R.eq_mod_mp(a, b) == eq);
        CHECK(R.eq_mod_mp(a, b) ==
              (oracle::reduce_mod_mp(7, a) == oracle::reduce_mod_mp(7, b)));
    }
}

TEST_CASE("invertibility and inverse") {
    RingDomain dom(7);
    const Ring& R = dom.ring();
    CHECK(dom.is_invertible(1));
    CHECK(dom.inverse_setup(1) == 1);
    // an embedded factor is not invertible; the error names the component
    CHECK_FALSE(dom.is_invertible(dom.factors().factors[0]));
    CHECK_THROWS_WITH_AS(dom.inverse_setup(dom.factors().factors[0]),
                         doctest::Contains("factor 0"), std::domain_error);
    CHECK_THROWS_AS(dom.inverse_setup(dom.factors().factors[1]), std::domain_error);

    Rng rng(8);
    int checked = 0;
    while (checked < 100) {
        Sym a = rng.below(128);
        if (!dom.is_invertible(a)) continue;
        ++checked;
        Sym inv = dom.inverse_setup(a);
        uint64_t c = 0;
        CHECK(R.canon(R.mul(a, inv, c), nullptr) == 1);
        // extended-Euclid oracle agrees
        CHECK(R.canon(inv, nullptr) == oracle::inverse_mod_mp(7, a));
        auto got = dom.inverse_checked(a, c);
        REQUIRE(got.has_value());
        CHECK(R.eq_mod_mp(*got, inv));
    }
    uint64_t c = 0;
    CHECK_FALSE(dom.inverse_checked(dom.factors().factors[0], c).has_value());
}

TEST_CASE("p=3 accepted, even and small p rejected") {
    CHECK_NOTHROW(RingDomain(3));
    CHECK_THROWS_AS(Ring(4), std::invalid_argument);
    CHECK_THROWS_AS(Ring(1), std::invalid_argument);
    CHECK_THROWS_AS(factor_mp(2), std::invalid_argument);
}
