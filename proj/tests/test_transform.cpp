#include <doctest.h>

#include "oracles.hpp"
#include "ringrs/codec.hpp"
#include "ringrs/rng.hpp"

using namespace ringrs;

namespace {

std::vector<Sym> rand_coeffs(Rng& rng, int tau, Sym lim) {
    std::vector<Sym> f(size_t(1) << tau);
    for (auto& x : f) x = rng.below(lim);
    return f;
}

}  // namespace

TEST_CASE("fft at tau=0 returns f0; ifft is the identity") {
    CodeParams params(7, 2);
    RingEngine eng = make_ring_codec(params);
    uint64_t c = 0;
    std::vector<Sym> f{42};
    CHECK(eng.fft(f, 0, 0, c) == f);
    CHECK(eng.ifft(f, 0, eng.omega(3), c) == f);
    CHECK(c == 0);
}

TEST_CASE("fft == naive Xbar evaluation; ifft round trip (p=7, all beta)") {
    CodeParams params(7, 2);
    EvalBasis b = default_basis(params);
    RingEngine eng = make_ring_codec(params, b);
    const RingDomain& dom = eng.algebra();
    Rng rng(21);
    uint64_t c = 0;
    for (int tau = 0; tau <= 3; ++tau) {
        for (Sym beta = 0; beta < 128; ++beta) {
            auto f = rand_coeffs(rng, tau, 128);
            auto F = eng.fft(f, tau, beta, c);
            for (int l = 0; l < (1 << tau); ++l) {
                Sym want = oracle::xbar_eval(7, b.v, f, eng.omega(l) ^ beta);
                CHECK(dom.ring().canon(F[size_t(l)], nullptr) == want);
            }
            CHECK(eng.ifft(F, tau, beta, c) == f);
        }
    }
}

TEST_CASE("fft/ifft round trip, 100 random cases at p=23") {
    CodeParams params(23, 6);
    RingEngine eng = make_ring_codec(params);
    Rng rng(22);
    uint64_t c = 0;
    for (int i = 0; i < 100; ++i) {
        int tau = 1 + static_cast<int>(rng.below(6));
        Sym beta = rng.below(Sym(1) << 23);
        auto f = rand_coeffs(rng, tau, Sym(1) << 23);
        auto F = eng.fft(f, tau, beta, c);
        CHECK(eng.ifft(F, tau, beta, c) == f);
    }
}

TEST_CASE("fft linearity") {
    CodeParams params(7, 2);
    RingEngine eng = make_ring_codec(params);
    Rng rng(23);
    uint64_t c = 0;
    for (int i = 0; i < 50; ++i) {
        auto f = rand_coeffs(rng, 3, 128);
        auto g = rand_coeffs(rng, 3, 128);
        std::vector<Sym> fg(8);
        for (int l = 0; l < 8; ++l) fg[l] = f[l] ^ g[l];
        auto Ff = eng.fft(f, 3, 5, c);
        auto Fg = eng.fft(g, 3, 5, c);
        auto Ffg = eng.fft(fg, 3, 5, c);
        for (int l = 0; l < 8; ++l) CHECK(Ffg[size_t(l)] == (Ff[size_t(l)] ^ Fg[size_t(l)]));
    }
}

TEST_CASE("all-zero input stays zero") {
    CodeParams params(7, 2);
    RingEngine eng = make_ring_codec(params);
    uint64_t c = 0;
    std::vector<Sym> z(8, 0);
    CHECK(eng.ifft(z, 3, 0, c) == z);
    CHECK(eng.fft(z, 3, 0, c) == z);
}

TEST_CASE("fft XOR charge: 2 adds per butterfly plus twiddle weights") {
    // (tau/2) * 2^tau multiplications per transform, each charging
    // p * weight(preprocessed twiddle); 2 adds of p per butterfly.
    CodeParams params(7, 2);
    EvalBasis b = default_basis(params);
    RingEngine eng = make_ring_codec(params, b);
    const RingDomain& dom = eng.algebra();
    const int p = 7, tau = 3;
    Rng rng(24);
    auto f = rand_coeffs(rng, tau, 128);
    uint64_t c = 0;
    eng.fft(f, tau, 0, c);
    // expected: butterflies = tau * 2^(tau-1)
    uint64_t butterflies = uint64_t(tau) << (tau - 1);
    uint64_t expect = butterflies * 2 * p;
    for (int L = 1; L <= tau; ++L)
        for (int bb = 0; bb < (1 << (tau - L)); ++bb) {
            Sym tw = dom.pre_setup(eng.algebra().mul_setup(
                eng.subspace_eval(L - 1, eng.omega(bb << L)),
                dom.inverse_setup(eng.subspace_eval(L - 1, b.v[size_t(L) - 1]))));
            expect += uint64_t(p) * __builtin_popcountll(tw) << (L - 1);
        }
    CHECK(c == expect);
}

TEST_CASE("componentwise congruence: ring fft mod p_i equals component field fft") {
    CodeParams params(7, 2);
    EvalBasis b = default_basis(params);
    RingEngine eng = make_ring_codec(params, b);
    const RingDomain& dom = eng.algebra();
    Rng rng(25);
    uint64_t c = 0;
    for (int k = 0; k < dom.t(); ++k) {
        // field engine over the component with the image basis
        std::vector<Sym> vk(3);
        for (int j = 0; j < 3; ++j) vk[size_t(j)] = dom.comp_image(b.v[size_t(j)], k);
        FieldAlgebra alg(dom.factors().factors[k]);
        FieldEngine feng(alg, vk, params.mu);
        for (int trial = 0; trial < 50; ++trial) {
            auto f = rand_coeffs(rng, 3, 128);
            Sym beta = rng.below(128);
            auto F = eng.fft(f, 3, beta, c);
            std::vector<Sym> fk(8);
            for (int l = 0; l < 8; ++l) fk[size_t(l)] = dom.comp_image(f[size_t(l)], k);
            auto Fk = feng.fft(fk, 3, dom.comp_image(beta, k), c);
            for (int l = 0; l < 8; ++l)
                CHECK(dom.comp_image(F[size_t(l)], k) == Fk[size_t(l)]);
        }
    }
}

TEST_CASE("extended ifft: recover a degree-2^tau polynomial exactly") {
    CodeParams params(7, 2);
    EvalBasis b = default_basis(params);
    RingEngine eng = make_ring_codec(params, b);
    Rng rng(26);
    uint64_t c = 0;
    for (int tau = 0; tau <= 2; ++tau) {
        for (int trial = 0; trial < 40; ++trial) {
            // random coordinates with an arbitrary nonzero top coordinate
            std::vector<Sym> coords(size_t(1 << tau) + 1);
            for (auto& x : coords) x = rng.below(128);
            coords.back() = rng.nonzero_below(127);
            Sym beta = rng.below(128);
            // evaluations at omega_0..omega_{2^tau} (+beta) from the oracle
            std::vector<Sym> evals(coords.size());
            for (size_t l = 0; l < evals.size(); ++l)
                evals[l] =
                    oracle::xbar_eval(7, b.v, coords, eng.omega(static_cast<int>(l)) ^ beta);
            auto got = eng.extended_ifft(evals, tau, beta, c);
            REQUIRE(got.size() == coords.size());
            for (size_t i = 0; i < coords.size(); ++i)
                CHECK(eng.algebra().eq(got[i], coords[i]));
        }
    }
}

TEST_CASE("extended ifft componentwise congruence at p=7") {
    CodeParams params(7, 2);
    EvalBasis b = default_basis(params);
    RingEngine eng = make_ring_codec(params, b);
    const RingDomain& dom = eng.algebra();
    Rng rng(27);
    uint64_t c = 0;
    for (int k = 0; k < dom.t(); ++k) {
        std::vector<Sym> vk(3);
        for (int j = 0; j < 3; ++j) vk[size_t(j)] = dom.comp_image(b.v[size_t(j)], k);
        FieldAlgebra alg(dom.factors().factors[k]);
        FieldEngine feng(alg, vk, params.mu);
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<Sym> evals(3);
            for (auto& x : evals) x = rng.below(128);
            auto got = eng.extended_ifft(evals, 1, 0, c);
            std::vector<Sym> evk(3);
            for (int i = 0; i < 3; ++i) evk[size_t(i)] = dom.comp_image(evals[size_t(i)], k);
            auto gotk = feng.extended_ifft(evk, 1, 0, c);
            for (size_t i = 0; i < got.size(); ++i)
                CHECK(dom.comp_image(got[i], k) == gotk[i]);
        }
    }
}

TEST_CASE("transform length validation") {
    CodeParams params(7, 2);
    RingEngine eng = make_ring_codec(params);
    uint64_t c = 0;
    std::vector<Sym> f(3);
    CHECK_THROWS_AS(eng.fft(f, 2, 0, c), std::invalid_argument);
    CHECK_THROWS_AS(eng.ifft(f, 3, 0, c), std::invalid_argument);
    CHECK_THROWS_AS(eng.extended_ifft(f, 3, 0, c), std::invalid_argument);
}
