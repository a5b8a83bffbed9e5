#include "ringrs/factorize.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ringrs/gf2poly.hpp"

namespace ringrs {

namespace {

int ord2(int p) {
    int o = 1;
    int v = 2 % p;
    while (v != 1) {
        v = (2 * v) % p;
        ++o;
    }
    return o;
}

std::vector<int> prime_factors(int n) {
    std::vector<int> out;
    for (int q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        out.push_back(q);
        while (n % q == 0) n /= q;
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

FactorSet factor_mp(int p) {
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("p must be odd and >= 3, got " + std::to_string(p));
    if (p > 61)
        throw std::invalid_argument("p > 61 not supported");

    const int L = ord2(p);                       // all coset sizes divide L
    const uint64_t g = gf2::find_irreducible(L); // work in F_2^L = GF(2)[x]/(g)
    const uint64_t group = (uint64_t(1) << L) - 1;

    auto fpow = [&](uint64_t a, uint64_t e) {
        uint64_t r = 1;
        while (e) {
            if (e & 1) r = gf2::mod(gf2::mul(r, a), g);
            a = gf2::mod(gf2::mul(a, a), g);
            e >>= 1;
        }
        return r;
    };

    // deterministic search for beta of multiplicative order exactly p
    const auto pf = prime_factors(p);
    uint64_t beta = 0;
    for (uint64_t cand = 2; cand < (uint64_t(1) << L); ++cand) {
        uint64_t b = fpow(cand, group / p);
        if (b == 1) continue;
        bool full = true;
        for (int q : pf)
            if (fpow(b, p / q) == 1) { full = false; break; }
        if (full) { beta = b; break; }
    }
    if (!beta) throw std::logic_error("no p-th root of unity found");

    FactorSet fs;
    fs.p = p;
    std::vector<bool> seen(p, false);
    for (int s = 1; s < p; ++s) {
        if (seen[s]) continue;
        std::vector<int> coset;
        for (int c = s; !seen[c]; c = (2 * c) % p) {
            seen[c] = true;
            coset.push_back(c);
        }
        // minimal polynomial prod_{u in coset} (x - beta^u); coefficients land in GF(2)
        std::vector<uint64_t> poly{1};
        for (int u : coset) {
            uint64_t bu = fpow(beta, u);
            std::vector<uint64_t> next(poly.size() + 1, 0);
            for (size_t i = 0; i < poly.size(); ++i) {
                next[i + 1] ^= poly[i];
                next[i] ^= gf2::mod(gf2::mul(poly[i], bu), g);
            }
            poly = std::move(next);
        }
        uint64_t f = 0;
        for (size_t i = 0; i < poly.size(); ++i) {
            if (poly[i] > 1) throw std::logic_error("minimal polynomial not over GF(2)");
            f |= poly[i] << i;
        }
        if (!gf2::is_irreducible(f)) throw std::logic_error("factor not irreducible");
        fs.factors.push_back(f);
    }
    std::sort(fs.factors.begin(), fs.factors.end());

    uint64_t prod = 1;
    for (uint64_t f : fs.factors) {
        fs.degrees.push_back(gf2::degree(f));
        prod = gf2::mul(prod, f);
    }
    if (prod != (uint64_t(1) << p) - 1)
        throw std::logic_error("factor product != M_p");

    fs.t = static_cast<int>(fs.factors.size());
    fs.m = *std::min_element(fs.degrees.begin(), fs.degrees.end());
    return fs;
}

CodeParams::CodeParams(int p, int mu_) {
    fs = factor_mp(p);
    if (!fs.codec_supported())
        throw std::invalid_argument("codec requires all factor degrees equal; p=" +
                                    std::to_string(p) + " has unequal degrees");
    if (mu_ < 0 || mu_ >= fs.m)
        throw std::invalid_argument("mu must satisfy 0 <= mu < m=" + std::to_string(fs.m));
    mu = mu_;
    n = 1 << fs.m;
    k = n - (1 << mu);
}

}  // namespace ringrs
