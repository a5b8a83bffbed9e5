#pragma once

#include <cstdint>
#include <vector>

namespace ringrs {

// Distinct-irreducible factorization of M_p(x) = 1 + x + ... + x^(p-1) over
// GF(2), built from the 2-cyclotomic cosets mod p: each coset {s, 2s, 4s, ...}
// yields the minimal polynomial of beta^s for a p-th root of unity beta.
struct FactorSet {
    int p = 0;
    std::vector<uint64_t> factors;   // irreducible p_i(x), sorted by value ascending
    std::vector<int> degrees;        // deg(p_i)
    int t = 0;                       // number of factors
    int m = 0;                       // min degree; fixes the code length 2^m

    bool codec_supported() const {   // codec requires all factor degrees equal
        for (int d : degrees)
            if (d != m) return false;
        return true;
    }
};

// p must be odd, 3 <= p <= 61. Throws std::invalid_argument otherwise.
FactorSet factor_mp(int p);

// Code dimensions for a given (p, mu): n = 2^m, k = 2^m - 2^mu.
struct CodeParams {
    FactorSet fs;
    int mu = 0;
    int n = 0;
    int k = 0;

    CodeParams() = default;
    CodeParams(int p, int mu_);     // validates 0 <= mu < m and equal degrees
};

}  // namespace ringrs
