#pragma once

#include <cstdint>

namespace ringrs::gf2 {

// Polynomials over GF(2) packed into uint64_t, coefficient of x^i at bit i.
// Setup-time plumbing: none of these charge the XOR meter.

inline int degree(uint64_t a) {
    return a ? 63 - __builtin_clzll(a) : -1;
}

uint64_t mul(uint64_t a, uint64_t b);            // carry-less product, degrees must fit 64 bits
uint64_t mod(uint64_t a, uint64_t f);
uint64_t divqr(uint64_t a, uint64_t f, uint64_t& rem);
uint64_t gcd(uint64_t a, uint64_t b);
uint64_t powmod(uint64_t a, uint64_t e, uint64_t f);
bool is_irreducible(uint64_t f);
uint64_t find_irreducible(int d);                // smallest-valued monic irreducible of degree d

// Extended Euclid: returns g = gcd(a,b) and u with u*a ≡ g (mod b).
uint64_t ext_gcd(uint64_t a, uint64_t b, uint64_t& u);

}  // namespace ringrs::gf2
