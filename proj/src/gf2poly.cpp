#include "ringrs/gf2poly.hpp"

#include <stdexcept>

namespace ringrs::gf2 {

uint64_t mul(uint64_t a, uint64_t b) {
    unsigned __int128 r = 0;
    unsigned __int128 aa = a;
    while (b) {
        if (b & 1) r ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    if (r >> 64) throw std::overflow_error("gf2::mul overflow");
    return static_cast<uint64_t>(r);
}

uint64_t mod(uint64_t a, uint64_t f) {
    int df = degree(f);
    while (a && degree(a) >= df) a ^= f << (degree(a) - df);
    return a;
}

uint64_t divqr(uint64_t a, uint64_t f, uint64_t& rem) {
    uint64_t q = 0;
    int df = degree(f);
    while (a && degree(a) >= df) {
        int s = degree(a) - df;
        q |= uint64_t(1) << s;
        a ^= f << s;
    }
    rem = a;
    return q;
}

uint64_t gcd(uint64_t a, uint64_t b) {
    while (b) {
        uint64_t r = mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t f) {
    uint64_t r = 1;
    a = mod(a, f);
    while (e) {
        if (e & 1) r = mod(mul(r, a), f);
        a = mod(mul(a, a), f);
        e >>= 1;
    }
    return r;
}

bool is_irreducible(uint64_t f) {
    int d = degree(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    if (!(f & 1)) return false;  // divisible by x
    // x^(2^d) == x mod f, and gcd(x^(2^(d/q)) - x, f) == 1 for every prime q | d
    uint64_t x2 = 2;
    for (int i = 0; i < d; ++i) x2 = mod(mul(x2, x2), f);
    if (x2 != 2) return false;
    int n = d;
    int primes[8];
    int np = 0;
    for (int q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        primes[np++] = q;
        while (n % q == 0) n /= q;
    }
    if (n > 1) primes[np++] = n;
    for (int i = 0; i < np; ++i) {
        uint64_t y = 2;
        for (int j = 0; j < d / primes[i]; ++j) y = mod(mul(y, y), f);
        if (gcd(y ^ 2ULL, f) != 1) return false;
    }
    return true;
}

uint64_t find_irreducible(int d) {
    if (d == 1) return 0b10;  // x
    for (uint64_t low = 1; low < (uint64_t(1) << d); low += 2) {
        uint64_t f = (uint64_t(1) << d) | low;
        if (is_irreducible(f)) return f;
    }
    throw std::logic_error("no irreducible found");
}

uint64_t ext_gcd(uint64_t a, uint64_t b, uint64_t& u) {
    // invariant: r0 = u0*a (mod b0), r1 = u1*a (mod b0)
    uint64_t r0 = a, r1 = b, u0 = 1, u1 = 0;
    while (r1) {
        uint64_t rem;
        uint64_t q = divqr(r0, r1, rem);
        uint64_t un = u0 ^ mul(q, u1);
        r0 = r1;
        r1 = rem;
        u0 = u1;
        u1 = un;
    }
    u = u0;
    return r0;
}

}  // namespace ringrs::gf2
