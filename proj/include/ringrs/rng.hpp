#pragma once

#include <cstdint>
#include <random>

namespace ringrs {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// mt19937_64 with explicit unbiased sampling; std distributions are not
// pinned across implementations, these are.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    uint64_t below(uint64_t n) {
        const uint64_t lim = (-n) % n;  // reject the biased low range
        for (;;) {
            uint64_t r = eng_();
            if (r >= lim) return r % n;
        }
    }

    uint64_t nonzero_below(uint64_t n) { return 1 + below(n - 1); }

private:
    std::mt19937_64 eng_;
};

}  // namespace ringrs
