#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ringrs {

// GF(2)[x]/(f(x)) for irreducible f. Multiplication is schoolbook plus
// reduction; the meter charge is (q-1)^2 product XORs plus 2 per executed
// reduction fold (q = deg f). Addition charges q.
class FieldCtx {
public:
    explicit FieldCtx(uint64_t modulus);

    uint64_t modulus() const { return f_; }
    int deg() const { return d_; }
    uint64_t order() const { return (uint64_t(1) << d_) - 1; }

    uint64_t add(uint64_t a, uint64_t b, uint64_t& c) const {
        c += d_;
        return a ^ b;
    }

    uint64_t mul(uint64_t a, uint64_t b, uint64_t& c) const {
        uint64_t prod = 0;
        uint64_t x = a;
        while (x) {
            int i = __builtin_ctzll(x);
            prod ^= b << i;
            x &= x - 1;
        }
        c += uint64_t(d_ - 1) * (d_ - 1);
        return reduce(prod, c);
    }

    uint64_t mul_setup(uint64_t a, uint64_t b) const {
        uint64_t sink = 0;
        return mul(a, b, sink);
    }

    // a^e by square-and-multiply, charging each multiplication.
    uint64_t pow(uint64_t a, uint64_t e, uint64_t& c) const;

    // a^(2^d - 2); throws std::domain_error on zero in the setup variant.
    std::optional<uint64_t> inv_checked(uint64_t a, uint64_t& c) const;
    uint64_t inv_setup(uint64_t a) const;

private:
    uint64_t reduce(uint64_t prod, uint64_t& c) const {
        while (prod >> d_) {
            int j = 63 - __builtin_clzll(prod);
            prod ^= f_ << (j - d_);
            c += wf_ - 1;  // weight(f)-1 XORs per executed fold (trinomial: 2)
        }
        return prod;
    }

    uint64_t f_;
    int d_;
    int wf_;  // weight of the modulus
};

}  // namespace ringrs
