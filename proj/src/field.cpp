#include "ringrs/field.hpp"

#include "ringrs/gf2poly.hpp"

namespace ringrs {

FieldCtx::FieldCtx(uint64_t modulus) : f_(modulus) {
    d_ = gf2::degree(modulus);
    wf_ = __builtin_popcountll(modulus);
    if (d_ < 1 || d_ > 32 || !gf2::is_irreducible(modulus))
        throw std::invalid_argument("field modulus must be irreducible, degree 1..32");
}

uint64_t FieldCtx::pow(uint64_t a, uint64_t e, uint64_t& c) const {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a, c);
        a = mul(a, a, c);
        e >>= 1;
    }
    return r;
}

std::optional<uint64_t> FieldCtx::inv_checked(uint64_t a, uint64_t& c) const {
    if (a == 0) return std::nullopt;
    // a^(2^d - 2): d-1 squarings, d-2 multiplies
    uint64_t sq = a;
    uint64_t r = 1;
    for (int i = 1; i < d_; ++i) {
        sq = mul(sq, sq, c);
        r = (i == 1) ? sq : mul(r, sq, c);
    }
    return d_ == 1 ? a : r;
}

uint64_t FieldCtx::inv_setup(uint64_t a) const {
    uint64_t sink = 0;
    auto r = inv_checked(a, sink);
    if (!r) throw std::domain_error("inverse of zero field element");
    return *r;
}

}  // namespace ringrs
