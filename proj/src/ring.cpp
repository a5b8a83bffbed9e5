#include "ringrs/ring.hpp"

#include <stdexcept>
#include <string>

#include "ringrs/gf2poly.hpp"

namespace ringrs {

Ring::Ring(int p) : p_(p) {
    if (p < 3 || p % 2 == 0 || p > 61)
        throw std::invalid_argument("ring modulus p must be odd, 3 <= p <= 61");
    mask_ = (Sym(1) << p) - 1;
}

RingDomain::RingDomain(int p) : ring_(p), fs_(factor_mp(p)) {
    full_mask_ = (1u << fs_.t) - 1;
    for (uint64_t f : fs_.factors) fields_.emplace_back(f);

    // theta_k = (M_p/p_k) * [(M_p/p_k)^{-1}]_{p_k}, reduced mod 1+x^p
    for (int k = 0; k < fs_.t; ++k) {
        uint64_t rem;
        uint64_t q = gf2::divqr(ring_.mp(), fs_.factors[k], rem);
        uint64_t qinv = fields_[k].inv_setup(gf2::mod(q, fs_.factors[k]));
        // q * qinv has degree < (p-1) + deg, fold exponents mod p
        unsigned __int128 prod = 0;
        uint64_t b = qinv;
        while (b) {
            int i = __builtin_ctzll(b);
            prod ^= static_cast<unsigned __int128>(q) << i;
            b &= b - 1;
        }
        Sym th = 0;
        while (prod) {
            th ^= static_cast<Sym>(prod) & ring_.mp();
            prod >>= p;
        }
        theta_.push_back(th);
    }

    mask_pre_.resize(size_t(1) << fs_.t);
    for (unsigned mask = 0; mask <= full_mask_; ++mask) {
        Sym s = 0;
        for (int k = 0; k < fs_.t; ++k)
            if (mask >> k & 1) s ^= theta_[k];
        mask_pre_[mask] = ring_.pre_setup(s);
    }
}

std::vector<Sym> RingDomain::phi(Sym a) const {
    std::vector<Sym> out(fs_.t);
    for (int k = 0; k < fs_.t; ++k) out[k] = gf2::mod(a, fs_.factors[k]);
    return out;
}

Sym RingDomain::comp_image(Sym a, int k) const { return gf2::mod(a, fs_.factors[k]); }

Sym RingDomain::phi_inv(const std::vector<Sym>& comps, uint64_t& c) const {
    Sym r = 0;
    for (int k = 0; k < fs_.t; ++k)
        if (comps[k]) r ^= ring_.mul(comps[k], theta_[k], c);
    return r;
}

Sym RingDomain::phi_inv_setup(const std::vector<Sym>& comps) const {
    uint64_t sink = 0;
    return phi_inv(comps, sink);
}

bool RingDomain::is_invertible(Sym a) const {
    for (int k = 0; k < fs_.t; ++k)
        if (comp_image(a, k) == 0) return false;
    return true;
}

Sym RingDomain::inverse_setup(Sym a) const {
    std::vector<Sym> comps(fs_.t);
    for (int k = 0; k < fs_.t; ++k) {
        Sym ck = comp_image(a, k);
        if (ck == 0)
            throw std::domain_error("element not invertible: vanishes mod factor " +
                                    std::to_string(k));
        comps[k] = fields_[k].inv_setup(ck);
    }
    return phi_inv_setup(comps);
}

std::optional<Sym> RingDomain::inverse_checked(Sym a, uint64_t& c) const {
    std::vector<Sym> comps(fs_.t);
    for (int k = 0; k < fs_.t; ++k) {
        Sym ck = fold_rem(a, k, c);
        auto inv = fields_[k].inv_checked(ck, c);
        if (!inv) return std::nullopt;
        comps[k] = *inv;
    }
    return phi_inv(comps, c);
}

Sym RingDomain::fold_rem(Sym a, int k, uint64_t& c) const {
    const uint64_t f = fs_.factors[k];
    const int df = fs_.degrees[k];
    const uint64_t w = __builtin_popcountll(f) - 1;
    while (a >> df) {
        int j = 63 - __builtin_clzll(a);
        a ^= f << (j - df);
        c += w;
    }
    return a;
}

}  // namespace ringrs
