#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ringrs/factorize.hpp"
#include "ringrs/field.hpp"

namespace ringrs {

using Sym = uint64_t;

// Arithmetic in GF(2)[x]/(1+x^p): length-p coefficient vectors packed into a
// word. All encode/decode computation is carried here; reduction mod
// M_p(x) = 1+x+...+x^(p-1) happens only at pipeline outputs and equality
// tests (a and b are congruent mod M_p iff equal or bitwise complements).
class Ring {
public:
    explicit Ring(int p);

    int p() const { return p_; }
    Sym mp() const { return mask_; }  // the all-ones vector M_p

    Sym add(Sym a, Sym b, uint64_t& c) const {
        c += p_;
        return a ^ b;
    }

    // Algorithm-style multiplication by circular shifts: one length-p XOR per
    // nonzero coefficient of f. Charge is exactly p * weight(f).
    Sym mul(Sym f, Sym g, uint64_t& c) const {
        c += uint64_t(p_) * __builtin_popcountll(f);
        Sym h = 0;
        while (f) {
            int i = __builtin_ctzll(f);
            h ^= rotl(g, i);
            f &= f - 1;
        }
        return h;
    }

    Sym mul_setup(Sym f, Sym g) const {
        uint64_t sink = 0;
        return mul(f, g, sink);
    }

    // Complement when that lowers Hamming weight; result has weight <= p/2
    // and the same residue mod M_p. Charged only when it complements.
    Sym pre(Sym a, uint64_t* c) const {
        if (2 * __builtin_popcountll(a) > p_) {
            if (c) *c += p_;
            return a ^ mask_;
        }
        return a;
    }
    Sym pre_setup(Sym a) const { return pre(a, nullptr); }

    // Canonical residue mod M_p: top coefficient zero.
    Sym canon(Sym a, uint64_t* c) const {
        if (a >> (p_ - 1) & 1) {
            if (c) *c += p_;
            return a ^ mask_;
        }
        return a;
    }

    bool eq_mod_mp(Sym a, Sym b) const { return a == b || a == (b ^ mask_); }
    bool is_zero(Sym a) const { return a == 0 || a == mask_; }

    Sym rotl(Sym g, int i) const {
        return i ? ((g << i) | (g >> (p_ - i))) & mask_ : g;
    }

private:
    int p_;
    Sym mask_;
};

// Ring plus its CRT structure: factorization of M_p, the isomorphism phi and
// its inverse, component fields, invertibility. This is the codec's "t
// fields glued together" view of R_p.
class RingDomain {
public:
    explicit RingDomain(int p);

    const Ring& ring() const { return ring_; }
    const FactorSet& factors() const { return fs_; }
    const FieldCtx& component(int k) const { return fields_[k]; }
    int t() const { return fs_.t; }
    int p() const { return ring_.p(); }
    int sym_bits() const { return ring_.p() - 1; }
    Sym theta(int k) const { return theta_[k]; }  // === 1 mod p_k, === 0 mod p_j

    // phi: component i is a mod p_i(x). Uncharged.
    std::vector<Sym> phi(Sym a) const;
    Sym comp_image(Sym a, int k) const;

    // phi_inv = sum r_k * theta_k; t ring multiplications, iterating the
    // (weight <= deg p_k) component values.
    Sym phi_inv(const std::vector<Sym>& comps, uint64_t& c) const;
    Sym phi_inv_setup(const std::vector<Sym>& comps) const;

    bool is_invertible(Sym a) const;
    // CRT componentwise field inversion by exponentiation, then phi_inv.
    // Throws std::domain_error naming the vanishing component.
    Sym inverse_setup(Sym a) const;
    std::optional<Sym> inverse_checked(Sym a, uint64_t& c) const;

    // a mod p_k == 0, charging the executed remainder folds.
    bool comp_zero(Sym a, int k, uint64_t& c) const {
        return fold_rem(a, k, c) == 0;
    }
    Sym fold_rem(Sym a, int k, uint64_t& c) const;

    // (sum of theta_k over mask bits) * x, the mask constant preprocessed at
    // construction. mask == 0 and mask == full are identities (no charge).
    Sym mask_mul(unsigned mask, Sym x, uint64_t& c) const {
        if (mask == 0) return 0;
        if (mask == full_mask_) return x;
        return ring_.mul(mask_pre_[mask], x, c);
    }
    Sym mask_const(unsigned mask) const { return mask_pre_[mask]; }
    unsigned full_mask() const { return full_mask_; }

    // --- engine algebra surface ---
    Sym add(Sym a, Sym b, uint64_t& c) const { return ring_.add(a, b, c); }
    Sym mul(Sym f, Sym g, uint64_t& c) const { return ring_.mul(f, g, c); }
    Sym mul_setup(Sym f, Sym g) const { return ring_.mul_setup(f, g); }
    Sym pre(Sym a, uint64_t* c) const { return ring_.pre(a, c); }
    Sym pre_setup(Sym a) const { return ring_.pre_setup(a); }
    Sym canon(Sym a, uint64_t* c) const { return ring_.canon(a, c); }
    bool eq(Sym a, Sym b) const { return ring_.eq_mod_mp(a, b); }
    bool is_zero(Sym a) const { return ring_.is_zero(a); }

private:
    Ring ring_;
    FactorSet fs_;
    std::vector<FieldCtx> fields_;
    std::vector<Sym> theta_;      // CRT constants (M_p/p_k)*[(M_p/p_k)^-1]_{p_k}
    std::vector<Sym> mask_pre_;   // preprocessed subset sums of theta
    unsigned full_mask_;
};

}  // namespace ringrs
