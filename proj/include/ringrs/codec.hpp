#pragma once

#include <optional>

#include "ringrs/basis.hpp"
#include "ringrs/engine.hpp"
#include "ringrs/factorize.hpp"
#include "ringrs/field.hpp"
#include "ringrs/ring.hpp"

namespace ringrs {

// The t=1 algebra: a plain binary extension field. No preprocessing trick,
// no CRT structure; comparison baseline for the ring codec.
class FieldAlgebra {
public:
    explicit FieldAlgebra(uint64_t modulus) : fld_(modulus) {}

    const FieldCtx& field() const { return fld_; }
    int t() const { return 1; }
    unsigned full_mask() const { return 1; }
    int sym_bits() const { return fld_.deg(); }

    Sym add(Sym a, Sym b, uint64_t& c) const { return fld_.add(a, b, c); }
    Sym mul(Sym a, Sym b, uint64_t& c) const { return fld_.mul(a, b, c); }
    Sym mul_setup(Sym a, Sym b) const { return fld_.mul_setup(a, b); }
    Sym pre(Sym a, uint64_t*) const { return a; }
    Sym pre_setup(Sym a) const { return a; }
    Sym canon(Sym a, uint64_t*) const { return a; }
    bool eq(Sym a, Sym b) const { return a == b; }
    bool is_zero(Sym a) const { return a == 0; }
    bool comp_zero(Sym a, int, uint64_t&) const { return a == 0; }
    Sym comp_image(Sym a, int) const { return a; }
    std::optional<Sym> inverse_checked(Sym a, uint64_t& c) const {
        return fld_.inv_checked(a, c);
    }
    Sym inverse_setup(Sym a) const { return fld_.inv_setup(a); }
    Sym mask_mul(unsigned mask, Sym x, uint64_t&) const { return mask ? x : 0; }
    Sym mask_const(unsigned mask) const { return mask ? 1 : 0; }

private:
    FieldCtx fld_;
};

using RingEngine = Engine<RingDomain>;
using FieldEngine = Engine<FieldAlgebra>;

// Ring codec over R_p with an explicit evaluation basis. Throws if the basis
// is not per-component independent.
RingEngine make_ring_codec(const CodeParams& params, const EvalBasis& basis);
RingEngine make_ring_codec(const CodeParams& params);  // default basis

// Baseline field codec over GF(2)[x]/(modulus) with the monomial basis
// 1, a, a^2, ..., a^(m-1).
FieldEngine make_field_codec(uint64_t modulus, int m, int mu);

// The paper's baseline modulus 1 + x^2 + x^11.
inline constexpr uint64_t kBaselineModulus = (uint64_t(1) << 11) | 0b101;

}  // namespace ringrs
