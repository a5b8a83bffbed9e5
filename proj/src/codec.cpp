#include "ringrs/codec.hpp"

#include <stdexcept>

namespace ringrs {

RingEngine make_ring_codec(const CodeParams& params, const EvalBasis& basis) {
    if (basis.p != params.fs.p)
        throw std::invalid_argument("basis p does not match code p");
    if (static_cast<int>(basis.v.size()) != params.fs.m)
        throw std::invalid_argument("basis must have m elements");
    RingDomain dom(params.fs.p);
    if (!basis_valid(dom, basis.v))
        throw std::invalid_argument("basis images not independent in every component");
    return RingEngine(std::move(dom), basis.v, params.mu);
}

RingEngine make_ring_codec(const CodeParams& params) {
    return make_ring_codec(params, default_basis(params));
}

FieldEngine make_field_codec(uint64_t modulus, int m, int mu) {
    FieldAlgebra alg(modulus);
    if (m < 1 || m > alg.sym_bits())
        throw std::invalid_argument("m must be in [1, deg(modulus)]");
    std::vector<Sym> v(m);
    for (int j = 0; j < m; ++j) v[j] = Sym(1) << j;
    return FieldEngine(std::move(alg), std::move(v), mu);
}

}  // namespace ringrs
