#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ringrs/factorize.hpp"
#include "ringrs/ring.hpp"

namespace ringrs {

// The evaluation-point basis v_0..v_{m-1}: ring elements whose images are
// linearly independent over GF(2) in every component field.
struct EvalBasis {
    int p = 0;
    std::vector<Sym> v;
};

// Per-component independence of the images of v.
bool basis_valid(const RingDomain& dom, const std::vector<Sym>& v);

// The explicit basis reported for p=23 (v_0 = a^6, v_1 = a^5, ...).
EvalBasis p23_reported_basis();

// p=23 -> the reported basis; otherwise the greedy heuristic with seed 0.
EvalBasis default_basis(const CodeParams& params);

// Greedy twiddle-weight minimization: v_0..v_{mu-1} drawn at random (seeded),
// each later v_j picked from a candidate pool by ascending IFFT twiddle cost
// c_r subject to per-component independence. Deterministic for a fixed seed.
EvalBasis select_basis_heuristic(const CodeParams& params, uint64_t seed);

// Twiddle-weight cost c_r of IFFT(., mu, r): summed post-preprocessing
// weights of every twiddle multiplication in one depth-mu transform shifted
// by r. Exposed for the heuristic's tests.
uint64_t ifft_twiddle_cost(const RingDomain& dom, const std::vector<Sym>& v_low,
                           int mu, Sym r);

// Text format: one line per v_j, the exponents of alpha with nonzero
// coefficient, ascending.
EvalBasis load_basis(std::istream& in, int p);
EvalBasis load_basis_file(const std::string& path, int p);
void save_basis(std::ostream& out, const EvalBasis& b);
std::string basis_text(const EvalBasis& b);

// FNV-1a over (p, m, v values); pinned into frame headers and bench reports.
uint32_t basis_hash(const EvalBasis& b);

}  // namespace ringrs
