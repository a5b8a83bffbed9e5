#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "ringrs/basis.hpp"
#include "ringrs/factorize.hpp"

namespace ringrs {

inline constexpr std::array<const char*, 7> kStageNames = {
    "encoding",  "syndrome", "key_equation",  "chien_search",
    "formal_derivative", "forney", "total_decoding"};

// Per-stage XOR averages for the ring codec and the two-field-codes
// baseline, plus the reduction percentages (1 - ring/field).
struct BenchReport {
    int p = 0, mu = 0, n = 0, k = 0;
    uint64_t trials = 0, errors = 0, seed = 0;
    uint32_t basis_hash_ = 0;
    uint64_t field_modulus = 0;
    std::array<double, 7> ring{};
    std::array<double, 7> field{};
    std::array<double, 7> reduction_percent{};

    std::string to_json() const;
    std::string to_csv() const;
};

// Runs `trials` seeded encode/corrupt/decode rounds on identical data and
// error streams through both codecs and averages the stage meters. The
// baseline splits each (p-1)-bit symbol into two (p-1)/2-bit field symbols
// (requires t = 2 with equal degrees). Deterministic for a fixed seed;
// trials run in parallel with per-trial meters.
BenchReport run_benchmark(const CodeParams& params, const EvalBasis& basis,
                          uint64_t trials, uint64_t errors, uint64_t seed);

}  // namespace ringrs
