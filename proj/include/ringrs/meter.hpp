#pragma once

#include <cstdint>

namespace ringrs {

// Per-pipeline XOR accounting. Counts logical single-coefficient XORs, not
// word operations. One meter per encode/decode invocation; never shared
// across threads.
struct XorMeter {
    uint64_t encoding = 0;
    uint64_t syndrome = 0;
    uint64_t key_equation = 0;
    uint64_t chien_search = 0;
    uint64_t formal_derivative = 0;
    uint64_t forney = 0;

    uint64_t total_decoding() const {
        return syndrome + key_equation + chien_search + formal_derivative + forney;
    }

    XorMeter& operator+=(const XorMeter& o) {
        encoding += o.encoding;
        syndrome += o.syndrome;
        key_equation += o.key_equation;
        chien_search += o.chien_search;
        formal_derivative += o.formal_derivative;
        forney += o.forney;
        return *this;
    }
};

}  // namespace ringrs
