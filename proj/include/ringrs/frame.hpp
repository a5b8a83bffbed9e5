#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ringrs/codec.hpp"
#include "ringrs/meter.hpp"

namespace ringrs {

// On-disk chunk format: a sequence of frames, one codeword each.
//
//   header (28 bytes, little-endian):
//     magic "RGRS" | u16 version=1 | u16 p | u16 mu | u16 reserved=0
//     u32 frame_index | u32 basis_hash | u32 payload_len | u32 header_crc
//   body: k data symbols, then 2^mu parity symbols; each symbol packed into
//     ceil((p-1)/8) bytes, coefficient i at bit i, unused high bits zero.
//
// payload_len counts the file bytes carried by this frame; the byte stream
// fills the data symbols' (p-1)-bit slots LSB-first, and the final frame is
// padded with zero symbols. The CRC guards the header only; payload
// integrity is the code's job.
struct FrameHeader {
    uint16_t version = 1;
    uint16_t p = 0;
    uint16_t mu = 0;
    uint32_t frame_index = 0;
    uint32_t basis_hash = 0;
    uint32_t payload_len = 0;

    static constexpr size_t kSize = 28;
    void serialize(uint8_t out[kSize]) const;
    // throws std::runtime_error on bad magic, version, or checksum
    static FrameHeader parse(const uint8_t in[kSize]);
};

uint32_t crc32(const uint8_t* data, size_t len);

size_t symbol_bytes(int p);
// frame payload capacity in bytes: floor(k * (p-1) / 8)
size_t frame_capacity(const RingEngine& eng);

std::vector<uint8_t> pack_symbols(const std::vector<Sym>& syms, int p);
std::vector<Sym> unpack_symbols(const uint8_t* bytes, size_t count, int p);

struct FileResult {
    uint64_t frames = 0;
    std::vector<uint32_t> uncorrectable_frames;
    XorMeter meter;  // summed over frames
};

// Frames are processed by a worker pool (RINGRS_THREADS caps it); output
// order is by frame index regardless of scheduling.
FileResult encode_stream(const RingEngine& eng, uint32_t bhash, std::istream& in,
                         std::ostream& out);
FileResult decode_stream(const RingEngine& eng, uint32_t bhash, std::istream& in,
                         std::ostream& out);

}  // namespace ringrs
