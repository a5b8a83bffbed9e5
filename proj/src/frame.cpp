#include "ringrs/frame.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <istream>
#include <iterator>
#include <ostream>
#include <stdexcept>

#include "ringrs/parallel.hpp"

namespace ringrs {

namespace {

constexpr char kMagic[4] = {'R', 'G', 'R', 'S'};

void put16(uint8_t* p, uint16_t v) {
    p[0] = v & 0xff;
    p[1] = v >> 8;
}
void put32(uint8_t* p, uint32_t v) {
    for (int i = 0; i < 4; ++i) p[i] = (v >> (8 * i)) & 0xff;
}
uint16_t get16(const uint8_t* p) { return uint16_t(p[0]) | uint16_t(p[1]) << 8; }
uint32_t get32(const uint8_t* p) {
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= uint32_t(p[i]) << (8 * i);
    return v;
}

}  // namespace

uint32_t crc32(const uint8_t* data, size_t len) {
    static const auto table = [] {
        std::array<uint32_t, 256> t{};
        for (uint32_t i = 0; i < 256; ++i) {
            uint32_t c = i;
            for (int k = 0; k < 8; ++k) c = (c >> 1) ^ ((c & 1) ? 0xEDB88320u : 0);
            t[i] = c;
        }
        return t;
    }();
    uint32_t c = 0xFFFFFFFFu;
    for (size_t i = 0; i < len; ++i) c = table[(c ^ data[i]) & 0xff] ^ (c >> 8);
    return c ^ 0xFFFFFFFFu;
}

void FrameHeader::serialize(uint8_t out[kSize]) const {
    std::memcpy(out, kMagic, 4);
    put16(out + 4, version);
    put16(out + 6, p);
    put16(out + 8, mu);
    put16(out + 10, 0);
    put32(out + 12, frame_index);
    put32(out + 16, basis_hash);
    put32(out + 20, payload_len);
    put32(out + 24, crc32(out, 24));
}

FrameHeader FrameHeader::parse(const uint8_t in[kSize]) {
    if (std::memcmp(in, kMagic, 4) != 0)
        throw std::runtime_error("bad frame magic");
    FrameHeader h;
    h.version = get16(in + 4);
    if (h.version != 1) throw std::runtime_error("unsupported frame version");
    if (get32(in + 24) != crc32(in, 24))
        throw std::runtime_error("frame header checksum mismatch");
    h.p = get16(in + 6);
    h.mu = get16(in + 8);
    h.frame_index = get32(in + 12);
    h.basis_hash = get32(in + 16);
    h.payload_len = get32(in + 20);
    return h;
}

size_t symbol_bytes(int p) { return size_t(p - 1 + 7) / 8; }

size_t frame_capacity(const RingEngine& eng) {
    return size_t(eng.k()) * (eng.algebra().sym_bits()) / 8;
}

std::vector<uint8_t> pack_symbols(const std::vector<Sym>& syms, int p) {
    const size_t sb = symbol_bytes(p);
    std::vector<uint8_t> out(syms.size() * sb, 0);
    for (size_t i = 0; i < syms.size(); ++i)
        for (size_t b = 0; b < sb; ++b)
            out[i * sb + b] = (syms[i] >> (8 * b)) & 0xff;
    return out;
}

std::vector<Sym> unpack_symbols(const uint8_t* bytes, size_t count, int p) {
    const size_t sb = symbol_bytes(p);
    const Sym mask = (Sym(1) << (p - 1)) - 1;
    std::vector<Sym> out(count, 0);
    for (size_t i = 0; i < count; ++i) {
        Sym s = 0;
        for (size_t b = 0; b < sb; ++b) s |= Sym(bytes[i * sb + b]) << (8 * b);
        if (s & ~mask) throw std::runtime_error("symbol has nonzero padding bits");
        out[i] = s;
    }
    return out;
}

namespace {

// payload bits fill the data symbols' (p-1)-bit slots LSB-first
std::vector<Sym> bytes_to_symbols(const uint8_t* data, size_t len, int k, int bits) {
    std::vector<Sym> syms(k, 0);
    size_t bitpos = 0;
    const size_t total = len * 8;
    while (bitpos < total) {
        size_t sym = bitpos / bits;
        size_t off = bitpos % bits;
        size_t take = std::min<size_t>(bits - off, 8 - (bitpos % 8));
        take = std::min(take, total - bitpos);
        uint8_t byte = data[bitpos / 8];
        Sym chunk = (byte >> (bitpos % 8)) & ((1u << take) - 1);
        syms[sym] |= chunk << off;
        bitpos += take;
    }
    return syms;
}

void symbols_to_bytes(const std::vector<Sym>& syms, int bits, uint8_t* out, size_t len) {
    std::memset(out, 0, len);
    const size_t total = len * 8;
    size_t bitpos = 0;
    while (bitpos < total) {
        size_t sym = bitpos / bits;
        size_t off = bitpos % bits;
        size_t take = std::min<size_t>(bits - off, 8 - (bitpos % 8));
        take = std::min(take, total - bitpos);
        uint8_t chunk = (syms[sym] >> off) & ((1u << take) - 1);
        out[bitpos / 8] |= chunk << (bitpos % 8);
        bitpos += take;
    }
}

}  // namespace

FileResult encode_stream(const RingEngine& eng, uint32_t bhash, std::istream& in,
                         std::ostream& out) {
    std::vector<uint8_t> input((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    const size_t cap = frame_capacity(eng);
    const int p = eng.algebra().p();
    const int bits = eng.algebra().sym_bits();
    const size_t nframes = input.empty() ? 0 : (input.size() + cap - 1) / cap;

    std::vector<std::vector<uint8_t>> chunks(nframes);
    std::vector<XorMeter> meters(nframes);
    parallel_for(nframes, [&](size_t f) {
        const size_t off = f * cap;
        const size_t len = std::min(cap, input.size() - off);
        std::vector<Sym> data = bytes_to_symbols(input.data() + off, len, eng.k(), bits);
        std::vector<Sym> cw = eng.encode(data, meters[f]);

        FrameHeader h;
        h.p = uint16_t(p);
        h.mu = uint16_t(eng.mu());
        h.frame_index = uint32_t(f);
        h.basis_hash = bhash;
        h.payload_len = uint32_t(len);
        std::vector<uint8_t>& buf = chunks[f];
        buf.resize(FrameHeader::kSize);
        h.serialize(buf.data());
        std::vector<Sym> datasyms(cw.begin() + (1 << eng.mu()), cw.end());
        std::vector<Sym> parsyms(cw.begin(), cw.begin() + (1 << eng.mu()));
        auto db = pack_symbols(datasyms, p);
        auto pb = pack_symbols(parsyms, p);
        buf.insert(buf.end(), db.begin(), db.end());
        buf.insert(buf.end(), pb.begin(), pb.end());
    });

    FileResult res;
    res.frames = nframes;
    for (size_t f = 0; f < nframes; ++f) {
        out.write(reinterpret_cast<const char*>(chunks[f].data()),
                  static_cast<std::streamsize>(chunks[f].size()));
        res.meter += meters[f];
    }
    return res;
}

FileResult decode_stream(const RingEngine& eng, uint32_t bhash, std::istream& in,
                         std::ostream& out) {
    std::vector<uint8_t> input((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    const int p = eng.algebra().p();
    const int bits = eng.algebra().sym_bits();
    const size_t sb = symbol_bytes(p);
    const size_t body = (size_t(eng.k()) + (size_t(1) << eng.mu())) * sb;
    const size_t frame_size = FrameHeader::kSize + body;
    if (input.size() % frame_size != 0)
        throw std::runtime_error("encoded stream length is not a whole number of frames");
    const size_t nframes = input.size() / frame_size;

    std::vector<FrameHeader> headers(nframes);
    for (size_t f = 0; f < nframes; ++f) {
        headers[f] = FrameHeader::parse(input.data() + f * frame_size);
        const FrameHeader& h = headers[f];
        if (h.p != eng.algebra().p() || h.mu != eng.mu())
            throw std::runtime_error("frame parameters do not match codec");
        if (h.basis_hash != bhash)
            throw std::runtime_error("frame basis hash does not match loaded basis");
        if (h.frame_index != f)
            throw std::runtime_error("frame index out of order");
        if (h.payload_len > frame_capacity(eng))
            throw std::runtime_error("frame payload length exceeds capacity");
    }

    std::vector<std::vector<uint8_t>> outputs(nframes);
    std::vector<XorMeter> meters(nframes);
    std::vector<uint8_t> bad(nframes, 0);
    parallel_for(nframes, [&](size_t f) {
        const uint8_t* base = input.data() + f * frame_size + FrameHeader::kSize;
        std::vector<Sym> datasyms = unpack_symbols(base, eng.k(), p);
        std::vector<Sym> parsyms =
            unpack_symbols(base + size_t(eng.k()) * sb, size_t(1) << eng.mu(), p);
        std::vector<Sym> recv(parsyms);
        recv.insert(recv.end(), datasyms.begin(), datasyms.end());
        DecodeResult res = eng.decode(recv, meters[f]);
        if (res.status != DecodeResult::Status::ok) {
            bad[f] = 1;
            return;
        }
        outputs[f].resize(headers[f].payload_len);
        symbols_to_bytes(res.data, bits, outputs[f].data(), outputs[f].size());
    });

    FileResult res;
    res.frames = nframes;
    for (size_t f = 0; f < nframes; ++f) {
        res.meter += meters[f];
        if (bad[f]) {
            res.uncorrectable_frames.push_back(uint32_t(f));
            continue;
        }
        out.write(reinterpret_cast<const char*>(outputs[f].data()),
                  static_cast<std::streamsize>(outputs[f].size()));
    }
    return res;
}

}  // namespace ringrs
