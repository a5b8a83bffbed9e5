#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ringrs/basis.hpp"
#include "ringrs/bench.hpp"
#include "ringrs/codec.hpp"
#include "ringrs/frame.hpp"
#include "ringrs/gf2poly.hpp"
#include "ringrs/rng.hpp"

using namespace ringrs;

namespace {

std::string poly_str(uint64_t f) {
    std::string s;
    for (int e = 63; e >= 0; --e) {
        if (!(f >> e & 1)) continue;
        if (!s.empty()) s += " + ";
        if (e == 0) s += "1";
        else if (e == 1) s += "x";
        else s += "x^" + std::to_string(e);
    }
    return s;
}

int cmd_params(int p) {
    FactorSet fs = factor_mp(p);
    std::cout << "p = " << p << "\n";
    std::cout << "t = " << fs.t << " irreducible factors of M_p(x):\n";
    for (int i = 0; i < fs.t; ++i)
        std::cout << "  p_" << i + 1 << "(x) = " << poly_str(fs.factors[i])
                  << "   (degree " << fs.degrees[i] << ")\n";
    std::cout << "m = " << fs.m << "\n";
    std::cout << "code length 2^m = " << (1 << fs.m) << "\n";
    std::cout << "codec support: "
              << (fs.codec_supported() ? "yes (all factor degrees equal)"
                                       : "no (factor degrees differ)")
              << "\n";
    return 0;
}

EvalBasis resolve_basis(const CodeParams& params, const std::string& basis_file) {
    if (basis_file.empty()) return default_basis(params);
    return load_basis_file(basis_file, params.fs.p);
}

int cmd_code(bool enc, int p, int mu, const std::string& basis_file,
             const std::string& in_path, const std::string& out_path) {
    CodeParams params(p, mu);
    EvalBasis basis = resolve_basis(params, basis_file);
    RingEngine eng = make_ring_codec(params, basis);
    uint32_t bhash = basis_hash(basis);

    std::ifstream in(in_path, std::ios::binary);
    if (!in) {
        std::cerr << "cannot open input: " << in_path << "\n";
        return 2;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
        std::cerr << "cannot open output: " << out_path << "\n";
        return 2;
    }
    FileResult res = enc ? encode_stream(eng, bhash, in, out)
                         : decode_stream(eng, bhash, in, out);
    std::cerr << (enc ? "encoded " : "decoded ") << res.frames << " frame(s), "
              << (enc ? res.meter.encoding : res.meter.total_decoding())
              << " XORs\n";
    if (!res.uncorrectable_frames.empty()) {
        std::cerr << "uncorrectable codewords at frame indices:";
        for (uint32_t f : res.uncorrectable_frames) std::cerr << ' ' << f;
        std::cerr << "\n";
        return 1;
    }
    return 0;
}

int cmd_bench(int p, int mu, uint64_t trials, int64_t errors, uint64_t seed,
              const std::string& basis_file, const std::string& format) {
    CodeParams params(p, mu);
    EvalBasis basis = resolve_basis(params, basis_file);
    if (errors < 0) errors = int64_t(1) << (mu - 1);  // default: full capability
    BenchReport rep = run_benchmark(params, basis, trials, uint64_t(errors), seed);
    if (format == "csv") std::cout << rep.to_csv();
    else std::cout << rep.to_json();
    return 0;
}

bool suite(const char* name, bool ok) {
    std::cout << (ok ? "pass  " : "FAIL  ") << name << "\n";
    return ok;
}

int cmd_selftest() {
    bool all = true;

    {  // CRT homomorphism, exhaustive at p=7
        RingDomain dom(7);
        const Ring& R = dom.ring();
        bool ok = true;
        uint64_t sink = 0;
        for (Sym a = 0; a < 128 && ok; ++a)
            for (Sym b = 0; b < 128 && ok; ++b) {
                Sym prod = R.mul(a, b, sink);
                auto pa = dom.phi(a), pb = dom.phi(b), pp = dom.phi(prod);
                for (int k = 0; k < dom.t(); ++k) {
                    uint64_t want = gf2::mod(gf2::mul(pa[k], pb[k]), dom.factors().factors[k]);
                    if (pp[k] != want) ok = false;
                    if (dom.comp_image(a ^ b, k) != (pa[k] ^ pb[k])) ok = false;
                }
            }
        all &= suite("crt homomorphism (p=7, exhaustive)", ok);
    }
    {  // multiplication vs canonical congruence, randomized at p=23
        RingDomain dom(23);
        const Ring& R = dom.ring();
        Rng rng(17);
        bool ok = true;
        uint64_t sink = 0;
        for (int i = 0; i < 2000 && ok; ++i) {
            Sym a = rng.below(R.mp() + 1), b = rng.below(R.mp() + 1);
            Sym prod = R.mul(a, b, sink);
            Sym prod2 = R.mul(R.pre_setup(a), b, sink);
            if (!R.eq_mod_mp(prod, prod2)) ok = false;
        }
        all &= suite("preprocessing preserves residue (p=23, randomized)", ok);
    }
    {  // transform round trip + codec round trip at p=7
        CodeParams params(7, 2);
        RingEngine eng = make_ring_codec(params);
        Rng rng(5);
        bool ok = true;
        uint64_t sink = 0;
        for (int tr = 0; tr < 50 && ok; ++tr) {
            std::vector<Sym> f(8);
            for (auto& x : f) x = rng.below(128);
            Sym beta = rng.below(128);
            auto F = eng.fft(f, 3, beta, sink);
            auto back = eng.ifft(F, 3, beta, sink);
            if (back != f) ok = false;
        }
        all &= suite("fft/ifft round trip (p=7)", ok);

        ok = true;
        for (int tr = 0; tr < 100 && ok; ++tr) {
            std::vector<Sym> data(params.k);
            for (auto& x : data) x = rng.below(64);
            XorMeter m;
            auto cw = eng.encode(data, m);
            auto recv = cw;
            uint64_t ne = rng.below(3);
            for (uint64_t e = 0; e < ne; ++e)
                recv[rng.below(8)] ^= rng.nonzero_below(64);
            auto res = eng.decode(recv, m);
            if (res.status != DecodeResult::Status::ok || res.data != data) ok = false;
        }
        all &= suite("encode/corrupt/decode (p=7, e <= 2)", ok);
    }
    {  // codec round trip at p=23 (paper basis), randomized
        CodeParams params(23, 6);
        RingEngine eng = make_ring_codec(params);
        Rng rng(7);
        bool ok = true;
        for (int tr = 0; tr < 5 && ok; ++tr) {
            std::vector<Sym> data(params.k);
            for (auto& x : data) x = rng.below(Sym(1) << 22);
            XorMeter m;
            auto cw = eng.encode(data, m);
            auto recv = cw;
            for (int e = 0; e < 32; ++e)
                recv[rng.below(2048)] ^= rng.nonzero_below(Sym(1) << 22);
            auto res = eng.decode(recv, m);
            if (res.status != DecodeResult::Status::ok || res.data != data) ok = false;
        }
        all &= suite("encode/corrupt/decode (p=23, 32 errors)", ok);
    }
    std::cout << (all ? "selftest: all suites passed\n" : "selftest: FAILURES\n");
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reed-Solomon codec over the cyclic polynomial ring F2[x]/(1+x+...+x^(p-1))"};
    app.require_subcommand(1);

    int p = 23, mu = 6;
    std::string basis_file, in_path, out_path, format = "json";
    uint64_t trials = 20, seed = 1;
    int64_t errors = -1;

    auto* sc_params = app.add_subcommand("params", "factorization and code length for p");
    sc_params->add_option("--p", p, "odd ring modulus")->required();

    auto* sc_enc = app.add_subcommand("encode", "encode a file into chunk frames");
    sc_enc->add_option("--p", p)->required();
    sc_enc->add_option("--mu", mu)->required();
    sc_enc->add_option("--basis-file", basis_file);
    sc_enc->add_option("--in", in_path)->required();
    sc_enc->add_option("--out", out_path)->required();

    auto* sc_dec = app.add_subcommand("decode", "decode and repair chunk frames");
    sc_dec->add_option("--p", p)->required();
    sc_dec->add_option("--mu", mu)->required();
    sc_dec->add_option("--basis-file", basis_file);
    sc_dec->add_option("--in", in_path)->required();
    sc_dec->add_option("--out", out_path)->required();

    auto* sc_bench = app.add_subcommand("bench", "XOR-count comparison vs the field baseline");
    sc_bench->add_option("--p", p)->required();
    sc_bench->add_option("--mu", mu)->required();
    sc_bench->add_option("--trials", trials);
    sc_bench->add_option("--errors", errors, "errors per word (default 2^(mu-1))");
    sc_bench->add_option("--seed", seed);
    sc_bench->add_option("--basis-file", basis_file);
    sc_bench->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* sc_self = app.add_subcommand("selftest", "run the built-in invariant suites");

    CLI11_PARSE(app, argc, argv);
    try {
        if (sc_params->parsed()) return cmd_params(p);
        if (sc_enc->parsed()) return cmd_code(true, p, mu, basis_file, in_path, out_path);
        if (sc_dec->parsed()) return cmd_code(false, p, mu, basis_file, in_path, out_path);
        if (sc_bench->parsed())
            return cmd_bench(p, mu, trials, errors, seed, basis_file, format);
        if (sc_self->parsed()) return cmd_selftest();
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
