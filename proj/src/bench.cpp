#include "ringrs/bench.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ringrs/codec.hpp"
#include "ringrs/gf2poly.hpp"
#include "ringrs/parallel.hpp"
#include "ringrs/rng.hpp"

#include <json.hpp>

namespace ringrs {

namespace {

std::array<uint64_t, 7> stage_sums(const XorMeter& m) {
    return {m.encoding, m.syndrome,           m.key_equation, m.chien_search,
            m.formal_derivative, m.forney, m.total_decoding()};
}

}  // namespace

BenchReport run_benchmark(const CodeParams& params, const EvalBasis& basis,
                          uint64_t trials, uint64_t errors, uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    const int m = params.fs.m;
    const int mu = params.mu;
    if (mu < 1) throw std::invalid_argument("benchmark needs mu >= 1");
    if (errors > uint64_t(1) << (mu - 1))
        throw std::invalid_argument("errors must be <= 2^(mu-1)");
    if (params.fs.t != 2 || params.fs.p - 1 != 2 * m)
        throw std::invalid_argument(
            "baseline split needs t=2 with equal degrees (p = 7, 17, 23, ...)");

    const RingEngine ring = make_ring_codec(params, basis);
    const uint64_t fmod = gf2::find_irreducible(m);
    const FieldEngine field = make_field_codec(fmod, m, mu);

    const int n = params.n;
    const int k = params.k;
    const Sym half_mask = (Sym(1) << m) - 1;

    std::vector<XorMeter> ring_meters(trials), field_meters(trials);
    std::vector<uint8_t> oks(trials, 0);

    parallel_for(trials, [&](size_t tr) {
        Rng rng(splitmix64(seed ^ (0x5eedULL + tr)));
        std::vector<Sym> data(k);
        for (auto& x : data) x = rng.below(Sym(1) << (2 * m));
        // distinct positions by partial shuffle, then uniform nonzero values
        std::vector<uint32_t> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        std::vector<uint32_t> pos(errors);
        std::vector<Sym> val(errors);
        for (uint64_t e = 0; e < errors; ++e) {
            std::swap(idx[e], idx[e + rng.below(n - e)]);
            pos[e] = idx[e];
            val[e] = rng.nonzero_below(Sym(1) << (2 * m));
        }

        XorMeter& rm = ring_meters[tr];
        std::vector<Sym> cw = ring.encode(data, rm);
        std::vector<Sym> recv = cw;
        for (uint64_t e = 0; e < errors; ++e) recv[pos[e]] ^= val[e];
        DecodeResult res = ring.decode(recv, rm);
        bool ok = res.status == DecodeResult::Status::ok && res.data == data;

        XorMeter& fm = field_meters[tr];
        for (int code = 0; code < 2; ++code) {
            const int shift = code * m;
            std::vector<Sym> fdata(k);
            for (int i = 0; i < k; ++i) fdata[i] = (data[i] >> shift) & half_mask;
            std::vector<Sym> fcw = field.encode(fdata, fm);
            std::vector<Sym> frecv = fcw;
            for (uint64_t e = 0; e < errors; ++e)
                frecv[pos[e]] ^= (val[e] >> shift) & half_mask;
            DecodeResult fres = field.decode(frecv, fm);
            ok = ok && fres.status == DecodeResult::Status::ok && fres.data == fdata;
        }
        oks[tr] = ok;
    });

    for (uint64_t tr = 0; tr < trials; ++tr)
        if (!oks[tr])
            throw std::runtime_error("benchmark trial " + std::to_string(tr) +
                                     " failed to decode");

    BenchReport rep;
    rep.p = params.fs.p;
    rep.mu = mu;
    rep.n = n;
    rep.k = k;
    rep.trials = trials;
    rep.errors = errors;
    rep.seed = seed;
    rep.basis_hash_ = basis_hash(basis);
    rep.field_modulus = fmod;
    std::array<uint64_t, 7> rsum{}, fsum{};
    for (uint64_t tr = 0; tr < trials; ++tr) {
        auto rs = stage_sums(ring_meters[tr]);
        auto fs = stage_sums(field_meters[tr]);
        for (int s = 0; s < 7; ++s) {
            rsum[s] += rs[s];
            fsum[s] += fs[s];
        }
    }
    for (int s = 0; s < 7; ++s) {
        rep.ring[s] = double(rsum[s]) / double(trials);
        rep.field[s] = double(fsum[s]) / double(trials);
        rep.reduction_percent[s] =
            rep.field[s] > 0 ? 100.0 * (1.0 - rep.ring[s] / rep.field[s]) : 0.0;
    }
    return rep;
}

std::string BenchReport::to_json() const {
    nlohmann::ordered_json j;
    j["params"] = {
        {"p", p},
        {"mu", mu},
        {"n", n},
        {"k", k},
        {"trials", trials},
        {"errors", errors},
        {"seed", seed},
        {"basis_hash", basis_hash_},
        {"field_modulus", field_modulus},
        {"error_model", "uniform distinct positions, uniform nonzero symbol values"},
        {"inversion_model", "CRT componentwise exponentiation, XORs counted"},
    };
    for (int s = 0; s < 7; ++s) {
        j["ring"][kStageNames[s]] = ring[s];
        j["field"][kStageNames[s]] = field[s];
        j["reduction_percent"][kStageNames[s]] = reduction_percent[s];
    }
    return j.dump(2) + "\n";
}

std::string BenchReport::to_csv() const {
    std::ostringstream os;
    os << "stage,ring,field,reduction_percent\n";
    os.precision(17);
    for (int s = 0; s < 7; ++s)
        os << kStageNames[s] << ',' << ring[s] << ',' << field[s] << ','
           << reduction_percent[s] << '\n';
    return os.str();
}

}  // namespace ringrs
