#include "ringrs/basis.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ringrs {

bool basis_valid(const RingDomain& dom, const std::vector<Sym>& v) {
    for (int k = 0; k < dom.t(); ++k) {
        std::set<uint64_t> span{0};
        for (Sym x : v) {
            uint64_t im = dom.comp_image(x, k);
            if (span.count(im)) return false;
            std::set<uint64_t> next = span;
            for (uint64_t s : span) next.insert(s ^ im);
            span = std::move(next);
        }
    }
    return true;
}

EvalBasis p23_reported_basis() {
    auto bits = [](std::initializer_list<int> es) {
        Sym s = 0;
        for (int e : es) s |= Sym(1) << e;
        return s;
    };
    EvalBasis b;
    b.p = 23;
    b.v = {bits({6}), bits({5}), bits({4}), bits({3}), bits({7}), bits({2}),
           bits({3, 8}), bits({1}), bits({0, 1, 3, 8, 9}),
           bits({1, 2, 3, 7, 9, 10}), bits({3, 7, 9})};
    return b;
}

namespace {

// s_tau(x) evaluation from the partial normalizer list sv[0..tau-1] via the
// linearized recurrence s_t = s_{t-1}^2 + s_{t-1}(v_{t-1}) s_{t-1}.
Sym s_eval_partial(const Ring& ring, const std::vector<Sym>& sv, int tau, Sym beta) {
    Sym s = beta;
    uint64_t sink = 0;
    for (int t = 1; t <= tau; ++t)
        s = ring.mul(s, s, sink) ^ ring.mul(sv[t - 1], s, sink);
    return s;
}

std::vector<Sym> low_omegas(const Ring& ring, const std::vector<Sym>& v_low) {
    const int mu = static_cast<int>(v_low.size());
    std::vector<Sym> om(size_t(1) << mu, 0);
    for (size_t l = 0; l < om.size(); ++l)
        for (int j = 0; j < mu; ++j)
            if (l >> j & 1) om[l] ^= v_low[j];
    return om;
}

}  // namespace

uint64_t ifft_twiddle_cost(const RingDomain& dom, const std::vector<Sym>& v_low,
                           int mu, Sym r) {
    const Ring& ring = dom.ring();
    std::vector<Sym> sv(mu);
    for (int tau = 0; tau < mu; ++tau)
        sv[tau] = s_eval_partial(ring, sv, tau, v_low[tau]);
    auto om = low_omegas(ring, v_low);
    uint64_t cost = 0;
    for (int L = 1; L <= mu; ++L) {
        Sym svinv = dom.inverse_setup(sv[L - 1]);
        for (int b = 0; b < (1 << (mu - L)); ++b) {
            Sym tw = ring.mul_setup(
                s_eval_partial(ring, sv, L - 1, Sym(r ^ om[size_t(b) << L])), svinv);
            cost += uint64_t(__builtin_popcountll(ring.pre_setup(tw))) << (L - 1);
        }
    }
    return cost;
}

EvalBasis select_basis_heuristic(const CodeParams& params, uint64_t seed) {
    RingDomain dom(params.fs.p);
    const Ring& ring = dom.ring();
    const int m = params.fs.m;
    const int mu = std::max(params.mu, 1);
    const int t = dom.t();
    std::mt19937_64 rng(seed);
    const Sym lim = Sym(1) << (params.fs.p - 1);

    auto indep = [&](const std::vector<Sym>& chosen, Sym cand) {
        std::vector<Sym> v = chosen;
        v.push_back(cand);
        return basis_valid(dom, v);
    };

    // seeded draw of v_0..v_{mu-1}
    std::vector<Sym> v;
    while (static_cast<int>(v.size()) < std::min(mu, m)) {
        Sym cand = rng() % lim;
        if (cand && indep(v, cand)) v.push_back(cand);
    }
    if (m == static_cast<int>(v.size())) {
        EvalBasis b{params.fs.p, v};
        return b;
    }

    // candidate pool: all elements whose CRT components are monomials or
    // binomials, plus seeded random draws
    std::set<Sym> pool;
    std::vector<std::vector<Sym>> comp_cands(t);
    for (int k = 0; k < t; ++k) {
        int d = params.fs.degrees[k];
        for (int i = 0; i < d; ++i) {
            comp_cands[k].push_back(Sym(1) << i);
            for (int j = i + 1; j < d; ++j)
                comp_cands[k].push_back((Sym(1) << i) | (Sym(1) << j));
        }
    }
    std::vector<size_t> idx(t, 0);
    for (;;) {
        std::vector<Sym> comps(t);
        for (int k = 0; k < t; ++k) comps[k] = comp_cands[k][idx[k]];
        pool.insert(dom.phi_inv_setup(comps));
        int k = 0;
        while (k < t && ++idx[k] == comp_cands[k].size()) idx[k++] = 0;
        if (k == t) break;
    }
    for (int i = 0; i < 10000; ++i) {
        Sym cand = rng() % lim;
        if (cand) pool.insert(cand);
    }

    // cost each candidate once (c_r depends only on v_0..v_{mu-1}), then
    // greedy-pick by (cost, value)
    std::vector<Sym> v_low(v.begin(), v.begin() + mu);
    std::vector<std::pair<uint64_t, Sym>> ranked;
    ranked.reserve(pool.size());
    for (Sym cand : pool)
        ranked.emplace_back(ifft_twiddle_cost(dom, v_low, mu, cand), cand);
    std::sort(ranked.begin(), ranked.end());

    while (static_cast<int>(v.size()) < m) {
        bool found = false;
        for (const auto& [cost, cand] : ranked) {
            if (indep(v, cand)) {
                v.push_back(cand);
                found = true;
                break;
            }
        }
        if (!found) {
            // pool exhausted of independent extensions; extend with randoms
            Sym cand = rng() % lim;
            if (cand && indep(v, cand)) v.push_back(cand);
        }
    }
    return EvalBasis{params.fs.p, v};
}

EvalBasis default_basis(const CodeParams& params) {
    if (params.fs.p == 23) return p23_reported_basis();
    return select_basis_heuristic(params, 0);
}

EvalBasis load_basis(std::istream& in, int p) {
    EvalBasis b;
    b.p = p;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        Sym x = 0;
        int e;
        int last = -1;
        while (ls >> e) {
            if (e < 0 || e >= p - 1)
                throw std::runtime_error("basis exponent out of range [0, p-2]");
            if (e <= last) throw std::runtime_error("basis exponents must ascend");
            last = e;
            x |= Sym(1) << e;
        }
        if (!x) throw std::runtime_error("empty basis line");
        b.v.push_back(x);
    }
    return b;
}

EvalBasis load_basis_file(const std::string& path, int p) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open basis file: " + path);
    return load_basis(in, p);
}

void save_basis(std::ostream& out, const EvalBasis& b) {
    for (Sym x : b.v) {
        bool first = true;
        for (int e = 0; e < 64; ++e) {
            if (x >> e & 1) {
                if (!first) out << ' ';
                out << e;
                first = false;
            }
        }
        out << '\n';
    }
}

std::string basis_text(const EvalBasis& b) {
    std::ostringstream os;
    save_basis(os, b);
    return os.str();
}

uint32_t basis_hash(const EvalBasis& b) {
    uint32_t h = 2166136261u;
    auto feed = [&](uint64_t x, int bytes) {
        for (int i = 0; i < bytes; ++i) {
            h ^= static_cast<uint8_t>(x >> (8 * i));
            h *= 16777619u;
        }
    };
    feed(static_cast<uint64_t>(b.p), 2);
    feed(b.v.size(), 2);
    for (Sym x : b.v) feed(x, 8);
    return h;
}

}  // namespace ringrs
