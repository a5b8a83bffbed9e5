#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ringrs/meter.hpp"

namespace ringrs {

using Sym = uint64_t;

struct SyndromeSet {
    std::vector<Sym> xbar;    // coordinate vector of u(x) w.r.t. the Xbar basis
    std::vector<Sym> values;  // u(omega_0) .. u(omega_{2^mu - 1})
};

struct KeyEquationResult {
    std::vector<Sym> lambda;  // Xbar coordinates, length 2^(mu-1) + 1
    std::vector<Sym> z;
    std::vector<int> ranks;   // min(r1, r2) per component
};

struct ErrorLocations {
    std::vector<std::vector<uint32_t>> sets;  // per component, sorted positions
    bool correctable = true;
};

struct DecodeResult {
    enum class Status { ok, uncorrectable };
    Status status = Status::ok;
    std::vector<Sym> data;
    ErrorLocations locations;
};

// The shared encode/decode machinery over a coefficient algebra A. Two
// instantiations: RingDomain (the cyclic-ring codec, t factors) and a
// field adapter (the t=1 baseline). The algebra supplies arithmetic with
// XOR accounting; this engine supplies Lemma-3 encoding, the syndrome,
// the frequency-domain key-equation solver, Chien search, the formal
// derivative, and Forney's formula.
//
// Everything in the tables is data-independent and precomputed
// unchargeed; runtime multiplications always iterate a preprocessed factor.
template <class A>
class Engine {
public:
    Engine(A algebra, std::vector<Sym> basis, int mu)
        : alg(std::move(algebra)), v(std::move(basis)), mu_(mu) {
        m_ = static_cast<int>(v.size());
        if (m_ < 1 || m_ > 30) throw std::invalid_argument("basis size out of range");
        if (mu_ < 0 || mu_ >= m_) throw std::invalid_argument("mu must be in [0, m)");
        n_ = 1 << m_;
        k_ = n_ - (1 << mu_);
        build_tables();
    }

    const A& algebra() const { return alg; }
    int m() const { return m_; }
    int mu() const { return mu_; }
    int n() const { return n_; }
    int k() const { return k_; }

    Sym omega(int l) const {
        if (l < 0 || l >= n_) throw std::invalid_argument("omega index out of range");
        return omega_[l];
    }

    // s_tau(beta) by the linearized recurrence; setup-time, uncharged.
    Sym subspace_eval(int tau, Sym beta) const {
        if (tau < 0 || tau > m_) throw std::invalid_argument("tau out of range");
        Sym s = beta;
        for (int t = 1; t <= tau; ++t)
            s = alg.mul_setup(s, s) ^ alg.mul_setup(sv_[t - 1], s);
        return s;
    }

    const std::vector<Sym>& p_constants() const { return p_l_; }
    Sym p_top_inverse() const { return pinv_top_raw_; }

    // ---- transforms ----

    // Evaluations of sum f_l Xbar_l at omega_l + beta for l < 2^tau.
    std::vector<Sym> fft(std::span<const Sym> f, int tau, Sym beta, uint64_t& c) const {
        check_len(f.size(), tau);
        std::vector<Sym> a(f.begin(), f.end());
        auto tw = twiddles_for(tau, beta);
        fft_core(a, tau, [&](int L, int b) { return tw[L - 1][b]; }, c);
        return a;
    }

    std::vector<Sym> ifft(std::span<const Sym> F, int tau, Sym beta, uint64_t& c) const {
        check_len(F.size(), tau);
        std::vector<Sym> a(F.begin(), F.end());
        auto tw = twiddles_for(tau, beta);
        ifft_core(a, tau, [&](int L, int b) { return tw[L - 1][b]; }, c);
        return a;
    }

    // 2^tau + 1 evaluations at omega_0..omega_{2^tau} (+ beta) of a
    // polynomial of degree 2^tau; returns all 2^tau + 1 Xbar coordinates.
    std::vector<Sym> extended_ifft(std::span<const Sym> F, int tau, Sym beta,
                                   uint64_t& c) const {
        if (F.size() != (size_t(1) << tau) + 1)
            throw std::invalid_argument("extended_ifft needs 2^tau + 1 evaluations");
        if (tau >= m_) throw std::invalid_argument("extended_ifft needs tau < m");
        std::vector<Sym> G = ifft(F.subspan(0, size_t(1) << tau), tau, beta, c);
        // evaluate the recovered low part at the extra point omega_{2^tau}+beta
        Sym pt = omega_[size_t(1) << tau] ^ beta;
        Sym H = 0;
        for (size_t j = 0; j < G.size(); ++j)
            if (G[j]) H = alg.add(H, alg.mul(xbar_at_setup(j, pt), G[j], c), c);
        Sym ctop = alg.add(F[size_t(1) << tau], H, c);
        // K = s_tau(beta)/s_tau(v_tau) shifts coordinate 0 when beta != 0
        Sym K = alg.mul_setup(subspace_eval(tau, beta), sv_inv_[tau]);
        if (!alg.is_zero(K))
            G[0] = alg.add(G[0], alg.mul(alg.pre_setup(K), ctop, c), c);
        G.push_back(ctop);
        return G;
    }

    // ---- pipeline stages ----

    // Systematic encode: data lands at positions 2^mu..2^m-1; the 2^mu
    // parity symbols are FFT(sum_j IFFT(F_j, mu, omega_{j*2^mu}), mu, 0).
    std::vector<Sym> encode(std::span<const Sym> data, XorMeter& meter) const {
        if (static_cast<int>(data.size()) != k_)
            throw std::invalid_argument("encode expects k data symbols");
        for (Sym x : data)
            if (x >> alg.sym_bits())
                throw std::invalid_argument("data symbol not canonical");
        uint64_t& c = meter.encoding;
        const int blk = 1 << mu_;
        std::vector<Sym> acc(blk, 0);
        std::vector<Sym> buf(blk);
        for (int j = 1; j < (n_ >> mu_); ++j) {
            std::copy_n(data.begin() + size_t(j - 1) * blk, blk, buf.begin());
            ifft_core(buf, mu_, [&](int L, int b) {
                return twiddle_[L][(size_t(j) << (mu_ - L)) + b];
            }, c);
            for (int i = 0; i < blk; ++i) acc[i] = alg.add(acc[i], buf[i], c);
        }
        fft_core(acc, mu_, [&](int L, int b) { return twiddle_[L][b]; }, c);
        std::vector<Sym> cw(n_);
        for (int i = 0; i < blk; ++i) cw[i] = alg.canon(acc[i], &c);
        std::copy(data.begin(), data.end(), cw.begin() + blk);
        return cw;
    }

    SyndromeSet syndrome(std::span<const Sym> recv, XorMeter& meter) const {
        check_word(recv.size());
        uint64_t& c = meter.syndrome;
        const int blk = 1 << mu_;
        std::vector<Sym> acc(blk, 0);
        std::vector<Sym> buf(blk);
        for (int i = 0; i < (n_ >> mu_); ++i) {
            std::copy_n(recv.begin() + size_t(i) * blk, blk, buf.begin());
            ifft_core(buf, mu_, [&](int L, int b) {
                return twiddle_[L][(size_t(i) << (mu_ - L)) + b];
            }, c);
            for (int l = 0; l < blk; ++l) acc[l] = alg.add(acc[l], buf[l], c);
        }
        SyndromeSet s;
        s.xbar.resize(blk);
        for (int l = 0; l < blk; ++l) s.xbar[l] = alg.mul(pinv_top_, acc[l], c);
        s.values = s.xbar;
        fft_core(s.values, mu_, [&](int L, int b) { return twiddle_[L][b]; }, c);
        return s;
    }

    bool syndrome_clear(const SyndromeSet& s) const {
        for (Sym x : s.values)
            if (!alg.is_zero(x)) return false;
        return true;
    }

    // Frequency-domain key-equation solver. Maintains two candidate pairs in
    // evaluation form; per-component flags choose which pair absorbs the
    // (x - omega_{j-1}) factor. Rows are pivot-normalized whenever g_j is
    // invertible. Returns lambda and z as Xbar coordinate vectors of length
    // 2^(mu-1) + 1 via the extended IFFT.
    KeyEquationResult solve_key_equation(std::span<const Sym> uvals, XorMeter& meter) const {
        if (mu_ < 1) throw std::invalid_argument("key equation needs mu >= 1");
        if (uvals.size() != size_t(1) << mu_)
            throw std::invalid_argument("expected 2^mu syndrome values");
        uint64_t& c = meter.key_equation;
        const int t = alg.t();
        const int n2 = 1 << mu_;
        const int npts = (1 << (mu_ - 1)) + 1;

        KeyEquationResult out;
        bool zero = true;
        for (Sym x : uvals)
            if (!alg.is_zero(x)) { zero = false; break; }
        if (zero) {
            out.lambda.assign(npts, 0);
            out.lambda[0] = 1;
            out.z.assign(npts, 0);
            out.ranks.assign(t, 0);
            return out;
        }

        std::vector<Sym> d(uvals.begin(), uvals.end());  // d[i] = disc at omega_i
        std::vector<Sym> g(n2, 1);
        std::vector<Sym> W(npts, 1), V(npts, 0);
        std::vector<int> r1(t, 0), r2(t, 1);
        std::vector<uint8_t> flags(t);

        for (int j = 1; j <= n2; ++j) {
            const Sym dj = d[j - 1];
            const Sym gj = g[j - 1];
            unsigned m1 = 0, m2 = 0, mN = 0;
            bool g_invertible = true;
            for (int k = 0; k < t; ++k) {
                bool dz = alg.comp_zero(dj, k, c);
                bool gz = alg.comp_zero(gj, k, c);
                if (gz) g_invertible = false;
                uint8_t fl;
                if (dz && gz) fl = 0;
                else if (gz) fl = 1;
                else if (dz) fl = 2;
                else fl = (r1[k] < r2[k]) ? 1 : 2;
                flags[k] = fl;
                if (fl == 1) {
                    int nr1 = r2[k];
                    r2[k] = r1[k] + 2;
                    r1[k] = nr1;
                } else if (fl == 2) {
                    r2[k] += 2;
                }
                if (fl == 0) mN |= 1u << k;
                else if (fl == 1) m1 |= 1u << k;
                else m2 |= 1u << k;
            }
            if (mN == alg.full_mask()) continue;

            auto step = [&](auto&& row) {
                for (int i = j; i < n2; ++i) row(i, d[i], g[i]);
                for (int i = 0; i < npts; ++i) row(i, W[i], V[i]);
            };

            std::optional<Sym> ginv =
                g_invertible ? alg.inverse_checked(gj, c) : std::nullopt;
            if (ginv) {
                // normalized row 1: x += (d_j / g_j) y
                Sym cp = alg.pre(alg.mul(alg.pre(dj, &c), *ginv, c), &c);
                if (m1 == alg.full_mask()) {
                    step([&](int i, Sym& x, Sym& y) {
                        Sym nx = alg.add(x, alg.mul(cp, y, c), c);
                        y = alg.mul(delta_pre_[i][j - 1], x, c);
                        x = nx;
                    });
                } else if (m2 == alg.full_mask()) {
                    step([&](int i, Sym& x, Sym& y) {
                        x = alg.add(x, alg.mul(cp, y, c), c);
                        y = alg.mul(delta_pre_[i][j - 1], y, c);
                    });
                } else {
                    step([&](int i, Sym& x, Sym& y) {
                        Sym sel = alg.add(alg.mask_mul(m1, x, c), alg.mask_mul(m2, y, c), c);
                        Sym nx = alg.add(x, alg.mul(cp, y, c), c);
                        y = alg.mul(delta_pre_[i][j - 1], sel, c);
                        x = nx;
                    });
                }
            } else {
                // literal masked rows; no-op components keep (x, y)
                Sym p11, p12;
                if (mN == 0) {
                    p11 = alg.pre(gj, &c);
                    p12 = alg.pre(dj, &c);
                } else {
                    unsigned act = alg.full_mask() & ~mN;
                    p11 = alg.pre(alg.add(alg.mask_mul(act, gj, c), alg.mask_const(mN), c), &c);
                    p12 = alg.pre(alg.mask_mul(act, dj, c), &c);
                }
                step([&](int i, Sym& x, Sym& y) {
                    Sym nx = alg.add(alg.mul(p11, x, c), alg.mul(p12, y, c), c);
                    Sym sel = alg.add(alg.mask_mul(m1, x, c), alg.mask_mul(m2, y, c), c);
                    Sym ny = alg.mul(delta_pre_[i][j - 1], sel, c);
                    if (mN) ny = alg.add(ny, alg.mask_mul(mN, y, c), c);
                    x = nx;
                    y = ny;
                });
            }
        }

        // per-component selection of the minimal-rank pair, then back to
        // coordinates through the extended IFFT at depth mu-1
        unsigned useV = 0;
        for (int k = 0; k < t; ++k)
            if (r1[k] > r2[k]) useV |= 1u << k;
        std::vector<Sym> lam_pts(npts), z_pts(npts);
        for (int i = 0; i < npts; ++i) {
            lam_pts[i] = alg.add(alg.mask_mul(alg.full_mask() & ~useV, W[i], c),
                                 alg.mask_mul(useV, V[i], c), c);
            z_pts[i] = alg.mul(alg.pre(lam_pts[i], &c), uvals[i], c);
        }
        out.lambda = ext_ifft0(lam_pts, c);
        out.z = ext_ifft0(z_pts, c);
        out.ranks.resize(t);
        for (int k = 0; k < t; ++k) out.ranks[k] = std::min(r1[k], r2[k]);
        return out;
    }

    // Evaluate lambda everywhere block by block; omega_j joins E^(k) iff
    // lambda(omega_j) vanishes mod p_k. Flags uncorrectable when a
    // component's locator degree exceeds its root count.
    ErrorLocations chien_search(std::span<const Sym> lambda, XorMeter& meter) const {
        uint64_t& c = meter.chien_search;
        const int blk = 1 << mu_;
        if (lambda.size() > size_t(blk))
            throw std::invalid_argument("lambda has more than 2^mu coordinates");
        std::vector<Sym> pad(lambda.begin(), lambda.end());
        pad.resize(blk, 0);
        const int t = alg.t();
        ErrorLocations loc;
        loc.sets.resize(t);
        std::vector<Sym> buf(blk);
        for (int bi = 0; bi < (n_ >> mu_); ++bi) {
            buf = pad;
            fft_core(buf, mu_, [&](int L, int b) {
                return twiddle_[L][(size_t(bi) << (mu_ - L)) + b];
            }, c);
            for (int jj = 0; jj < blk; ++jj)
                for (int k = 0; k < t; ++k)
                    if (alg.comp_zero(buf[jj], k, c))
                        loc.sets[k].push_back((uint32_t(bi) << mu_) + jj);
        }
        for (int k = 0; k < t; ++k) {
            int deg = -1;
            for (size_t l = 0; l < lambda.size(); ++l)
                if (!alg.comp_zero(lambda[l], k, c)) deg = static_cast<int>(l);
            if (deg > static_cast<int>(loc.sets[k].size())) {
                loc.correctable = false;
                return loc;
            }
        }
        return loc;
    }

    // Xbar-coordinate rule for lambda': coordinate j collects
    // D_tau * lambda_{j + 2^tau} over the zero bits tau of j, with
    // D_tau = s_tau'(x) / s_tau(v_tau) = p_{2^tau - 1} / s_tau(v_tau).
    std::vector<Sym> formal_derivative(std::span<const Sym> lambda, XorMeter& meter) const {
        uint64_t& c = meter.formal_derivative;
        std::vector<Sym> out(lambda.size(), 0);
        for (size_t j = 0; j < lambda.size(); ++j) {
            Sym acc = 0;
            for (int tau = 0; tau < m_; ++tau) {
                if (j >> tau & 1) continue;
                size_t idx = j + (size_t(1) << tau);
                if (idx < lambda.size() && lambda[idx])
                    acc = alg.add(acc, alg.mul(deriv_c_[tau], lambda[idx], c), c);
            }
            out[j] = acc;
        }
        return out;
    }

    DecodeResult decode(std::span<const Sym> recv, XorMeter& meter) const {
        check_word(recv.size());
        DecodeResult res;
        res.locations.sets.resize(alg.t());
        const int blk = 1 << mu_;
        if (mu_ == 0) {  // no correction possible; pass data through
            res.data.assign(recv.begin() + 1, recv.end());
            for (Sym& x : res.data) x = alg.canon(x, &meter.forney);
            return res;
        }
        SyndromeSet syn = syndrome(recv, meter);
        if (syndrome_clear(syn)) {
            res.data.assign(recv.begin() + blk, recv.end());
            for (Sym& x : res.data) x = alg.canon(x, &meter.forney);
            return res;
        }
        KeyEquationResult ke = solve_key_equation(syn.values, meter);
        ErrorLocations loc = chien_search(ke.lambda, meter);
        res.locations = loc;
        if (!loc.correctable) {
            res.status = DecodeResult::Status::uncorrectable;
            return res;
        }
        std::vector<Sym> lamd = formal_derivative(ke.lambda, meter);

        uint64_t& c = meter.forney;
        const int t = alg.t();
        std::vector<size_t> cursor(t, 0);
        res.data.resize(k_);
        for (int pos = blk; pos < n_; ++pos) {
            unsigned membership = 0;
            for (int k = 0; k < t; ++k) {
                auto& s = loc.sets[k];
                while (cursor[k] < s.size() && s[cursor[k]] < uint32_t(pos)) ++cursor[k];
                if (cursor[k] < s.size() && s[cursor[k]] == uint32_t(pos)) membership |= 1u << k;
            }
            Sym rv = recv[pos];
            if (!membership) {
                res.data[pos - blk] = alg.canon(rv, &c);
                continue;
            }
            Sym zval = eval_at(ke.z, pos, c);
            Sym ldval = eval_at(lamd, pos, c);
            auto linv = alg.inverse_checked(ldval, c);
            if (!linv) {
                res.status = DecodeResult::Status::uncorrectable;
                res.data.clear();
                return res;
            }
            Sym h = alg.mul(alg.pre(zval, &c), *linv, c);
            h = alg.mul(smu_inv_[pos], h, c);
            Sym e = alg.mask_mul(membership, h, c);
            res.data[pos - blk] = alg.canon(alg.add(rv, e, c), &c);
        }
        return res;
    }

private:
    template <class TwFn>
    void fft_core(std::vector<Sym>& a, int tau, TwFn&& tw, uint64_t& c) const {
        for (int L = tau; L >= 1; --L) {
            const int half = 1 << (L - 1);
            for (int b = 0; b < (1 << (tau - L)); ++b) {
                const Sym t = tw(L, b);
                const size_t base = size_t(b) << L;
                for (int l = 0; l < half; ++l) {
                    Sym& lo = a[base + l];
                    Sym& hi = a[base + l + half];
                    lo = alg.add(lo, alg.mul(t, hi, c), c);
                    hi = alg.add(lo, hi, c);
                }
            }
        }
    }

    template <class TwFn>
    void ifft_core(std::vector<Sym>& a, int tau, TwFn&& tw, uint64_t& c) const {
        for (int L = 1; L <= tau; ++L) {
            const int half = 1 << (L - 1);
            for (int b = 0; b < (1 << (tau - L)); ++b) {
                const Sym t = tw(L, b);
                const size_t base = size_t(b) << L;
                for (int l = 0; l < half; ++l) {
                    Sym& lo = a[base + l];
                    Sym& hi = a[base + l + half];
                    hi = alg.add(lo, hi, c);
                    lo = alg.add(lo, alg.mul(t, hi, c), c);
                }
            }
        }
    }

    // twiddles for an arbitrary shift beta; aligned shifts hit the table
    std::vector<std::vector<Sym>> twiddles_for(int tau, Sym beta) const {
        std::vector<std::vector<Sym>> tw(tau);
        for (int L = 1; L <= tau; ++L) {
            tw[L - 1].resize(size_t(1) << (tau - L));
            for (int b = 0; b < (1 << (tau - L)); ++b)
                tw[L - 1][b] = alg.pre_setup(alg.mul_setup(
                    subspace_eval(L - 1, Sym(beta ^ omega_[size_t(b) << L])), sv_inv_[L - 1]));
        }
        return tw;
    }

    // Xbar_j evaluated at an arbitrary point; setup-time constant
    Sym xbar_at_setup(size_t j, Sym x) const {
        Sym term = 1;
        for (int tau = 0; tau < m_; ++tau)
            if (j >> tau & 1)
                term = alg.mul_setup(alg.mul_setup(term, subspace_eval(tau, x)), sv_inv_[tau]);
        return alg.pre_setup(term);
    }

    std::vector<Sym> ext_ifft0(std::span<const Sym> F, uint64_t& c) const {
        // pipeline case: depth mu-1, beta = 0; extra point omega_{2^(mu-1)}
        const int tau = mu_ - 1;
        std::vector<Sym> G(F.begin(), F.end() - 1);
        ifft_core(G, tau, [&](int L, int b) { return twiddle_[L][b]; }, c);
        Sym H = 0;
        for (size_t j = 0; j < G.size(); ++j)
            if (G[j]) H = alg.add(H, alg.mul(xt_[size_t(1) << tau][j], G[j], c), c);
        G.push_back(alg.add(F.back(), H, c));
        return G;
    }

    Sym eval_at(std::span<const Sym> coords, int pos, uint64_t& c) const {
        Sym acc = 0;
        for (size_t j = 0; j < coords.size(); ++j)
            if (coords[j]) acc = alg.add(acc, alg.mul(xt_[pos][j], coords[j], c), c);
        return acc;
    }

    void check_len(size_t len, int tau) const {
        if (tau < 0 || tau > m_) throw std::invalid_argument("tau out of range");
        if (len != size_t(1) << tau)
            throw std::invalid_argument("coefficient count must be 2^tau");
    }
    void check_word(size_t len) const {
        if (len != size_t(n_)) throw std::invalid_argument("expected 2^m symbols");
    }

    void build_tables() {
        omega_.assign(n_, 0);
        for (int l = 0; l < n_; ++l)
            for (int j = 0; j < m_; ++j)
                if (l >> j & 1) omega_[l] ^= v[j];

        sv_.resize(m_);
        sv_inv_.resize(m_);
        for (int tau = 0; tau < m_; ++tau) {
            sv_[tau] = subspace_eval(tau, v[tau]);  // uses sv_[0..tau-1]
            sv_inv_[tau] = alg.inverse_setup(sv_[tau]);
        }

        twiddle_.resize(m_ + 1);
        for (int L = 1; L <= m_; ++L) {
            twiddle_[L].resize(size_t(1) << (m_ - L));
            for (size_t cidx = 0; cidx < twiddle_[L].size(); ++cidx)
                twiddle_[L][cidx] = alg.pre_setup(
                    alg.mul_setup(subspace_eval(L - 1, omega_[cidx << L]), sv_inv_[L - 1]));
        }

        p_l_.assign(n_, 1);
        for (int l = 0; l < n_; ++l)
            for (int j = 0; j < m_; ++j)
                if (l >> j & 1) p_l_[l] = alg.mul_setup(p_l_[l], sv_[j]);
        pinv_top_raw_ = alg.inverse_setup(p_l_[k_]);
        pinv_top_ = alg.pre_setup(pinv_top_raw_);

        const int blk = 1 << mu_;
        delta_pre_.assign(blk, std::vector<Sym>(blk));
        for (int a = 0; a < blk; ++a)
            for (int b = 0; b < blk; ++b)
                delta_pre_[a][b] = alg.pre_setup(omega_[a] ^ omega_[b]);

        // Xbar_j(omega_pos) for j <= 2^(mu-1): evaluated by transform of the
        // unit coordinate vectors, preprocessed once
        const int half_n = mu_ >= 1 ? (1 << (mu_ - 1)) : 0;
        xt_.assign(n_, std::vector<Sym>(half_n + 1));
        uint64_t sink = 0;
        std::vector<Sym> unit(blk);
        for (int j = 0; j <= half_n; ++j) {
            std::fill(unit.begin(), unit.end(), 0);
            unit[j] = 1;
            for (int bi = 0; bi < (n_ >> mu_); ++bi) {
                std::vector<Sym> vals = unit;
                fft_core(vals, mu_, [&](int L, int b) {
                    return twiddle_[L][(size_t(bi) << (mu_ - L)) + b];
                }, sink);
                for (int l = 0; l < blk; ++l)
                    xt_[(size_t(bi) << mu_) + l][j] = alg.pre_setup(vals[l]);
            }
        }

        smu_inv_.assign(n_, 0);
        for (int pos = blk; pos < n_; ++pos)
            smu_inv_[pos] = alg.pre_setup(alg.inverse_setup(subspace_eval(mu_, omega_[pos])));

        deriv_c_.resize(m_);
        for (int tau = 0; tau < m_; ++tau)
            deriv_c_[tau] = alg.pre_setup(
                alg.mul_setup(p_l_[(size_t(1) << tau) - 1], sv_inv_[tau]));
    }

    A alg;
    std::vector<Sym> v;
    int m_, mu_, n_, k_;
    std::vector<Sym> omega_;
    std::vector<Sym> sv_, sv_inv_;
    std::vector<std::vector<Sym>> twiddle_;   // [L][c], preprocessed
    std::vector<Sym> p_l_;
    Sym pinv_top_raw_ = 0, pinv_top_ = 0;
    std::vector<std::vector<Sym>> delta_pre_; // omega_a - omega_b, preprocessed
    std::vector<std::vector<Sym>> xt_;        // Xbar_j(omega_pos), preprocessed
    std::vector<Sym> smu_inv_;                // 1 / s_mu(omega_pos), preprocessed
    std::vector<Sym> deriv_c_;                // D_tau, preprocessed
};

}  // namespace ringrs
