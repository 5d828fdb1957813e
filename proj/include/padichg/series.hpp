#pragma once
// Dense truncated power series over Z_p.  Coefficients are precision balls;
// ring operations propagate the pessimistic min rule per output degree via
// prefix minima, so a low-precision coefficient only taints degrees at or
// above its own.
//
// Convolutions run on machine words whenever the largest live modulus fits
// in 32 bits (the common desk-scale case) and fall back to BigInt otherwise.

#include "padic.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <vector>

namespace padichg {

struct PowerSeries {
    long long p = 0;
    std::vector<PadicBall> coeff;  // coeff[k] multiplies t^k

    std::size_t size() const { return coeff.size(); }
};

inline PowerSeries ps_zero(long long p, std::size_t len, int prec) {
    PowerSeries f;
    f.p = p;
    f.coeff.assign(len, PadicBall{p, prec, 0});
    return f;
}

inline void require_same_prime(const PowerSeries& f, const PowerSeries& g) {
    if (f.p != g.p) throw invalid_params("series arithmetic: prime mismatch");
}

// lower every coefficient to at most `prec` digits (residues re-normalized)
inline PowerSeries ps_cap_prec(const PowerSeries& f, int prec) {
    PowerSeries out;
    out.p = f.p;
    out.coeff.reserve(f.size());
    for (const PadicBall& x : f.coeff) {
        int q = std::min(x.prec, prec);
        out.coeff.push_back(ball_normalize(f.p, q, x.res));
    }
    return out;
}

// degree truncation f_{<cutoff}, zero-padded/trimmed to out_len terms;
// structural zeros are exact, carried at the max precision present in f
inline PowerSeries ps_truncate_below(const PowerSeries& f, std::size_t cutoff,
                                     std::size_t out_len) {
    int zp = 0;
    for (const PadicBall& x : f.coeff) zp = std::max(zp, x.prec);
    PowerSeries out = ps_zero(f.p, out_len, zp);
    for (std::size_t k = 0; k < out_len && k < cutoff && k < f.size(); ++k)
        out.coeff[k] = f.coeff[k];
    return out;
}

inline PowerSeries ps_add(const PowerSeries& f, const PowerSeries& g) {
    require_same_prime(f, g);
    if (f.size() != g.size()) throw invalid_params("ps_add: length mismatch");
    PowerSeries out;
    out.p = f.p;
    out.coeff.reserve(f.size());
    for (std::size_t k = 0; k < f.size(); ++k)
        out.coeff.push_back(ball_add(f.coeff[k], g.coeff[k]));
    return out;
}

inline PowerSeries ps_sub(const PowerSeries& f, const PowerSeries& g) {
    require_same_prime(f, g);
    if (f.size() != g.size()) throw invalid_params("ps_sub: length mismatch");
    PowerSeries out;
    out.p = f.p;
    out.coeff.reserve(f.size());
    for (std::size_t k = 0; k < f.size(); ++k)
        out.coeff.push_back(ball_sub(f.coeff[k], g.coeff[k]));
    return out;
}

namespace detail {

// prefix_min[k] = min precision among coeff[0..min(k, len-1)]
inline std::vector<int> prefix_min_prec(const PowerSeries& f, std::size_t out_len) {
    std::vector<int> m(out_len, INT_MAX);
    int cur = INT_MAX;
    for (std::size_t k = 0; k < out_len; ++k) {
        if (k < f.size()) cur = std::min(cur, f.coeff[k].prec);
        m[k] = cur;
    }
    return m;
}

inline int max_prec(const PowerSeries& f) {
    int m = 0;
    for (const PadicBall& x : f.coeff) m = std::max(m, x.prec);
    return m;
}

}  // namespace detail

// schoolbook product of the first out_len degrees; O(out_len * min(len, out_len))
inline PowerSeries ps_mul(const PowerSeries& f, const PowerSeries& g, std::size_t out_len) {
    require_same_prime(f, g);
    if (f.coeff.empty() || g.coeff.empty())
        throw invalid_params("ps_mul: empty operand");
    const std::vector<int> pf = detail::prefix_min_prec(f, out_len);
    const std::vector<int> pg = detail::prefix_min_prec(g, out_len);
    PowerSeries out;
    out.p = f.p;
    out.coeff.resize(out_len);

    uint64_t unused;
    const int pmax = std::max(detail::max_prec(f), detail::max_prec(g));
    if (detail::pow_u64_below(f.p, pmax, uint64_t(1) << 32, unused)) {
        std::vector<uint64_t> fr(f.size()), gr(g.size());
        for (std::size_t j = 0; j < f.size(); ++j) fr[j] = f.coeff[j].res.convert_to<uint64_t>();
        for (std::size_t j = 0; j < g.size(); ++j) gr[j] = g.coeff[j].res.convert_to<uint64_t>();
        for (std::size_t k = 0; k < out_len; ++k) {
            int prk = std::max(0, std::min(pf[k], pg[k]));
            unsigned __int128 acc = 0;
            std::size_t jlo = (k >= g.size()) ? k - g.size() + 1 : 0;
            std::size_t jhi = std::min(k, f.size() - 1);
            for (std::size_t j = jlo; j <= jhi; ++j)
                acc += static_cast<unsigned __int128>(fr[j]) * gr[k - j];
            uint64_t m = 1;
            detail::pow_u64_below(f.p, prk, uint64_t(1) << 33, m);
            out.coeff[k] = PadicBall{f.p, prk, BigInt(static_cast<uint64_t>(acc % m))};
        }
        return out;
    }

    for (std::size_t k = 0; k < out_len; ++k) {
        int prk = std::max(0, std::min(pf[k], pg[k]));
        BigInt acc = 0;
        std::size_t jlo = (k >= g.size()) ? k - g.size() + 1 : 0;
        std::size_t jhi = std::min(k, f.size() - 1);
        for (std::size_t j = jlo; j <= jhi; ++j)
            acc += f.coeff[j].res * g.coeff[k - j].res;
        out.coeff[k] = ball_normalize(f.p, prk, acc);
    }
    return out;
}

// multiplicative inverse in the power-series ring, to out_len degrees;
// the constant term must be a p-adic unit with at least one known digit
inline PowerSeries ps_invert(const PowerSeries& f, std::size_t out_len) {
    if (f.coeff.empty()) throw invalid_params("ps_invert: empty operand");
    const PadicBall& f0 = f.coeff.front();
    if (f0.prec < 1)
        throw precision_error("ps_invert: constant term carries no digits");
    if (f0.res % f.p == 0)
        throw nonintegral_error("ps_invert: constant term is not a unit");
    const std::vector<int> q = detail::prefix_min_prec(f, out_len);
    PowerSeries out;
    out.p = f.p;
    out.coeff.resize(out_len);

    uint64_t mw;
    if (detail::pow_u64_below(f.p, f0.prec, uint64_t(1) << 32, mw) &&
        detail::max_prec(f) <= f0.prec) {
        std::vector<uint64_t> fr(f.size()), gw(out_len);
        for (std::size_t j = 0; j < f.size(); ++j) fr[j] = f.coeff[j].res.convert_to<uint64_t>();
        const uint64_t i0 = detail::inv_u64(fr[0] % mw, mw);
        gw[0] = i0;
        for (std::size_t k = 1; k < out_len; ++k) {
            unsigned __int128 acc = 0;
            std::size_t jhi = std::min(k, f.size() - 1);
            for (std::size_t j = 1; j <= jhi; ++j)
                acc += static_cast<unsigned __int128>(fr[j]) * gw[k - j];
            uint64_t s = static_cast<uint64_t>(acc % mw);
            gw[k] = detail::mulmod_u64(mw - s == mw ? 0 : mw - s, i0, mw);
        }
        for (std::size_t k = 0; k < out_len; ++k) {
            uint64_t m = 1;
            detail::pow_u64_below(f.p, q[k], uint64_t(1) << 33, m);
            out.coeff[k] = PadicBall{f.p, q[k], BigInt(gw[k] % m)};
        }
        return out;
    }

    const BigInt mbig = ball_modulus(f0);
    const BigInt i0 = mod_inverse_or_throw(f0.res % mbig, mbig, "ps_invert: unit inversion");
    std::vector<BigInt> gw(out_len);
    gw[0] = i0;
    for (std::size_t k = 1; k < out_len; ++k) {
        BigInt acc = 0;
        std::size_t jhi = std::min(k, f.size() - 1);
        for (std::size_t j = 1; j <= jhi; ++j)
            acc += f.coeff[j].res * gw[k - j];
        gw[k] = (-i0 * acc) % mbig;
        if (gw[k] < 0) gw[k] += mbig;
    }
    for (std::size_t k = 0; k < out_len; ++k)
        out.coeff[k] = ball_normalize(f.p, q[k], gw[k]);
    return out;
}

// g(t) = f(t^step): spreads coefficients to degrees k*step, exact zeros between
inline PowerSeries ps_substitute_power(const PowerSeries& f, long long step,
                                       std::size_t out_len, int zero_prec) {
    if (step < 1) throw invalid_params("ps_substitute_power: step must be positive");
    PowerSeries out = ps_zero(f.p, out_len, zero_prec);
    for (std::size_t k = 0; k < f.size(); ++k) {
        unsigned long long d = static_cast<unsigned long long>(k) * static_cast<unsigned long long>(step);
        if (d >= out_len) break;
        out.coeff[static_cast<std::size_t>(d)] = f.coeff[k];
    }
    return out;
}

}  // namespace padichg
