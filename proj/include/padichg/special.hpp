#pragma once
// The three inexact p-adic primitives, each returned as a precision-tracked
// ball: binomial powers c^alpha, the Iwasawa logarithm on 1 + pZ_p, and the
// digamma-plus-Euler combination Psi pinned by harmonic partial sums.

#include "padic.hpp"

#include <cstdint>
#include <vector>

namespace padichg {

// v_p(c-1) >= 1, and >= 2 when p = 2; c = 1 is fine (infinite valuation)
inline int frobenius_constant_valuation(const Rational& c, long long p) {
    if (!is_p_integral(c, p))
        throw invalid_params("Frobenius constant is not p-integral: " + rat_str(c));
    int v = valuation(c - 1, p);
    if (v < (p == 2 ? 2 : 1))
        throw invalid_params("invalid Frobenius constant: need c = 1 mod " +
                             std::to_string(p == 2 ? 4 : p) + ", got " + rat_str(c));
    return v;
}

// c^alpha = sum_i binom(alpha,i) (c-1)^i, alpha p-integral.  Terms are exact
// rationals; the tail from the first i with i*v_p(c-1) >= N has valuation >= N.
inline PadicBall pow_binomial(const Rational& c, const Rational& alpha, long long p, int N) {
    int vc = frobenius_constant_valuation(c, p);
    if (!is_p_integral(alpha, p))
        throw invalid_params("pow_binomial: exponent not p-integral: " + rat_str(alpha));
    if (c == 1) return reduce(1, p, N);
    Rational acc = 0, binom = 1, cpow = 1;
    const Rational cm1 = c - 1;
    for (long long i = 0; i * vc < N; ++i) {
        acc += binom * cpow;
        binom *= (alpha - i) / Rational(i + 1);
        cpow *= cm1;
    }
    return reduce(acc, p, N);
}

// log(c) = sum_{i>=1} (-1)^{i+1} (c-1)^i / i, truncated once every remaining
// term is guaranteed valuation >= N+1, so that log(c)/p still has N digits.
inline PadicBall iwasawa_log_unit(const Rational& c, long long p, int N) {
    int vc = frobenius_constant_valuation(c, p);
    if (c == 1) return reduce(0, p, N + 1);
    auto ilogp = [p](long long i) {
        int r = 0;
        for (long long q = p; q <= i; q *= p) ++r;
        return r;
    };
    Rational acc = 0, cpow = 1;
    const Rational cm1 = c - 1;
    for (long long i = 1;; ++i) {
        if (i * vc - ilogp(i) >= N + 1) break;
        cpow *= cm1;
        acc += Rational((i % 2) ? 1 : -1, i) * cpow;
    }
    return reduce(acc, p, N + 1);
}

namespace detail {

// sum of 1/k over 1 <= k <= m with p not dividing k, mod `mod` (= p^K).
// Montgomery-style batch inversion keeps this at ~one inversion per block.
inline uint64_t harmonic_sum_u64(uint64_t m, long long p, uint64_t mod) {
    constexpr size_t BLOCK = 4096;
    std::vector<uint64_t> ks, pref;
    ks.reserve(BLOCK);
    pref.reserve(BLOCK);
    uint64_t acc = 0;
    uint64_t k = 1;
    while (k <= m) {
        ks.clear();
        pref.clear();
        uint64_t run = 1;
        for (; k <= m && ks.size() < BLOCK; ++k) {
            if (k % static_cast<uint64_t>(p) == 0) continue;
            ks.push_back(k % mod);
            run = mulmod_u64(run, k % mod, mod);
            pref.push_back(run);
        }
        if (ks.empty()) continue;
        uint64_t inv = inv_u64(pref.back(), mod);
        for (size_t i = ks.size(); i-- > 0;) {
            uint64_t invk = (i == 0) ? inv : mulmod_u64(inv, pref[i - 1], mod);
            acc = (acc + invk) % mod;
            inv = mulmod_u64(inv, ks[i], mod);
        }
    }
    return acc;
}

}  // namespace detail

// Psi(a) = psi_p(a) + gamma_p, computed as the limit of harmonic partial
// sums H(m) = sum_{1<=k<=m, p∤k} 1/k at the canonical m = a-1 mod p^{N+g};
// guard digits g=1 (odd p) / g=2 (p=2) make whole blocks vanish mod p^N.
inline PadicBall psi_gamma(const Rational& a, long long p, int N) {
    if (!is_p_integral(a, p))
        throw invalid_params("psi_gamma: a not p-integral: " + rat_str(a));
    if (N <= 0) return PadicBall{p, std::max(N, 0), 0};
    const int g = (p == 2) ? 2 : 1;
    const int K = N + g;
    BigInt modK = pow_pk(p, K);
    BigInt m = reduce(a - 1, p, K).res;
    BigInt acc;
    if (modK < (BigInt(1) << 62)) {
        acc = detail::harmonic_sum_u64(m.convert_to<uint64_t>(), p,
                                       modK.convert_to<uint64_t>());
    } else {
        // huge-modulus fallback; cost is linear in m like the fast path
        acc = 0;
        for (BigInt k = 1; k <= m; ++k) {
            if (k % p == 0) continue;
            acc = (acc + mod_inverse_or_throw(k, modK, "psi_gamma")) % modK;
        }
    }
    return ball_normalize(p, N, acc);
}

}  // namespace padichg
