#pragma once
// Coefficient families A_k, A^{(1)}_k, B_k, G_k and the three functions:
// Dwork's ratio F/F'(t^p), the logarithmic-type quotient G/F, and the
// hat-type quotient B-series/F, all as truncated series of precision balls.
//
// Internal completions run at the working precision N_w; divisions by k+a
// (resp. k) spend v_p of the divisor, and every surviving coefficient must
// still carry at least n digits or the builder refuses.

#include "series.hpp"
#include "special.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace padichg {

struct HGParams {
    long long p = 0;
    Rational a = 1;
    int s = 1;
    Rational c = 1;
    int n = 1;
    long long M = 0;  // 0 -> default 2p^n + 2p
    int N_w = 0;      // 0 -> default by the working-precision rule below
};

inline constexpr long long DESK_MAX_PN = 1000000;  // truncation window p^n
inline constexpr long long DESK_MAX_M = 2000000;   // series length

namespace detail {

inline bool is_prime_ll(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// smallest e >= 0 with p^e >= x
inline int ceil_log_p(long long p, const BigInt& x) {
    int e = 0;
    BigInt m = 1;
    while (m < x) {
        m *= p;
        ++e;
    }
    return e;
}

}  // namespace detail

// checks every domain constraint and resolves the M / N_w defaults
inline HGParams validate(HGParams par) {
    if (!detail::is_prime_ll(par.p))
        throw invalid_params("p must be prime, got " + std::to_string(par.p));
    if (par.s < 1) throw invalid_params("s must be a positive integer");
    if (par.n < 1) throw invalid_params("n must be a positive integer");
    require_param_a(par.a, par.p);
    frobenius_constant_valuation(par.c, par.p);
    BigInt pn = pow_pk(par.p, par.n);
    if (pn > DESK_MAX_PN) throw invalid_params("p^n exceeds the desk-scale limit");
    if (par.M == 0) par.M = 2 * pn.convert_to<long long>() + 2 * par.p;
    if (par.M < 1 || par.M > DESK_MAX_M)
        throw invalid_params("series length M out of range");
    if (par.N_w == 0)
        par.N_w = par.n +
                  detail::ceil_log_p(par.p, BigInt(par.M) * (1 + rat_den(par.a)) +
                                                abs(rat_num(par.a))) +
                  2;
    if (par.N_w < par.n)
        throw invalid_params("working precision N_w below the target exponent n");
    return par;
}

// the Dwork prime a' = (a+l)/p, the unique p-integral shift-quotient
inline Rational dwork_prime(const Rational& a, long long p) {
    BranchConstants bc = branch_constants(a, p);
    return (a + bc.l) / p;
}

struct DworkOrbit {
    std::vector<Rational> orbit;  // a^{(0)}, a^{(1)}, ... up to the return point
    std::optional<int> period;    // least r > 0 with a^{(r)} = a^{(0)}, if seen
};

inline DworkOrbit dwork_orbit(const Rational& a, long long p, int max_steps) {
    DworkOrbit out;
    out.orbit.push_back(a);
    Rational x = a;
    for (int i = 1; i <= max_steps; ++i) {
        x = dwork_prime(x, p);
        if (x == a) {
            out.period = i;
            return out;
        }
        out.orbit.push_back(x);
    }
    return out;
}

// A_k = ((a)_k / k!)^s by the exact multiplicative recurrence
inline Rational coeff_A(const Rational& a, int s, long long k) {
    Rational r = 1;
    for (long long i = 1; i <= k; ++i)
        r *= rat_pow_int((a + (i - 1)) / Rational(i), s);
    return r;
}

inline std::vector<Rational> table_A(const Rational& a, int s, long long len) {
    std::vector<Rational> A;
    A.reserve(static_cast<std::size_t>(len));
    A.push_back(1);
    for (long long k = 1; k < len; ++k)
        A.push_back(A.back() * rat_pow_int((a + (k - 1)) / Rational(k), s));
    return A;
}

// validated params plus the exact rational tables shared by every series
struct HGContext {
    HGParams par;
    BranchConstants bc;
    Rational a_next;            // Dwork prime of a
    std::vector<Rational> A;    // A_k, k < M
    std::vector<Rational> A1;   // same family at a_next, long enough for M/p
};

inline HGContext make_context(const HGParams& raw) {
    HGContext ctx;
    ctx.par = validate(raw);
    ctx.bc = branch_constants(ctx.par.a, ctx.par.p);
    ctx.a_next = (ctx.par.a + ctx.bc.l) / ctx.par.p;
    ctx.A = table_A(ctx.par.a, ctx.par.s, ctx.par.M);
    ctx.A1 = table_A(ctx.a_next, ctx.par.s, ctx.par.M / ctx.par.p + 2);
    return ctx;
}

inline PowerSeries series_F(const HGContext& ctx, long long len, int prec) {
    PowerSeries f;
    f.p = ctx.par.p;
    f.coeff.reserve(static_cast<std::size_t>(len));
    for (long long k = 0; k < len; ++k)
        f.coeff.push_back(reduce(ctx.A.at(static_cast<std::size_t>(k)), ctx.par.p, prec));
    return f;
}

inline PowerSeries series_F(const HGContext& ctx) {
    return series_F(ctx, ctx.par.M, ctx.par.N_w);
}

// the F-series of the Dwork-prime parameter a'
inline PowerSeries series_F_next(const HGContext& ctx, long long len, int prec) {
    PowerSeries f;
    f.p = ctx.par.p;
    f.coeff.reserve(static_cast<std::size_t>(len));
    for (long long k = 0; k < len; ++k)
        f.coeff.push_back(reduce(ctx.A1.at(static_cast<std::size_t>(k)), ctx.par.p, prec));
    return f;
}

// B_k completed at internal precision K; the result keeps K - v_p(k+a) digits.
// c_pow_next must hold c^{a'} at precision >= K; the branch term's exponent
// (k+a)/p splits as j + a' with j = (k-l)/p, so c^{(k+a)/p} = c^j * c^{a'}.
inline PadicBall hat_coefficient(const HGContext& ctx, long long k, int K,
                                 const PadicBall& c_pow_next) {
    const HGParams& par = ctx.par;
    PadicBall num = reduce(ctx.A.at(static_cast<std::size_t>(k)), par.p, K);
    if (k >= ctx.bc.l && (k - ctx.bc.l) % par.p == 0) {
        long long j = (k - ctx.bc.l) / par.p;
        PadicBall cj = reduce(rat_pow_int(par.c, static_cast<int>(j)), par.p, K);
        PadicBall t = ball_mul(reduce(ctx.A1.at(static_cast<std::size_t>(j)), par.p, K),
                               ball_mul(cj, c_pow_next));
        bool sign_flip = (static_cast<long long>(par.s) * ctx.bc.e) % 2 != 0;
        num = sign_flip ? ball_add(num, t) : ball_sub(num, t);
    }
    return ball_div(num, reduce(Rational(k) + par.a, par.p, K));
}

// G_k for k >= 1 at internal precision K; keeps K - v_p(k) digits
inline PadicBall log_coefficient(const HGContext& ctx, long long k, int K) {
    const HGParams& par = ctx.par;
    PadicBall num = reduce(ctx.A.at(static_cast<std::size_t>(k)), par.p, K);
    if (k % par.p == 0)
        num = ball_sub(num, reduce(ctx.A1.at(static_cast<std::size_t>(k / par.p)) *
                                       rat_pow_int(par.c, static_cast<int>(k / par.p)),
                                   par.p, K));
    return ball_div(num, ball_normalize(par.p, K, BigInt(k)));
}

// G_0 = s*Psi(a) - log(c)/p, carried at exactly N digits
inline PadicBall log_constant_term(const HGContext& ctx, int N) {
    const HGParams& par = ctx.par;
    PadicBall v = ball_mul(reduce(par.s, par.p, N), psi_gamma(par.a, par.p, N));
    if (par.c != 1) {
        PadicBall lg = iwasawa_log_unit(par.c, par.p, N);  // precision N+1
        v = ball_sub(v, ball_div(lg, reduce(par.p, par.p, N + 1)));
    }
    return v;
}

inline PowerSeries series_G_hat(const HGContext& ctx) {
    const HGParams& par = ctx.par;
    PadicBall c_pow_next = pow_binomial(par.c, ctx.a_next, par.p, par.N_w);
    PowerSeries out;
    out.p = par.p;
    out.coeff.reserve(static_cast<std::size_t>(par.M));
    for (long long k = 0; k < par.M; ++k) {
        PadicBall b = hat_coefficient(ctx, k, par.N_w, c_pow_next);
        if (b.prec < par.n)
            throw precision_error(
                "series_G_hat: coefficient retains fewer than n digits; raise N_w");
        out.coeff.push_back(std::move(b));
    }
    return out;
}

inline PowerSeries series_G_log(const HGContext& ctx) {
    const HGParams& par = ctx.par;
    PowerSeries out;
    out.p = par.p;
    out.coeff.reserve(static_cast<std::size_t>(par.M));
    out.coeff.push_back(log_constant_term(ctx, par.n));
    for (long long k = 1; k < par.M; ++k) {
        PadicBall g = log_coefficient(ctx, k, par.N_w);
        if (g.prec < par.n)
            throw precision_error(
                "series_G_log: coefficient retains fewer than n digits; raise N_w");
        out.coeff.push_back(std::move(g));
    }
    return out;
}

// the three functions, delivered mod p^n (every ring op happens at n digits;
// residues agree with the same pipeline run at any higher precision)

inline PowerSeries fn_hat(const HGContext& ctx) {
    const long long M = ctx.par.M;
    const int n = ctx.par.n;
    PowerSeries num = ps_cap_prec(series_G_hat(ctx), n);
    PowerSeries F = series_F(ctx, M, n);
    return ps_mul(num, ps_invert(F, static_cast<std::size_t>(M)),
                  static_cast<std::size_t>(M));
}

inline PowerSeries fn_log(const HGContext& ctx) {
    const long long M = ctx.par.M;
    const int n = ctx.par.n;
    PowerSeries num = ps_cap_prec(series_G_log(ctx), n);
    PowerSeries F = series_F(ctx, M, n);
    return ps_mul(num, ps_invert(F, static_cast<std::size_t>(M)),
                  static_cast<std::size_t>(M));
}

// denominator F'(t^p): the substituted Dwork-prime series (no Frobenius constant)
inline PowerSeries dwork_denominator(const HGContext& ctx, long long len, int prec) {
    PowerSeries fn = series_F_next(ctx, len / ctx.par.p + 1, prec);
    return ps_substitute_power(fn, ctx.par.p, static_cast<std::size_t>(len), prec);
}

inline PowerSeries fn_dwork(const HGContext& ctx) {
    const long long M = ctx.par.M;
    const int n = ctx.par.n;
    PowerSeries F = series_F(ctx, M, n);
    PowerSeries den = dwork_denominator(ctx, M, n);
    return ps_mul(F, ps_invert(den, static_cast<std::size_t>(M)),
                  static_cast<std::size_t>(M));
}

}  // namespace padichg
