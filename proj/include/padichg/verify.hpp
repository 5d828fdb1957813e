#pragma once
// The checker suite.  Every statement in scope becomes a finite residue
// identity with counterexample extraction: congruences compare the function
// against its truncated-quotient form degree by degree; transformation laws
// are cross-multiplied into Laurent-polynomial identities; lemma-level facts
// (Lipschitz quotients, B_l/A_l, S_m sums, reflection) get direct checks.
//
// Fault injection perturbs exactly one computed residue on the evaluated
// side by p^{n-1} before comparison; the contract is pass -> fail.

#include "hypergeom.hpp"
#include "laurent.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

namespace padichg {

struct FirstFailure {
    long long degree = 0;  // degree, sum index, or sample-pair index
    BigInt lhs;
    BigInt rhs;
};

struct VerifyReport {
    std::string check;
    HGParams params;  // normalized echo, defaults resolved
    bool pass = false;
    bool conjectural = false;
    BigInt modulus;
    long long deg_lo = 0;  // degrees_checked, inclusive range
    long long deg_hi = 0;
    std::optional<FirstFailure> first_failure;
    long long elapsed_ms = 0;
};

// single-point perturbation of the evaluated side (negative controls)
struct FaultSpec {
    bool active = false;
    long long degree = 0;
};

namespace detail {

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

inline PowerSeries with_fault(PowerSeries f, long long degree, long long p, int nexp) {
    if (degree < 0 || degree >= static_cast<long long>(f.size()))
        throw invalid_params("fault degree outside the computed range");
    PadicBall& x = f.coeff[static_cast<std::size_t>(degree)];
    x = ball_normalize(p, x.prec, x.res + pow_pk(p, nexp - 1));
    return f;
}

inline PadicBall nudge(const PadicBall& x, int nexp) {
    return ball_normalize(x.p, x.prec, x.res + pow_pk(x.p, nexp - 1));
}

// deterministic splitmix64 stream; identical on every platform
struct DetRng {
    uint64_t state;
    explicit DetRng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    long long below(long long bound) {  // uniform-ish over [0, bound), bound >= 1
        return static_cast<long long>(next() % static_cast<uint64_t>(bound));
    }
};

}  // namespace detail

// the transformation laws are established exactly for s=2, 0 < a < 1,
// p > den(a); every other instance is conjectural and must be reported as such
inline bool transform_is_proved(const HGParams& par) {
    return par.s == 2 && par.a > 0 && par.a < 1 && BigInt(par.p) > rat_den(par.a);
}

enum class CongruenceKind { hat, log_type, dwork };

inline const char* congruence_name(CongruenceKind kind) {
    switch (kind) {
        case CongruenceKind::hat: return "hat";
        case CongruenceKind::log_type: return "log";
        default: return "dwork";
    }
}

// fn_X(t) = X_{<p^n}/F_{<p^n} mod p^n, degree by degree below M
inline VerifyReport check_congruence(CongruenceKind kind, const HGParams& raw,
                                     const FaultSpec& fault = {}) {
    detail::Stopwatch sw;
    HGParams setup = raw;
    if (kind == CongruenceKind::dwork) setup.c = 1;
    HGContext ctx = make_context(setup);
    const HGParams& par = ctx.par;
    const long long pn = pow_pk(par.p, par.n).convert_to<long long>();
    if (par.M < pn)
        throw invalid_params("degree window M must reach p^n");
    const std::size_t M = static_cast<std::size_t>(par.M);
    const int n = par.n;

    PowerSeries num, den;
    if (kind == CongruenceKind::hat) {
        num = ps_cap_prec(series_G_hat(ctx), n);
        den = series_F(ctx, par.M, n);
    } else if (kind == CongruenceKind::log_type) {
        num = ps_cap_prec(series_G_log(ctx), n);
        den = series_F(ctx, par.M, n);
    } else {
        num = series_F(ctx, par.M, n);
        den = dwork_denominator(ctx, par.M, n);
    }

    // the evaluated side; the truncated reference side stays clean
    PowerSeries num_eval = num, den_eval = den;
    if (fault.active) {
        if (kind == CongruenceKind::dwork)
            den_eval = detail::with_fault(den_eval, fault.degree, par.p, n);
        else
            num_eval = detail::with_fault(num_eval, fault.degree, par.p, n);
    }
    PowerSeries lhs = ps_mul(num_eval, ps_invert(den_eval, M), M);
    PowerSeries rhs = ps_mul(ps_truncate_below(num, static_cast<std::size_t>(pn), M),
                             ps_invert(ps_truncate_below(den, static_cast<std::size_t>(pn), M), M),
                             M);

    VerifyReport rep;
    rep.check = congruence_name(kind);
    rep.params = par;
    rep.modulus = pow_pk(par.p, n);
    rep.deg_lo = 0;
    rep.deg_hi = par.M - 1;
    rep.pass = true;
    for (std::size_t k = 0; k < M; ++k) {
        BigInt lv = ball_residue_mod(lhs.coeff[k], n);
        BigInt rv = ball_residue_mod(rhs.coeff[k], n);
        if (lv != rv) {
            rep.pass = false;
            rep.first_failure = FirstFailure{static_cast<long long>(k), lv, rv};
            break;
        }
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

// F(t)_{<p^n} = prod_i [F_{a^(i)}(t)_{<p}]^{p^i} mod p; the inner p^i-th powers
// are coefficientwise Frobenius over F_p: f(t)^p = f(t^p)
inline VerifyReport check_trunc_factorization(const Rational& a, int s, long long p, int n,
                                              const FaultSpec& fault = {}) {
    detail::Stopwatch sw;
    const long long pn_ll = [&] {
        BigInt v = pow_pk(p, n);
        if (v > DESK_MAX_PN) throw invalid_params("p^n exceeds the desk-scale limit");
        return v.convert_to<long long>();
    }();
    HGContext ctx = make_context(HGParams{p, a, s, 1, n, pn_ll, 0});
    const std::size_t pn = static_cast<std::size_t>(pn_ll);

    PowerSeries lhs = series_F(ctx, pn_ll, 1);
    if (fault.active) lhs = detail::with_fault(lhs, fault.degree, p, 1);

    PowerSeries prod = ps_zero(p, pn, 1);
    prod.coeff[0] = reduce(1, p, 1);
    Rational ai = a;
    long long step = 1;
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> Ai = table_A(ai, s, p);
        PowerSeries fi;
        fi.p = p;
        for (const Rational& x : Ai) fi.coeff.push_back(reduce(x, p, 1));
        prod = ps_mul(prod, ps_substitute_power(fi, step, pn, 1), pn);
        ai = dwork_prime(ai, p);
        step *= p;
    }

    VerifyReport rep;
    rep.check = "factor";
    rep.params = ctx.par;
    rep.modulus = p;
    rep.deg_lo = 0;
    rep.deg_hi = pn_ll - 1;
    rep.pass = true;
    for (std::size_t k = 0; k < pn; ++k) {
        BigInt lv = ball_residue_mod(lhs.coeff[k], 1);
        BigInt rv = ball_residue_mod(prod.coeff[k], 1);
        if (lv != rv) {
            rep.pass = false;
            rep.first_failure = FirstFailure{static_cast<long long>(k), lv, rv};
            break;
        }
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

// F(t)_{<p} = (-1)^{ls} t^l F(t^{-1})_{<p} over F_p; certifies in particular
// that the truncation has unit leading coefficient at degree l
inline VerifyReport check_reflection_unit(const Rational& a, int s, long long p,
                                          const FaultSpec& fault = {}) {
    detail::Stopwatch sw;
    HGContext ctx = make_context(HGParams{p, a, s, 1, 1, p, 0});
    PowerSeries F = series_F(ctx, p, 1);
    PowerSeries Feval = fault.active ? detail::with_fault(F, fault.degree, p, 1) : F;
    const int l = ctx.bc.l;
    const int sign = (static_cast<long long>(l) * s) % 2 != 0 ? -1 : 1;

    LaurentPoly L = laurent_from_series(Feval);
    LaurentPoly R = laurent_shift_scale(omega(laurent_from_series(F)), l, sign);

    VerifyReport rep;
    rep.check = "reflect";
    rep.params = ctx.par;
    rep.modulus = p;
    rep.deg_lo = l - (p - 1);
    rep.deg_hi = p - 1;
    auto diff = laurent_first_diff_mod(L, R, 1);
    rep.pass = !diff.has_value();
    if (diff) rep.first_failure = FirstFailure{diff->degree, diff->lhs, diff->rhs};
    rep.elapsed_ms = sw.ms();
    return rep;
}

// cross-multiplied logarithmic transformation law at sigma-hat(t) = c^{-1} t^p:
//   G_{<p^n}(t) * omega(F_{<p^n}) + omega(Ghat_{<p^n}) * F_{<p^n}(t) = 0 mod p^n.
// At n=1 (p odd) the closed mod-p form G + (-1)^{ls} t^l omega(Ghat) = 0 is
// verified as well; both routes must vanish.
inline VerifyReport check_transform_log(const HGParams& raw, const FaultSpec& fault = {}) {
    detail::Stopwatch sw;
    HGParams setup = raw;
    {
        BigInt pn = pow_pk(raw.p, raw.n);
        if (pn > DESK_MAX_PN) throw invalid_params("p^n exceeds the desk-scale limit");
        setup.M = pn.convert_to<long long>();
        setup.N_w = 0;
    }
    HGContext ctx = make_context(setup);
    const HGParams& par = ctx.par;
    const long long pn = par.M;
    const int n = par.n;

    VerifyReport rep;
    rep.check = "transform-log";
    rep.params = par;
    rep.modulus = pow_pk(par.p, n);
    rep.deg_lo = -(pn - 1);
    rep.deg_hi = pn - 1;
    rep.conjectural = !transform_is_proved(par);

    VerifyReport unit = check_reflection_unit(par.a, par.s, par.p);
    if (!unit.pass) {  // cross-multiplication would be unsound; report the cause
        rep.pass = false;
        rep.first_failure = unit.first_failure;
        rep.elapsed_ms = sw.ms();
        return rep;
    }

    PowerSeries F = series_F(ctx, pn, n);
    PowerSeries G = ps_cap_prec(series_G_log(ctx), n);
    HGParams hat_par = par;
    hat_par.c = Rational(1) / par.c;
    PowerSeries Bh = ps_cap_prec(series_G_hat(make_context(hat_par)), n);
    if (fault.active) G = detail::with_fault(G, fault.degree, par.p, n);

    LaurentPoly Fl = laurent_from_series(F);
    LaurentPoly Gl = laurent_from_series(G);
    LaurentPoly Bl = laurent_from_series(Bh);
    LaurentPoly total =
        laurent_add(laurent_mul(Gl, omega(Fl)), laurent_mul(omega(Bl), Fl));

    rep.pass = true;
    if (auto bad = laurent_first_nonzero_mod(total, n)) {
        rep.pass = false;
        rep.first_failure = FirstFailure{bad->degree, bad->lhs, bad->rhs};
    }

    if (rep.pass && n == 1 && par.p != 2) {
        const int l = ctx.bc.l;
        const int sign = (static_cast<long long>(l) * par.s) % 2 != 0 ? -1 : 1;
        LaurentPoly closed = laurent_add(Gl, laurent_shift_scale(omega(Bl), l, sign));
        if (auto bad = laurent_first_nonzero_mod(closed, 1)) {
            rep.pass = false;
            rep.first_failure = FirstFailure{bad->degree, bad->lhs, bad->rhs};
        }
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

// cross-multiplied Dwork transformation law (c = 1):
//   F_{<p^n}(t) * omega(D_{<p^n}) = ((-1)^s t)^l * omega(F_{<p^n}) * D_{<p^n}
// where D = F'(t^p), compared over every occupied Laurent degree mod p^n
inline VerifyReport check_transform_dwork(const HGParams& raw, const FaultSpec& fault = {}) {
    detail::Stopwatch sw;
    HGParams setup = raw;
    setup.c = 1;
    {
        BigInt pn = pow_pk(raw.p, raw.n);
        if (pn > DESK_MAX_PN) throw invalid_params("p^n exceeds the desk-scale limit");
        setup.M = pn.convert_to<long long>();
        setup.N_w = 0;
    }
    HGContext ctx = make_context(setup);
    const HGParams& par = ctx.par;
    const long long pn = par.M;
    const int n = par.n;
    const int l = ctx.bc.l;
    const int sign = (static_cast<long long>(l) * par.s) % 2 != 0 ? -1 : 1;

    VerifyReport rep;
    rep.check = "transform-dwork";
    rep.params = par;
    rep.modulus = pow_pk(par.p, n);
    rep.deg_lo = -(pn - 1);
    rep.deg_hi = pn - 1 + l;
    rep.conjectural = !transform_is_proved(par);

    VerifyReport unit = check_reflection_unit(par.a, par.s, par.p);
    if (!unit.pass) {
        rep.pass = false;
        rep.first_failure = unit.first_failure;
        rep.elapsed_ms = sw.ms();
        return rep;
    }

    PowerSeries F = series_F(ctx, pn, n);
    PowerSeries D = dwork_denominator(ctx, pn, n);
    PowerSeries Feval = fault.active ? detail::with_fault(F, fault.degree, par.p, n) : F;

    LaurentPoly Fl = laurent_from_series(F);
    LaurentPoly Dl = laurent_from_series(D);
    LaurentPoly lhs = laurent_mul(laurent_from_series(Feval), omega(Dl));
    LaurentPoly rhs = laurent_shift_scale(laurent_mul(omega(Fl), Dl), l, sign);

    rep.pass = true;
    if (auto bad = laurent_first_diff_mod(lhs, rhs, n)) {
        rep.pass = false;
        rep.first_failure = FirstFailure{bad->degree, bad->lhs, bad->rhs};
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

// B_l/A_l = Psi(a+l) - Psi(1+l) mod p^n at a = d*p^n - l (s=1, c=1)
inline VerifyReport check_blal(long long p, int n, int l, long long d,
                               const FaultSpec& fault = {}) {
    detail::Stopwatch sw;
    if (!detail::is_prime_ll(p)) throw invalid_params("p must be prime");
    if (n < 1) throw invalid_params("n must be a positive integer");
    if (l < 0 || l >= p) throw invalid_params("l must lie in [0, p)");
    if (d < 1 || d % p == 0) throw invalid_params("d must be a positive unit mod p");
    const Rational a = Rational(BigInt(d) * pow_pk(p, n) - l);
    HGContext ctx = make_context(HGParams{p, a, 1, 1, n, l + 2, 0});
    const int K = std::max(ctx.par.N_w, 2 * n + 2);

    PadicBall Bl = hat_coefficient(ctx, l, K, reduce(1, p, K));
    PadicBall lhs = ball_div(Bl, reduce(ctx.A.at(static_cast<std::size_t>(l)), p, K));
    if (fault.active) lhs = detail::nudge(lhs, n);
    PadicBall rhs = ball_sub(psi_gamma(a + l, p, n), psi_gamma(Rational(1 + l), p, n));

    VerifyReport rep;
    rep.check = "blal";
    rep.params = ctx.par;
    rep.modulus = pow_pk(p, n);
    rep.deg_lo = l;
    rep.deg_hi = l;
    BigInt lv = ball_residue_mod(lhs, n);
    BigInt rv = ball_residue_mod(rhs, n);
    rep.pass = lv == rv;
    if (!rep.pass) rep.first_failure = FirstFailure{l, lv, rv};
    rep.elapsed_ms = sw.ms();
    return rep;
}

// S_m = sum_{i+j=m} (A_{i+p^n} B_j - A_i B_{j+p^n}) = 0 mod p^n for m <= m_max
inline VerifyReport check_sm(const HGParams& raw, long long m_max,
                             const FaultSpec& fault = {}) {
    detail::Stopwatch sw;
    if (m_max < 0) throw invalid_params("m_max must be nonnegative");
    HGParams setup = raw;
    {
        BigInt pn = pow_pk(raw.p, raw.n);
        if (pn > DESK_MAX_PN) throw invalid_params("p^n exceeds the desk-scale limit");
        setup.M = m_max + pn.convert_to<long long>() + 1;
        setup.N_w = 0;
    }
    HGContext ctx = make_context(setup);
    const HGParams& par = ctx.par;
    const long long pn = pow_pk(par.p, par.n).convert_to<long long>();
    const int n = par.n;
    const BigInt mod = pow_pk(par.p, n);

    PowerSeries B = series_G_hat(ctx);
    std::vector<BigInt> Ar, Br;
    Ar.reserve(ctx.A.size());
    Br.reserve(B.size());
    for (const Rational& x : ctx.A) Ar.push_back(reduce(x, par.p, n).res);
    for (const PadicBall& x : B.coeff) Br.push_back(ball_residue_mod(x, n));

    VerifyReport rep;
    rep.check = "sm";
    rep.params = par;
    rep.modulus = mod;
    rep.deg_lo = 0;
    rep.deg_hi = m_max;
    rep.pass = true;
    for (long long m = 0; m <= m_max; ++m) {
        BigInt S = 0;
        for (long long i = 0; i <= m; ++i) {
            std::size_t ui = static_cast<std::size_t>(i);
            std::size_t uj = static_cast<std::size_t>(m - i);
            S += Ar[ui + pn] * Br[uj] - Ar[ui] * Br[uj + pn];
        }
        S %= mod;
        if (S < 0) S += mod;
        if (fault.active && m == fault.degree) S = (S + pow_pk(par.p, n - 1)) % mod;
        if (S != 0) {
            rep.pass = false;
            rep.first_failure = FirstFailure{m, S, 0};
            break;
        }
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

// k -> B_k/A_k is p-adically Lipschitz: k = k' mod p^m implies equal
// quotients mod p^m; sampled over `pairs` deterministic random pairs.
// The congruence exponent n of the params plays the role of m here.
inline VerifyReport check_lipschitz(const HGParams& raw, long long pairs, long long kmax,
                                    uint64_t seed, const FaultSpec& fault = {}) {
    detail::Stopwatch sw;
    const int m = raw.n;
    HGParams setup = raw;
    BigInt pm_big = pow_pk(raw.p, m);
    if (pm_big > DESK_MAX_PN) throw invalid_params("p^m exceeds the desk-scale limit");
    const long long pm = pm_big.convert_to<long long>();
    if (kmax <= pm) throw invalid_params("kmax must exceed p^m");
    if (pairs < 1) throw invalid_params("pairs must be positive");
    setup.M = kmax + 1;
    setup.N_w = 0;
    HGContext ctx = make_context(setup);
    const HGParams& par = ctx.par;

    VerifyReport rep;
    rep.check = "lipschitz";
    rep.params = par;
    rep.modulus = pm_big;
    rep.deg_lo = 0;
    rep.deg_hi = pairs - 1;
    rep.pass = true;

    detail::DetRng rng(seed);
    for (long long idx = 0; idx < pairs; ++idx) {
        long long k = rng.below(kmax - pm);
        long long jmax = (kmax - k) / pm;
        long long kk = k + pm * (1 + rng.below(jmax));

        auto quotient = [&](long long kq) {
            int va = valuation(ctx.A.at(static_cast<std::size_t>(kq)), par.p);
            int N = m + va + 1 +
                    valuation(ctx.A.at(static_cast<std::size_t>(kq == k ? kk : k)), par.p);
            int K = N + valuation(Rational(kq) + par.a, par.p);
            PadicBall cpow = pow_binomial(par.c, ctx.a_next, par.p, K);
            PadicBall B = hat_coefficient(ctx, kq, K, cpow);
            return ball_div(B, reduce(ctx.A.at(static_cast<std::size_t>(kq)), par.p, N));
        };
        PadicBall q1 = quotient(k);
        PadicBall q2 = quotient(kk);
        if (fault.active && idx == fault.degree) q1 = detail::nudge(q1, m);
        BigInt lv = ball_residue_mod(q1, m);
        BigInt rv = ball_residue_mod(q2, m);
        if (lv != rv) {
            rep.pass = false;
            rep.first_failure = FirstFailure{idx, lv, rv};
            break;
        }
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

}  // namespace padichg
