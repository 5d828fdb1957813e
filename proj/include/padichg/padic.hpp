#pragma once
// Precision-tracked residues mod p^N (balls) and the branch constants
// l, q, l', e attached to a p-integral parameter a.
//
// Precision contract: add/sub/mul report min(prec(x), prec(y)); division by y
// additionally drops v_p(y) digits.  A ball never claims more digits than the
// rules allow, and every residue is kept normalized to [0, p^prec).

#include "rational.hpp"

#include <boost/integer/mod_inverse.hpp>
#include <cstdint>
#include <string>

namespace padichg {

struct PadicBall {
    long long p = 0;
    int prec = 0;    // digits asserted correct
    BigInt res;      // in [0, p^prec)
};

inline BigInt ball_modulus(const PadicBall& x) { return pow_pk(x.p, x.prec); }

inline BigInt mod_inverse_or_throw(const BigInt& a, const BigInt& m, const char* what) {
    BigInt inv = boost::integer::mod_inverse(a, m);
    if (inv == 0 && m != 1) throw invalid_params(what);
    return inv;
}

// residue of a p-integral rational mod p^N
inline PadicBall reduce(const Rational& x, long long p, int N) {
    if (N < 0) throw invalid_params("reduce: negative precision");
    if (!is_p_integral(x, p)) throw invalid_params("reduce: not p-integral: " + rat_str(x));
    BigInt m = pow_pk(p, N);
    BigInt r = rat_num(x) % m;
    if (r < 0) r += m;
    BigInt d = rat_den(x) % m;
    r = r * mod_inverse_or_throw(d, m, "reduce: denominator not a unit") % m;
    return PadicBall{p, N, r};
}

inline PadicBall reduce(long long x, long long p, int N) { return reduce(Rational(x), p, N); }

inline void require_same_prime(const PadicBall& x, const PadicBall& y) {
    if (x.p != y.p) throw invalid_params("ball arithmetic: prime mismatch");
}

inline PadicBall ball_normalize(long long p, int prec, BigInt r) {
    BigInt m = pow_pk(p, prec);
    r %= m;
    if (r < 0) r += m;
    return PadicBall{p, prec, std::move(r)};
}

inline PadicBall ball_add(const PadicBall& x, const PadicBall& y) {
    require_same_prime(x, y);
    int n = std::min(x.prec, y.prec);
    return ball_normalize(x.p, n, x.res + y.res);
}

inline PadicBall ball_sub(const PadicBall& x, const PadicBall& y) {
    require_same_prime(x, y);
    int n = std::min(x.prec, y.prec);
    return ball_normalize(x.p, n, x.res - y.res);
}

inline PadicBall ball_neg(const PadicBall& x) {
    return ball_normalize(x.p, x.prec, -x.res);
}

inline PadicBall ball_mul(const PadicBall& x, const PadicBall& y) {
    require_same_prime(x, y);
    int n = std::min(x.prec, y.prec);  // pessimistic: valuation gain not credited
    return ball_normalize(x.p, n, x.res * y.res);
}

// x / y where v_p(y) digits are lost; the quotient must stay p-integral
inline PadicBall ball_div(const PadicBall& x, const PadicBall& y) {
    require_same_prime(x, y);
    if (y.res == 0)
        throw precision_error("ball_div: divisor indistinguishable from zero");
    int v = valuation(y.res, y.p);
    int n = std::min(x.prec, y.prec) - v;
    if (n < 0) throw precision_error("ball_div: no digits left after valuation drop");
    BigInt pv = pow_pk(x.p, v);
    if (x.res % pv != 0)
        throw nonintegral_error("ball_div: quotient not p-integral");
    BigInt m = pow_pk(x.p, n);
    BigInt unit = (y.res / pv) % m;
    BigInt r = (x.res / pv) % m * mod_inverse_or_throw(unit, m, "ball_div: unit inversion") % m;
    return PadicBall{x.p, n, r};
}

inline PadicBall ball_pow_ui(PadicBall x, unsigned long long e) {
    PadicBall r = ball_normalize(x.p, x.prec, 1);
    for (; e; e >>= 1) {
        if (e & 1) r = ball_mul(r, x);
        x = ball_mul(x, x);
    }
    return r;
}

// equality of the first n digits; both operands must actually carry them
inline bool ball_eq_mod(const PadicBall& x, const PadicBall& y, int n) {
    require_same_prime(x, y);
    if (x.prec < n || y.prec < n)
        throw precision_error("ball_eq_mod: operand carries fewer digits than compared");
    BigInt m = pow_pk(x.p, n);
    return (x.res - y.res) % m == 0;
}

inline BigInt ball_residue_mod(const PadicBall& x, int n) {
    if (x.prec < n) throw precision_error("ball_residue_mod: insufficient precision");
    BigInt r = x.res % pow_pk(x.p, n);
    return r;
}

// base-p digits, least significant first, comma separated ("6" -> "1,1" at p=5)
inline std::string ball_digits(const PadicBall& x) {
    std::string out;
    BigInt r = x.res;
    for (int i = 0; i < x.prec; ++i) {
        if (i) out += ',';
        out += BigInt(r % x.p).str();
        r /= x.p;
    }
    return out.empty() ? "0" : out;
}

// ---- machine-word modular kit (fast paths; BigInt is the fallback) ----

namespace detail {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline uint64_t inv_u64(uint64_t a, uint64_t m) {
    // extended gcd; gcd(a, m) = 1 by construction
    __int128 t = 0, nt = 1, r = m, nr = a % m;
    while (nr != 0) {
        __int128 q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (t < 0) t += m;
    return static_cast<uint64_t>(t);
}

// p^e into out when it stays below `limit`; false otherwise
inline bool pow_u64_below(long long p, int e, uint64_t limit, uint64_t& out) {
    unsigned __int128 m = 1;
    for (int i = 0; i < e; ++i) {
        m *= static_cast<unsigned __int128>(p);
        if (m >= limit) return false;
    }
    out = static_cast<uint64_t>(m);
    return true;
}

}  // namespace detail

// ---- branch constants -------------------------------------------------

struct BranchConstants {
    int l = 0;        // a + l = 0 mod p, l in [0,p)
    long long q = 0;  // 4 when p = 2, else p
    int l_prime = 0;  // a + l' = 0 mod q, l' in [0,q)
    int e = 0;        // l' - floor(l'/p); equals l for odd p
};

inline void require_param_a(const Rational& a, long long p) {
    if (!is_p_integral(a, p))
        throw invalid_params("a is not p-integral: " + rat_str(a));
    if (rat_den(a) == 1 && rat_num(a) <= 0)
        throw invalid_params("a must avoid the non-positive integers");
}

inline BranchConstants branch_constants(const Rational& a, long long p) {
    require_param_a(a, p);
    BranchConstants bc;
    bc.q = (p == 2) ? 4 : p;
    long long ap = reduce(a, p, 1).res.convert_to<long long>();
    bc.l = static_cast<int>((p - ap) % p);
    if (p == 2) {
        long long aq = reduce(a, 2, 2).res.convert_to<long long>();
        bc.l_prime = static_cast<int>((4 - aq) % 4);
    } else {
        bc.l_prime = bc.l;
    }
    bc.e = bc.l_prime - bc.l_prime / static_cast<int>(p);
    return bc;
}

}  // namespace padichg
