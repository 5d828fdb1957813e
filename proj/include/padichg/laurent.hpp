#pragma once
// Sparse Laurent polynomials over Z_p: degree -> ball, kept in degree order
// so every scan and report is deterministic.  Missing degrees are exact zeros.

#include "series.hpp"

#include <map>
#include <optional>

namespace padichg {

struct LaurentPoly {
    long long p = 0;
    std::map<long long, PadicBall> coeff;
};

struct LaurentDiff {
    long long degree = 0;
    BigInt lhs;
    BigInt rhs;
};

inline LaurentPoly laurent_from_series(const PowerSeries& f) {
    LaurentPoly out;
    out.p = f.p;
    for (std::size_t k = 0; k < f.size(); ++k)
        out.coeff.emplace(static_cast<long long>(k), f.coeff[k]);
    return out;
}

// the involution t -> t^{-1}
inline LaurentPoly omega(const LaurentPoly& f) {
    LaurentPoly out;
    out.p = f.p;
    for (const auto& [d, x] : f.coeff) out.coeff.emplace(-d, x);
    return out;
}

// multiply by u * t^shift with u = +-1
inline LaurentPoly laurent_shift_scale(const LaurentPoly& f, long long shift, int sign) {
    LaurentPoly out;
    out.p = f.p;
    for (const auto& [d, x] : f.coeff)
        out.coeff.emplace(d + shift, sign < 0 ? ball_neg(x) : x);
    return out;
}

inline LaurentPoly laurent_mul(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.p != g.p) throw invalid_params("laurent_mul: prime mismatch");
    LaurentPoly out;
    out.p = f.p;
    for (const auto& [d1, x] : f.coeff)
        for (const auto& [d2, y] : g.coeff) {
            PadicBall t = ball_mul(x, y);
            auto [it, fresh] = out.coeff.emplace(d1 + d2, t);
            if (!fresh) it->second = ball_add(it->second, t);
        }
    return out;
}

inline LaurentPoly laurent_add(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.p != g.p) throw invalid_params("laurent_add: prime mismatch");
    LaurentPoly out = f;
    for (const auto& [d, y] : g.coeff) {
        auto [it, fresh] = out.coeff.emplace(d, y);
        if (!fresh) it->second = ball_add(it->second, y);
    }
    return out;
}

// smallest degree where f and g differ mod p^n (absent entries are zero)
inline std::optional<LaurentDiff> laurent_first_diff_mod(const LaurentPoly& f,
                                                         const LaurentPoly& g, int n) {
    if (f.p != g.p) throw invalid_params("laurent_first_diff_mod: prime mismatch");
    auto it = f.coeff.begin();
    auto jt = g.coeff.begin();
    while (it != f.coeff.end() || jt != g.coeff.end()) {
        long long d;
        BigInt lv = 0, rv = 0;
        bool take_l = it != f.coeff.end() &&
                      (jt == g.coeff.end() || it->first <= jt->first);
        bool take_r = jt != g.coeff.end() &&
                      (it == f.coeff.end() || jt->first <= it->first);
        d = take_l ? it->first : jt->first;
        if (take_l) lv = ball_residue_mod(it++->second, n);
        if (take_r) rv = ball_residue_mod(jt++->second, n);
        if (lv != rv) return LaurentDiff{d, lv, rv};
    }
    return std::nullopt;
}

// smallest degree with a nonzero residue mod p^n
inline std::optional<LaurentDiff> laurent_first_nonzero_mod(const LaurentPoly& f, int n) {
    for (const auto& [d, x] : f.coeff) {
        BigInt r = ball_residue_mod(x, n);
        if (r != 0) return LaurentDiff{d, r, 0};
    }
    return std::nullopt;
}

}  // namespace padichg
