#pragma once
// JSON renderings with a frozen key order so that reruns are byte-identical.

#include "series.hpp"
#include "verify.hpp"

#include <json.hpp>

#include <string>

namespace padichg {

using ordered_json = nlohmann::ordered_json;

namespace detail {

// residues and moduli stay below the desk-scale bound, so they fit a JSON
// number exactly; fall back to a string if anything ever exceeds 2^53
inline ordered_json bigint_json(const BigInt& v) {
    if (v >= -(BigInt(1) << 53) && v <= (BigInt(1) << 53))
        return ordered_json(v.convert_to<long long>());
    return ordered_json(v.str());
}

}  // namespace detail

inline ordered_json params_to_json(const HGParams& par) {
    ordered_json j;
    j["p"] = par.p;
    j["a"] = rat_str(par.a);
    j["s"] = par.s;
    j["c"] = rat_str(par.c);
    j["n"] = par.n;
    j["M"] = par.M;
    j["N_w"] = par.N_w;
    return j;
}

inline ordered_json report_to_json(const VerifyReport& rep) {
    ordered_json j;
    j["check"] = rep.check;
    j["params"] = params_to_json(rep.params);
    j["pass"] = rep.pass;
    j["conjectural"] = rep.conjectural;
    j["modulus"] = detail::bigint_json(rep.modulus);
    j["degrees_checked"] = ordered_json::array({rep.deg_lo, rep.deg_hi});
    if (rep.first_failure) {
        ordered_json f;
        f["degree"] = rep.first_failure->degree;
        f["lhs"] = detail::bigint_json(rep.first_failure->lhs);
        f["rhs"] = detail::bigint_json(rep.first_failure->rhs);
        j["first_failure"] = f;
    } else {
        j["first_failure"] = nullptr;
    }
    j["elapsed_ms"] = rep.elapsed_ms;
    return j;
}

// power series as {p, precision, coeffs}; residues as decimal integers
inline ordered_json series_to_json(const PowerSeries& f, int n) {
    ordered_json j;
    j["p"] = f.p;
    j["precision"] = n;
    ordered_json coeffs = ordered_json::array();
    for (const PadicBall& x : f.coeff) coeffs.push_back(detail::bigint_json(ball_residue_mod(x, n)));
    j["coeffs"] = coeffs;
    return j;
}

// Laurent polynomial as {p, precision, offset, coeffs}: coeffs[i] is the
// residue at degree offset + i
inline ordered_json laurent_to_json(const LaurentPoly& f, int n) {
    ordered_json j;
    j["p"] = f.p;
    j["precision"] = n;
    long long lo = 0, hi = -1;
    if (!f.coeff.empty()) {
        lo = f.coeff.begin()->first;
        hi = f.coeff.rbegin()->first;
    }
    j["offset"] = lo;
    ordered_json coeffs = ordered_json::array();
    for (long long d = lo; d <= hi; ++d) {
        auto it = f.coeff.find(d);
        coeffs.push_back(it == f.coeff.end() ? ordered_json(0)
                                             : detail::bigint_json(ball_residue_mod(it->second, n)));
    }
    j["coeffs"] = coeffs;
    return j;
}

}  // namespace padichg
