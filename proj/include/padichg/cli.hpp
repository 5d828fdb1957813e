#pragma once
// Command surface.  Exit codes: 0 = all checks pass, 1 = counterexample
// found, 2 = computation could not produce trusted digits, 3 = invalid
// parameters or command line.  Output is deterministic: reruns produce
// byte-identical payloads except for elapsed_ms.

#include "hypergeom.hpp"
#include "report_json.hpp"
#include "verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace padichg {

namespace detail {

// c accepts "1+p", "1-p", "1+K*p", "1-K*p" sugar resolved against p,
// alongside plain rationals
inline Rational parse_c_spec(const std::string& tok, long long p) {
    if (tok.size() >= 3 && tok[0] == '1' && (tok[1] == '+' || tok[1] == '-') && tok.back() == 'p') {
        std::string mid = tok.substr(2, tok.size() - 3);
        BigInt k = 1;
        bool sugar = true;
        if (!mid.empty()) {
            if (mid.back() == '*') mid.pop_back();
            if (mid.empty() || mid.find_first_not_of("0123456789") != std::string::npos)
                sugar = false;
            else
                k = BigInt(mid);
        }
        if (sugar) {
            BigInt off = k * p;
            return Rational(tok[1] == '+' ? BigInt(1) + off : BigInt(1) - off);
        }
    }
    return parse_rational(tok);
}

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ',')) {
        if (!cur.empty()) out.push_back(cur);
    }
    if (out.empty()) throw invalid_params("empty list");
    return out;
}

inline long long parse_ll(const std::string& s) {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw invalid_params("not an integer: " + s);
    return v;
}

struct CheckKnobs {
    long long mmax = 30;       // sm
    long long pairs = 100;     // lipschitz
    long long kmax = 0;        // lipschitz; 0 resolves to 2*p^n + 60
    uint64_t seed = 12345;     // lipschitz
    int blal_l = 0;            // blal
    long long blal_d = 1;      // blal
};

inline VerifyReport dispatch_check(const std::string& check, const HGParams& par,
                                   const CheckKnobs& knobs, const FaultSpec& fault) {
    if (check == "hat") return check_congruence(CongruenceKind::hat, par, fault);
    if (check == "log") return check_congruence(CongruenceKind::log_type, par, fault);
    if (check == "dwork") return check_congruence(CongruenceKind::dwork, par, fault);
    if (check == "factor") return check_trunc_factorization(par.a, par.s, par.p, par.n, fault);
    if (check == "reflect") return check_reflection_unit(par.a, par.s, par.p, fault);
    if (check == "transform-log") return check_transform_log(par, fault);
    if (check == "transform-dwork") return check_transform_dwork(par, fault);
    if (check == "sm") return check_sm(par, knobs.mmax, fault);
    if (check == "lipschitz") {
        long long kmax = knobs.kmax;
        if (kmax == 0) kmax = 2 * pow_pk(par.p, par.n).convert_to<long long>() + 60;
        return check_lipschitz(par, knobs.pairs, kmax, knobs.seed, fault);
    }
    if (check == "blal") return check_blal(par.p, par.n, knobs.blal_l, knobs.blal_d, fault);
    throw invalid_params("unknown check: " + check);
}

inline const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{
        "hat",  "log",  "dwork",     "factor",        "lipschitz",
        "blal", "sm",   "reflect",   "transform-log", "transform-dwork"};
    return names;
}

struct ScanCounts {
    long long pass = 0, fail = 0, conjectural_pass = 0, conjectural_fail = 0, error = 0;
};

inline void scan_emit(std::ostream& out, const VerifyReport& rep, ScanCounts& counts) {
    out << report_to_json(rep).dump() << "\n";
    if (rep.conjectural)
        (rep.pass ? counts.conjectural_pass : counts.conjectural_fail) += 1;
    else
        (rep.pass ? counts.pass : counts.fail) += 1;
}

inline void scan_emit_error(std::ostream& out, const std::string& check, const HGParams& par,
                            const std::string& message, ScanCounts& counts) {
    ordered_json j;
    j["check"] = check;
    j["params"] = params_to_json(par);
    j["error"] = message;
    out << j.dump() << "\n";
    counts.error += 1;
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact p-adic hypergeometric coefficients, function values and identity checks",
                 "padichg"};
    app.require_subcommand(1);

    // shared parameter surface; rationals arrive as strings and are parsed
    // after CLI11 so the c sugar can see p
    long long p = 0;
    std::string a_str;
    int s = 1;
    std::string c_str = "1";
    int n = 1;
    long long deg = 0;  // 0 -> default window 2p^n + 2p
    int prec = 0;       // 0 -> default working precision
    std::string out_path;
    long long fault_deg = 0;
    long long fault_at = 0;
    detail::CheckKnobs knobs;

    auto add_common = [&](CLI::App* cmd, bool need_a) {
        cmd->add_option("--p", p, "prime")->required();
        auto* ao = cmd->add_option("--a", a_str, "parameter a, a rational like 1/3 or 22");
        if (need_a) ao->required();
        cmd->add_option("--s", s, "exponent s >= 1");
        cmd->add_option("--c", c_str, "twist constant; rational or 1+k*p sugar");
        cmd->add_option("--n", n, "congruence exponent n >= 1");
        cmd->add_option("--deg", deg, "degree window M (default 2p^n + 2p)");
        cmd->add_option("--prec", prec, "working precision override");
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    };

    CLI::App* coeffs_cmd = app.add_subcommand("coeffs", "CSV table of A_k and B_k coefficients");
    add_common(coeffs_cmd, true);

    CLI::App* fn_cmd = app.add_subcommand("fn", "series expansion of one of the functions");
    std::string fn_which;
    std::string fn_format = "text";
    fn_cmd->add_option("kind", fn_which, "which function: hat, log or dwork")
        ->required()
        ->check(CLI::IsMember({"hat", "log", "dwork"}));
    add_common(fn_cmd, true);
    fn_cmd->add_option("--format", fn_format, "text (base-p digits), json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    CLI::App* verify_cmd = app.add_subcommand("verify", "run one identity check");
    std::string check_name;
    verify_cmd->add_option("check", check_name, "which check")
        ->required()
        ->check(CLI::IsMember(detail::check_names()));
    add_common(verify_cmd, false);
    verify_cmd->add_option("--mmax", knobs.mmax, "sm: largest sum index");
    verify_cmd->add_option("--pairs", knobs.pairs, "lipschitz: number of sampled pairs");
    verify_cmd->add_option("--kmax", knobs.kmax, "lipschitz: index bound (default 2p^n + 60)");
    verify_cmd->add_option("--seed", knobs.seed, "lipschitz: RNG seed");
    verify_cmd->add_option("--l", knobs.blal_l, "blal: branch index l in [0, p)");
    verify_cmd->add_option("--d", knobs.blal_d, "blal: unit multiplier d");
    auto* verify_fault =
        verify_cmd->add_option("--inject-fault", fault_deg, "negative control: perturb one residue");

    CLI::App* scan_cmd = app.add_subcommand("scan", "run one check over a parameter grid (JSONL)");
    std::string scan_check;
    std::string p_list, a_list = "1", s_list = "1", c_list = "1", n_list = "1";
    scan_cmd->add_option("--check", scan_check, "which check")
        ->required()
        ->check(CLI::IsMember(detail::check_names()));
    scan_cmd->add_option("--p", p_list, "comma list of primes")->required();
    scan_cmd->add_option("--a", a_list, "comma list of rationals");
    scan_cmd->add_option("--s", s_list, "comma list of exponents");
    scan_cmd->add_option("--c", c_list, "comma list of twist constants (sugar allowed)");
    scan_cmd->add_option("--n", n_list, "comma list of congruence exponents");
    scan_cmd->add_option("--deg", deg, "degree window override for every point");
    scan_cmd->add_option("--prec", prec, "working precision override for every point");
    scan_cmd->add_option("--out", out_path, "write JSONL to a file instead of stdout");
    scan_cmd->add_option("--mmax", knobs.mmax, "sm: largest sum index");
    scan_cmd->add_option("--pairs", knobs.pairs, "lipschitz: number of sampled pairs");
    scan_cmd->add_option("--kmax", knobs.kmax, "lipschitz: index bound (default 2p^n + 60)");
    scan_cmd->add_option("--seed", knobs.seed, "lipschitz: RNG seed");
    scan_cmd->add_option("--d", knobs.blal_d, "blal: unit multiplier d (l runs over [0, p))");
    auto* scan_fault =
        scan_cmd->add_option("--inject-fault", fault_deg, "negative control: perturb one residue");
    scan_cmd->add_option("--fault-at", fault_at, "grid index receiving the fault (default 0)");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 3;
    }

    // file redirection is resolved once; everything below writes to *sink
    std::ofstream file_out;
    std::ostream* sink = &out;
    if (!out_path.empty()) {
        file_out.open(out_path, std::ios::binary);
        if (!file_out) {
            err << "error: cannot open output file: " << out_path << "\n";
            return 3;
        }
        sink = &file_out;
    }

    try {
        if (coeffs_cmd->parsed() || fn_cmd->parsed()) {
            HGParams par;
            par.p = p;
            par.a = parse_rational(a_str);
            par.s = s;
            par.c = detail::parse_c_spec(c_str, p);
            par.n = n;
            par.M = deg;
            par.N_w = prec;
            if (fn_cmd->parsed() && fn_which == "dwork") par.c = 1;
            HGContext ctx = make_context(par);

            if (coeffs_cmd->parsed()) {
                PowerSeries B = series_G_hat(ctx);
                *sink << "k,A_k,v_p,B_k,prec\n";
                for (std::size_t k = 0; k < B.size(); ++k) {
                    const Rational& Ak = ctx.A[k];
                    *sink << k << "," << rat_str(Ak) << "," << valuation(Ak, ctx.par.p) << ","
                          << ball_residue_mod(B.coeff[k], ctx.par.n) << "," << B.coeff[k].prec
                          << "\n";
                }
                return 0;
            }

            PowerSeries f = fn_which == "hat"   ? fn_hat(ctx)
                            : fn_which == "log" ? fn_log(ctx)
                                                : fn_dwork(ctx);
            if (fn_format == "json") {
                *sink << series_to_json(f, ctx.par.n).dump(2) << "\n";
            } else if (fn_format == "csv") {
                *sink << "k,residue\n";
                for (std::size_t k = 0; k < f.size(); ++k)
                    *sink << k << "," << ball_residue_mod(f.coeff[k], ctx.par.n) << "\n";
            } else {
                for (std::size_t k = 0; k < f.size(); ++k)
                    *sink << k << "\t" << ball_digits(f.coeff[k]) << "\n";
            }
            return 0;
        }

        if (verify_cmd->parsed()) {
            bool needs_a = check_name != "blal";
            if (needs_a && a_str.empty())
                throw invalid_params("--a is required for check '" + check_name + "'");
            HGParams par;
            par.p = p;
            par.a = needs_a ? parse_rational(a_str) : Rational(1);
            par.s = s;
            par.c = detail::parse_c_spec(c_str, p);
            par.n = n;
            par.M = deg;
            par.N_w = prec;
            FaultSpec fault;
            if (verify_fault->count() > 0) fault = FaultSpec{true, fault_deg};
            VerifyReport rep = detail::dispatch_check(check_name, par, knobs, fault);
            *sink << report_to_json(rep).dump(2) << "\n";
            return rep.pass ? 0 : 1;
        }

        // scan: fixed expansion order p -> a -> s -> c -> n (blal: p -> n -> l);
        // invalid combinations are skipped silently, runtime errors become
        // JSONL error lines, and a trailing summary carries the counts
        detail::ScanCounts counts;
        std::vector<std::string> ps = detail::split_list(p_list);
        std::vector<std::string> as = detail::split_list(a_list);
        std::vector<std::string> ss = detail::split_list(s_list);
        std::vector<std::string> cs = detail::split_list(c_list);
        std::vector<std::string> ns = detail::split_list(n_list);
        long long point = 0;
        auto run_point = [&](const HGParams& par) {
            FaultSpec fault;
            if (scan_fault->count() > 0 && point == fault_at) fault = FaultSpec{true, fault_deg};
            long long this_point = point;
            ++point;
            try {
                detail::scan_emit(*sink, detail::dispatch_check(scan_check, par, knobs, fault),
                                  counts);
            } catch (const invalid_params&) {
                point = this_point;  // skipped points do not consume grid indices
            } catch (const std::exception& e) {
                detail::scan_emit_error(*sink, scan_check, par, e.what(), counts);
            }
        };
        if (scan_check == "blal") {
            for (const std::string& pt : ps) {
                long long pp = detail::parse_ll(pt);
                for (const std::string& nt : ns) {
                    for (long long l = 0; l < pp; ++l) {
                        HGParams par;
                        par.p = pp;
                        par.n = static_cast<int>(detail::parse_ll(nt));
                        knobs.blal_l = static_cast<int>(l);
                        run_point(par);
                    }
                }
            }
        } else {
            for (const std::string& pt : ps) {
                long long pp = detail::parse_ll(pt);
                for (const std::string& at : as) {
                    for (const std::string& st : ss) {
                        for (const std::string& ct : cs) {
                            for (const std::string& nt : ns) {
                                HGParams par;
                                par.p = pp;
                                try {
                                    par.a = parse_rational(at);
                                    par.s = static_cast<int>(detail::parse_ll(st));
                                    par.c = detail::parse_c_spec(ct, pp);
                                    par.n = static_cast<int>(detail::parse_ll(nt));
                                } catch (const std::exception&) {
                                    continue;  // malformed entry for this p: skip
                                }
                                par.M = deg;
                                par.N_w = prec;
                                run_point(par);
                            }
                        }
                    }
                }
            }
        }
        ordered_json summary;
        summary["pass"] = counts.pass;
        summary["fail"] = counts.fail;
        summary["conjectural_pass"] = counts.conjectural_pass;
        summary["conjectural_fail"] = counts.conjectural_fail;
        summary["error"] = counts.error;
        *sink << summary.dump() << "\n";
        if (counts.fail + counts.conjectural_fail > 0) return 1;
        if (counts.error > 0) return 2;
        return 0;
    } catch (const invalid_params& e) {
        err << "error: invalid parameters: " << e.what() << "\n";
        return 3;
    } catch (const precision_error& e) {
        err << "error: insufficient precision: " << e.what() << "\n";
        return 2;
    } catch (const nonintegral_error& e) {
        err << "error: non-integral quotient: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace padichg
