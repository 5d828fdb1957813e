#pragma once
// Exact big-rational ground arithmetic plus p-adic valuations.
// Backed by Boost.Multiprecision (header-only); everything here is exact.

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <stdexcept>
#include <string>

namespace padichg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// parameter/domain violations -> CLI exit 3
struct invalid_params : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
// a result would carry fewer verified digits than requested -> CLI exit 2
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// a quotient that should land in Z_p does not; indicates a broken invariant
struct nonintegral_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline BigInt rat_num(const Rational& x) { return boost::multiprecision::numerator(x); }
inline BigInt rat_den(const Rational& x) { return boost::multiprecision::denominator(x); }

inline BigInt pow_pk(long long p, int k) {
    // p^k as a big integer, k >= 0
    if (k < 0) throw invalid_params("pow_pk: negative exponent");
    return boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(k));
}

// sentinel returned by valuation() for x = 0
inline constexpr int VAL_INF = std::numeric_limits<int>::max();

inline int valuation(const BigInt& x, long long p) {
    if (x == 0) return VAL_INF;
    BigInt n = x;
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

inline int valuation(const Rational& x, long long p) {
    if (x == 0) return VAL_INF;
    return valuation(rat_num(x), p) - valuation(rat_den(x), p);
}

inline bool is_p_integral(const Rational& x, long long p) {
    return rat_den(x) % p != 0;
}

inline Rational rat_pow_int(const Rational& x, int e) {
    if (e < 0) {
        if (x == 0) throw invalid_params("rat_pow_int: zero to negative power");
        return rat_pow_int(Rational(1) / x, -e);
    }
    Rational r = 1, b = x;
    for (; e; e >>= 1, b *= b)
        if (e & 1) r *= b;
    return r;
}

// parses "u/v" or "u" with optional sign; canonical form is automatic
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw invalid_params("empty rational literal");
    auto bad = [&] { throw invalid_params("bad rational literal: " + s); };
    auto digits = [&](size_t from, size_t to) {
        if (from >= to) bad();
        for (size_t i = from; i < to; ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) bad();
        return BigInt(s.substr(from, to - from));
    };
    size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    size_t slash = s.find('/');
    BigInt n, d = 1;
    if (slash == std::string::npos) {
        n = digits(start, s.size());
    } else {
        n = digits(start, slash);
        d = digits(slash + 1, s.size());
        if (d == 0) throw invalid_params("zero denominator: " + s);
    }
    Rational r(n, d);
    if (s[0] == '-') r = -r;
    return r;
}

inline std::string rat_str(const Rational& x) {
    BigInt n = rat_num(x), d = rat_den(x);
    return d == 1 ? n.str() : n.str() + "/" + d.str();
}

}  // namespace padichg
