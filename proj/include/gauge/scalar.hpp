#pragma once

#include <gmpxx.h>

#include <string>

#include "gauge/errors.hpp"

namespace gauge {

// Exact rational scalar. mpq_class keeps values in lowest terms with a
// positive denominator through all arithmetic.
using Scalar = mpq_class;

inline Scalar scalar(long num, long den = 1) {
    require(den != 0, errc::bad_params, "zero denominator");
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

inline int sign_of(const Scalar& x) { return sgn(x); }

inline Scalar abs_of(const Scalar& x) { return x < 0 ? Scalar(-x) : x; }

// Parses "p/q" or "p" (base 10, locale independent).
Scalar parse_scalar(const std::string& token);

// "p/q" for non-integers, "p" otherwise. Round-trips through parse_scalar.
std::string scalar_string(const Scalar& x);

// Display-only decimal approximation, rounded half away from zero.
std::string decimal_string(const Scalar& x, int digits = 12);

inline Scalar parse_scalar(const std::string& token) {
    if (token.empty()) fail(errc::parse_error, "empty rational token");
    // mpq_class::set_str accepts junk like "1/2/3" prefixes in some corner
    // cases and also hex with 0x; validate the shape ourselves.
    std::size_t slash = token.find('/');
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!is_int(token)) fail(errc::parse_error, "bad rational token '" + token + "'");
    } else {
        std::string num = token.substr(0, slash), den = token.substr(slash + 1);
        if (!is_int(num) || !is_int(den) || den[0] == '-')
            fail(errc::parse_error, "bad rational token '" + token + "'");
    }
    Scalar q;
    if (q.set_str(token, 10) != 0) fail(errc::parse_error, "bad rational token '" + token + "'");
    if (q.get_den() == 0) fail(errc::parse_error, "zero denominator in '" + token + "'");
    q.canonicalize();
    return q;
}

inline std::string scalar_string(const Scalar& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline std::string decimal_string(const Scalar& x, int digits) {
    if (digits < 0) digits = 0;
    mpz_class num = x.get_num(), den = x.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    mpz_class pow10 = 1;
    for (int i = 0; i < digits; ++i) pow10 *= 10;
    // round(|x| * 10^digits), half away from zero
    mpz_class scaled_twice = num * pow10 * 2 + den;
    mpz_class scaled = scaled_twice / (den * 2);
    mpz_class ip = scaled / pow10, fp = scaled % pow10;
    std::string out = (neg && scaled != 0) ? "-" : "";
    out += ip.get_str();
    if (digits > 0) {
        std::string frac = fp.get_str();
        out += "." + std::string(digits - frac.size(), '0') + frac;
    }
    return out;
}

} // namespace gauge
