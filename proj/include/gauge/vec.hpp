#pragma once

#include <string>
#include <vector>

#include "gauge/scalar.hpp"

namespace gauge {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>; // row-major

inline void check_dim(const Vec& a, const Vec& b) {
    require(a.size() == b.size(), errc::dimension_mismatch, "vector sizes differ");
}

inline Vec zero_vec(std::size_t n) { return Vec(n, Scalar(0)); }

inline Vec unit_vec(std::size_t n, std::size_t i) {
    Vec e = zero_vec(n);
    e[i] = 1;
    return e;
}

inline Scalar dot(const Vec& a, const Vec& b) {
    check_dim(a, b);
    Scalar s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec add(const Vec& a, const Vec& b) {
    check_dim(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    check_dim(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec scaled(const Vec& a, const Scalar& s) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

inline Vec negated(const Vec& a) { return scaled(a, Scalar(-1)); }

inline bool is_zero_vec(const Vec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

inline bool lex_less(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return a.size() < b.size();
}

struct VecLexLess {
    bool operator()(const Vec& a, const Vec& b) const { return lex_less(a, b); }
};

inline std::string vec_string(const Vec& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ", ";
        s += scalar_string(a[i]);
    }
    return s + ")";
}

} // namespace gauge
