#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "conescale/errors.hpp"

namespace conescale {

/// Dense vector in R^m. Finiteness is enforced at the public API boundaries
/// (cone oracles, scalarization, JSON parsing) rather than by a wrapper type.
using Vec = std::vector<double>;

inline bool all_finite(const Vec& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

inline void require_finite(std::string_view what, const Vec& v) {
    if (!all_finite(v)) throw DomainError(std::string(what) + ": entries must be finite");
}

inline void require_dim(std::string_view what, const Vec& v, std::size_t dim) {
    if (v.size() != dim)
        throw DimensionError(std::string(what) + ": expected dimension " + std::to_string(dim) +
                             ", got " + std::to_string(v.size()));
}

inline Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec scale(double s, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

/// a + s*b without a temporary per call site.
inline Vec axpy(const Vec& a, double s, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + s * b[i];
    return r;
}

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm_inf(const Vec& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

inline double norm2(const Vec& v) { return std::sqrt(dot(v, v)); }

inline bool is_zero(const Vec& v) {
    for (double x : v)
        if (x != 0.0) return false;
    return true;
}

inline Vec zeros(std::size_t n) { return Vec(n, 0.0); }

inline Vec ones(std::size_t n) { return Vec(n, 1.0); }

}  // namespace conescale
