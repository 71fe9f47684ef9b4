#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "conescale/vec.hpp"

namespace conescale {

/// Small dense row-major matrix. Everything in this library lives in low
/// dimensions, so the factorization helpers below are thin wrappers over a
/// dense LU.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    /// Build from a list of rows; throws on ragged input.
    static Matrix from_rows(const std::vector<Vec>& r);

    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }

    bool square() const { return rows == cols; }
};

Vec matvec(const Matrix& m, const Vec& x);

/// Numerical rank of the row set (partial-pivot LU with a relative threshold).
std::size_t rank(const Matrix& m);

double det(const Matrix& m);

/// Solve m*x = b; nullopt when m is numerically singular.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

std::optional<Matrix> inverse(const Matrix& m);

/// Infinity-norm condition estimate ||m||*||m^-1||; +inf when singular.
double cond_inf(const Matrix& m);

}  // namespace conescale
