#include "conescale/matrix.hpp"

#include <Eigen/Dense>

#include "conescale/errors.hpp"

namespace conescale {

namespace {

Eigen::MatrixXd to_eigen(const Matrix& m) {
    Eigen::MatrixXd e(static_cast<Eigen::Index>(m.rows), static_cast<Eigen::Index>(m.cols));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
    return e;
}

Matrix from_eigen(const Eigen::MatrixXd& e) {
    Matrix m(static_cast<std::size_t>(e.rows()), static_cast<std::size_t>(e.cols()));
    for (Eigen::Index i = 0; i < e.rows(); ++i)
        for (Eigen::Index j = 0; j < e.cols(); ++j)
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = e(i, j);
    return m;
}

}  // namespace

Matrix Matrix::from_rows(const std::vector<Vec>& r) {
    if (r.empty()) throw DomainError("Matrix::from_rows: empty row list");
    Matrix m(r.size(), r[0].size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i].size() != m.cols) throw DimensionError("Matrix::from_rows: ragged rows");
        for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = r[i][j];
    }
    return m;
}

Vec matvec(const Matrix& m, const Vec& x) {
    require_dim("matvec", x, m.cols);
    Vec y(m.rows, 0.0);
    for (std::size_t i = 0; i < m.rows; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < m.cols; ++j) s += m(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

std::size_t rank(const Matrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(to_eigen(m));
    lu.setThreshold(1e-10);
    return static_cast<std::size_t>(lu.rank());
}

double det(const Matrix& m) {
    if (!m.square()) throw DimensionError("det: matrix must be square");
    return to_eigen(m).determinant();
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (!m.square()) throw DimensionError("solve: matrix must be square");
    require_dim("solve", b, m.rows);
    Eigen::MatrixXd a = to_eigen(m);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    lu.setThreshold(1e-12);
    if (!lu.isInvertible()) return std::nullopt;
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(b.size()));
    for (std::size_t i = 0; i < b.size(); ++i) rhs(static_cast<Eigen::Index>(i)) = b[i];
    Eigen::VectorXd x = lu.solve(rhs);
    Vec out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = x(static_cast<Eigen::Index>(i));
    return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.square()) throw DimensionError("inverse: matrix must be square");
    Eigen::FullPivLU<Eigen::MatrixXd> lu(to_eigen(m));
    lu.setThreshold(1e-12);
    if (!lu.isInvertible()) return std::nullopt;
    return from_eigen(lu.inverse());
}

double cond_inf(const Matrix& m) {
    auto inv = inverse(m);
    if (!inv) return std::numeric_limits<double>::infinity();
    auto row_norm = [](const Matrix& a) {
        double best = 0.0;
        for (std::size_t i = 0; i < a.rows; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < a.cols; ++j) s += std::fabs(a(i, j));
            best = std::max(best, s);
        }
        return best;
    };
    return row_norm(m) * row_norm(*inv);
}

}  // namespace conescale
