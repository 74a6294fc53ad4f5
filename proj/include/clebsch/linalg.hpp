#pragma once

// Small dense kernels used by the coefficient solver. Decompositions are
// delegated to Eigen; the row-echelon and Gram-Schmidt steps are written out
// because their exact conventions fix the multiplicity basis.

#include "clebsch/detail.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace clebsch::linalg {

class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), values_(rows * cols, 0.0) {}

    DenseMatrix(std::initializer_list<std::initializer_list<double>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        for (const auto& r : init) {
            if (r.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
            values_.insert(values_.end(), r.begin(), r.end());
        }
    }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return values_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return values_[i * cols_ + j]; }

    std::span<double> row(std::size_t i) { return {values_.data() + i * cols_, cols_}; }
    std::span<const double> row(std::size_t i) const { return {values_.data() + i * cols_, cols_}; }

    const std::vector<double>& values() const { return values_; }

    DenseMatrix transpose() const {
        DenseMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : values_) m = std::max(m, std::abs(v));
        return m;
    }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> values_;
};

inline DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product extent mismatch");
    DenseMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

inline DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix extent mismatch");
    DenseMatrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
    return c;
}

inline DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix extent mismatch");
    DenseMatrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
    return c;
}

inline DenseMatrix operator*(double s, const DenseMatrix& a) {
    DenseMatrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
    return c;
}

// Infinity norm (max absolute row sum).
inline double norm_inf(const DenseMatrix& a) {
    double n = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (double v : a.row(i)) s += std::abs(v);
        n = std::max(n, s);
    }
    return n;
}

namespace detail {

using EigenMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline EigenMatrix to_eigen(const DenseMatrix& a) {
    EigenMatrix m(static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j);
    return m;
}

template <typename Derived>
DenseMatrix from_eigen(const Eigen::MatrixBase<Derived>& m) {
    DenseMatrix a(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
    return a;
}

} // namespace detail

// Orthonormal basis (as rows) of {x : A x = 0}. Singular values at or below
// tol times the largest one count as zero.
inline DenseMatrix null_space(const DenseMatrix& a, double tol = 1e-12) {
    const std::size_t n = a.cols();
    if (a.rows() == 0 || a.max_abs() == 0.0) {
        return DenseMatrix::identity(n);
    }
    Eigen::JacobiSVD<detail::EigenMatrix> svd(detail::to_eigen(a), Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cutoff = tol * sv(0);
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) rank += sv(i) > cutoff ? 1 : 0;
    const auto& v = svd.matrixV();
    DenseMatrix basis(n - rank, n);
    for (std::size_t r = rank; r < n; ++r)
        for (std::size_t j = 0; j < n; ++j)
            basis(r - rank, j) = v(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(r));
    return basis;
}

// Reduced row echelon form by Gauss-Jordan elimination with partial pivoting.
// Rows are first scaled to unit max-norm; a column becomes a pivot column
// when its largest remaining entry exceeds tol. Pivots are scaled to +1.
inline DenseMatrix rref(DenseMatrix a, double tol = 1e-10) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    for (std::size_t i = 0; i < rows; ++i) {
        double m = 0.0;
        for (double v : a.row(i)) m = std::max(m, std::abs(v));
        if (m > 0.0)
            for (double& v : a.row(i)) v /= m;
    }
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t best = pivot_row;
        for (std::size_t i = pivot_row + 1; i < rows; ++i)
            if (std::abs(a(i, c)) > std::abs(a(best, c))) best = i;
        if (std::abs(a(best, c)) <= tol) {
            for (std::size_t i = pivot_row; i < rows; ++i) a(i, c) = 0.0;
            continue;
        }
        if (best != pivot_row)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(best, j), a(pivot_row, j));
        const double p = a(pivot_row, c);
        for (std::size_t j = 0; j < cols; ++j) a(pivot_row, j) /= p;
        a(pivot_row, c) = 1.0;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pivot_row) continue;
            const double f = a(i, c);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < cols; ++j) a(i, j) -= f * a(pivot_row, j);
            a(i, c) = 0.0;
        }
        ++pivot_row;
    }
    for (std::size_t i = pivot_row; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a(i, j) = 0.0;
    return a;
}

// Modified Gram-Schmidt over the rows, top to bottom.
inline DenseMatrix orthonormalize_rows(DenseMatrix a, double tol = 1e-10) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto ri = a.row(i);
        double scale = 0.0;
        for (double v : ri) scale += v * v;
        scale = std::sqrt(scale);
        for (std::size_t j = 0; j < i; ++j) {
            auto rj = a.row(j);
            double overlap = 0.0;
            for (std::size_t c = 0; c < a.cols(); ++c) overlap += ri[c] * rj[c];
            for (std::size_t c = 0; c < a.cols(); ++c) ri[c] -= overlap * rj[c];
        }
        double norm = 0.0;
        for (double v : ri) norm += v * v;
        norm = std::sqrt(norm);
        if (norm <= tol * std::max(scale, 1.0) || norm == 0.0) {
            throw std::invalid_argument("orthonormalize_rows: rows are linearly dependent");
        }
        for (double& v : ri) v /= norm;
    }
    return a;
}

struct LeastSquaresResult {
    DenseMatrix x;    // cols(A) x cols(B)
    double residual;  // Frobenius norm of A x - B
};

// Minimizes |A X - B| column by column. A must have full column rank.
inline LeastSquaresResult least_squares(const DenseMatrix& a, const DenseMatrix& b, double rank_tol = 1e-10) {
    if (a.rows() != b.rows()) throw std::invalid_argument("least_squares: row count mismatch");
    if (a.rows() < a.cols()) throw std::invalid_argument("least_squares: underdetermined system");
    if (a.cols() == 0) {
        double s = 0.0;
        for (double v : b.values()) s += v * v;
        return {DenseMatrix(0, b.cols()), std::sqrt(s)};
    }
    const auto ea = detail::to_eigen(a);
    Eigen::ColPivHouseholderQR<detail::EigenMatrix> qr(ea);
    qr.setThreshold(rank_tol);
    if (static_cast<std::size_t>(qr.rank()) < a.cols()) {
        throw std::invalid_argument("least_squares: matrix is rank deficient");
    }
    const auto eb = detail::to_eigen(b);
    const detail::EigenMatrix ex = qr.solve(eb);
    const double residual = (ea * ex - eb).norm();
    return {detail::from_eigen(ex), residual};
}

struct VectorLeastSquares {
    std::vector<double> x;
    double residual;
};

inline VectorLeastSquares least_squares(const DenseMatrix& a, std::span<const double> b, double rank_tol = 1e-10) {
    DenseMatrix bm(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) bm(i, 0) = b[i];
    auto r = least_squares(a, bm, rank_tol);
    std::vector<double> x(r.x.rows());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = r.x(i, 0);
    return {std::move(x), r.residual};
}

} // namespace clebsch::linalg
