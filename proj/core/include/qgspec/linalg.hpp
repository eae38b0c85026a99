#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace qgspec {

/// Row-major dense matrix for the small systems (N <= 12) this library needs.
template <typename T>
class DenseMatrix {
public:
    using value_type = T;

    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    DenseMatrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) data_.insert(data_.end(), row.begin(), row.end());
    }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    T* row(std::size_t i) { return data_.data() + i * cols_; }
    const T* row(std::size_t i) const { return data_.data() + i * cols_; }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        DenseMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T aik = a(i, k);
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RealMatrix = DenseMatrix<double>;
using ComplexMatrix = DenseMatrix<std::complex<double>>;

namespace detail {
inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v.real()) + std::abs(v.imag()); }
inline double conj_if(double v) { return v; }
inline std::complex<double> conj_if(const std::complex<double>& v) { return std::conj(v); }
} // namespace detail

/// Conjugate transpose (plain transpose for real matrices).
template <typename T>
DenseMatrix<T> adjoint(const DenseMatrix<T>& m) {
    DenseMatrix<T> out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = detail::conj_if(m(i, j));
    return out;
}

template <typename A, typename B>
double max_abs_difference(const DenseMatrix<A>& a, const DenseMatrix<B>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

/// Determinant by LU decomposition with partial pivoting; consumes its argument.
template <typename T>
T determinant(DenseMatrix<T> m) {
    const std::size_t n = m.rows();
    T det{1};
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = detail::magnitude(m(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double mag = detail::magnitude(m(r, col));
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (best == 0.0) return T{0};
        if (pivot != col) {
            std::swap_ranges(m.row(col), m.row(col) + n, m.row(pivot));
            det = -det;
        }
        const T diag = m(col, col);
        det *= diag;
        const T inv = T{1} / diag;
        T* prow = m.row(col);
        for (std::size_t r = col + 1; r < n; ++r) {
            T* rrow = m.row(r);
            const T factor = rrow[col] * inv;
            if (factor == T{0}) continue;
            for (std::size_t j = col + 1; j < n; ++j) rrow[j] -= factor * prow[j];
        }
    }
    return det;
}

/// Solves A X = B for X by Gaussian elimination with partial pivoting.
template <typename T>
DenseMatrix<T> solve(DenseMatrix<T> a, DenseMatrix<T> b) {
    const std::size_t n = a.rows();
    const std::size_t m = b.cols();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (detail::magnitude(a(r, col)) > detail::magnitude(a(pivot, col))) pivot = r;
        if (pivot != col) {
            std::swap_ranges(a.row(col), a.row(col) + n, a.row(pivot));
            std::swap_ranges(b.row(col), b.row(col) + m, b.row(pivot));
        }
        const T inv = T{1} / a(col, col);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const T factor = a(r, col) * inv;
            if (factor == T{0}) continue;
            for (std::size_t j = col; j < n; ++j) a(r, j) -= factor * a(col, j);
            for (std::size_t j = 0; j < m; ++j) b(r, j) -= factor * b(col, j);
        }
    }
    for (std::size_t r = 0; r < n; ++r) {
        const T inv = T{1} / a(r, r);
        for (std::size_t j = 0; j < m; ++j) b(r, j) *= inv;
    }
    return b;
}

} // namespace qgspec
