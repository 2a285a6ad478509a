#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lacmodel/common.hpp"
#include "lacmodel/kernels.hpp"

namespace lac::linalg {

/// Dense row-major matrix of doubles. Rows are the natural unit here
/// (observations, spectra, batches), so row spans are cheap and contiguous.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}

    double& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    double* row(std::size_t i) { return a.data() + i * cols; }
    const double* row(std::size_t i) const { return a.data() + i * cols; }

    std::span<double> row_span(std::size_t i) { return {row(i), cols}; }
    std::span<const double> row_span(std::size_t i) const { return {row(i), cols}; }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
};

/// C = A * B
inline Matrix matmul(const Matrix& A, const Matrix& B) {
    if (A.cols != B.rows) throw ValidationError("matmul: inner dimensions differ");
    Matrix C(A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i) {
        double* ci = C.row(i);
        const double* ai = A.row(i);
        for (std::size_t l = 0; l < A.cols; ++l) {
            if (ai[l] != 0.0) kernels::axpy(ai[l], B.row(l), ci, B.cols);
        }
    }
    return C;
}

/// C = A^T * B  (A and B share their row count)
inline Matrix matmul_tn(const Matrix& A, const Matrix& B) {
    if (A.rows != B.rows) throw ValidationError("matmul_tn: row counts differ");
    Matrix C(A.cols, B.cols);
    for (std::size_t r = 0; r < A.rows; ++r) {
        const double* ar = A.row(r);
        const double* br = B.row(r);
        for (std::size_t i = 0; i < A.cols; ++i) {
            if (ar[i] != 0.0) kernels::axpy(ar[i], br, C.row(i), B.cols);
        }
    }
    return C;
}

/// C = A * B^T
inline Matrix matmul_nt(const Matrix& A, const Matrix& B) {
    if (A.cols != B.cols) throw ValidationError("matmul_nt: inner dimensions differ");
    Matrix C(A.rows, B.rows);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t j = 0; j < B.rows; ++j) {
            C(i, j) = kernels::dot(A.row(i), B.row(j), A.cols);
        }
    }
    return C;
}

/// y = A * x
inline std::vector<double> matvec(const Matrix& A, std::span<const double> x) {
    if (A.cols != x.size()) throw ValidationError("matvec: size mismatch");
    std::vector<double> y(A.rows);
    for (std::size_t i = 0; i < A.rows; ++i) y[i] = kernels::dot(A.row(i), x.data(), A.cols);
    return y;
}

/// y = A^T * x
inline std::vector<double> matvec_t(const Matrix& A, std::span<const double> x) {
    if (A.rows != x.size()) throw ValidationError("matvec_t: size mismatch");
    std::vector<double> y(A.cols, 0.0);
    for (std::size_t i = 0; i < A.rows; ++i) kernels::axpy(x[i], A.row(i), y.data(), A.cols);
    return y;
}

}  // namespace lac::linalg
