#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lacmodel/matrix.hpp"

namespace lac::linalg {

struct SvdOptions {
    double tol = 1e-12;     // off-diagonal mass threshold, relative
    int max_sweeps = 100;
};

/// Singular values and right singular vectors of a data matrix (rows are
/// observations). Computed by one-sided Jacobi orthogonalization applied on
/// the Gram side: the n x n matrix data^T * data is rotated until its columns
/// are mutually orthogonal, which yields its eigenvectors (the right singular
/// vectors of the data) and eigenvalues (squared singular values).
struct GramSvd {
    std::vector<double> singular_values;  // descending, length min(rows, cols)
    Matrix v;                             // cols x cols, columns are right singular vectors
};

GramSvd gram_svd(const Matrix& data, const SvdOptions& opts = {});

/// Same decomposition, starting from an already-formed symmetric PSD Gram
/// matrix. singular_values are sqrt(eigenvalues), all cols of v kept.
GramSvd gram_svd_from_gram(Matrix gram, std::size_t value_count, const SvdOptions& opts = {});

struct LstsqResult {
    std::vector<double> x;
    bool rank_deficient = false;
};

/// Least squares for A x ~= y via the Gram-side SVD. Columns are equilibrated
/// to unit norm internally; directions with singular value <= rtol * sigma_max
/// are dropped (flagged), giving the minimum-norm solution in the equilibrated
/// variables when the system is rank deficient.
LstsqResult lstsq_minnorm(const Matrix& A, std::span<const double> y, double rtol = 1e-12);

}  // namespace lac::linalg
