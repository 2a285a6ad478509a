#include "lacmodel/svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lac::linalg {

namespace {

// One Jacobi rotation zeroing the (p,q) off-diagonal of the implicit 2x2
// Gram block [[alpha, gamma], [gamma, beta]]; applied to columns p,q of W
// and of the accumulated rotation product V.
void rotate_columns(Matrix& W, Matrix& V, std::size_t p, std::size_t q,
                    double alpha, double beta, double gamma) {
    const double zeta = (beta - alpha) / (2.0 * gamma);
    const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::fabs(zeta) + std::sqrt(1.0 + zeta * zeta));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = c * t;
    for (std::size_t k = 0; k < W.rows; ++k) {
        const double wp = W(k, p), wq = W(k, q);
        W(k, p) = c * wp - s * wq;
        W(k, q) = s * wp + c * wq;
    }
    for (std::size_t k = 0; k < V.rows; ++k) {
        const double vp = V(k, p), vq = V(k, q);
        V(k, p) = c * vp - s * vq;
        V(k, q) = s * vp + c * vq;
    }
}

double column_dot(const Matrix& W, std::size_t p, std::size_t q) {
    double s = 0.0;
    for (std::size_t k = 0; k < W.rows; ++k) s += W(k, p) * W(k, q);
    return s;
}

}  // namespace

GramSvd gram_svd_from_gram(Matrix gram, std::size_t value_count, const SvdOptions& opts) {
    if (gram.rows != gram.cols) throw ValidationError("gram_svd: gram matrix must be square");
    const std::size_t n = gram.rows;
    Matrix V = Matrix::identity(n);
    Matrix& W = gram;

    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
        double worst = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double alpha = column_dot(W, p, p);
                const double beta = column_dot(W, q, q);
                const double gamma = column_dot(W, p, q);
                const double denom = std::sqrt(alpha * beta);
                if (denom <= 0.0) continue;
                const double rel = std::fabs(gamma) / denom;
                worst = std::max(worst, rel);
                if (rel <= opts.tol) continue;
                rotate_columns(W, V, p, q, alpha, beta, gamma);
            }
        }
        if (worst <= opts.tol) break;
    }

    // Eigenvalues of the PSD Gram matrix are the final column norms; singular
    // values of the data are their square roots.
    std::vector<double> lambda(n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) s += W(k, j) * W(k, j);
        lambda[j] = std::sqrt(s);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return lambda[i] > lambda[j]; });

    GramSvd out;
    out.v = Matrix(n, n);
    out.singular_values.resize(std::min(value_count, n));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) out.v(k, j) = V(k, order[j]);
        if (j < out.singular_values.size()) {
            out.singular_values[j] = std::sqrt(std::max(lambda[order[j]], 0.0));
        }
    }
    return out;
}

GramSvd gram_svd(const Matrix& data, const SvdOptions& opts) {
    Matrix gram = matmul_tn(data, data);
    return gram_svd_from_gram(std::move(gram), std::min(data.rows, data.cols), opts);
}

LstsqResult lstsq_minnorm(const Matrix& A, std::span<const double> y, double rtol) {
    if (A.rows != y.size()) throw ValidationError("lstsq: row count does not match y");
    if (A.cols == 0) throw ValidationError("lstsq: empty system");

    const std::size_t k = A.cols;

    // Equilibrate columns to unit norm; the Gram-side solve squares the
    // condition number, and raw columns can differ in scale by 1e4 or more.
    std::vector<double> scale(k, 0.0);
    Matrix As(A.rows, k);
    LstsqResult res;
    res.x.assign(k, 0.0);
    for (std::size_t j = 0; j < k; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < A.rows; ++i) s += A(i, j) * A(i, j);
        scale[j] = std::sqrt(s);
        if (scale[j] == 0.0) {
            res.rank_deficient = true;
            continue;
        }
        for (std::size_t i = 0; i < A.rows; ++i) As(i, j) = A(i, j) / scale[j];
    }

    GramSvd svd = gram_svd(As);
    std::vector<double> z = matvec_t(As, y);  // As^T y

    const double smax = svd.singular_values.empty() ? 0.0 : svd.singular_values[0];
    const double cutoff = smax * rtol;

    for (std::size_t j = 0; j < k; ++j) {
        const double sj = j < svd.singular_values.size() ? svd.singular_values[j] : 0.0;
        if (sj <= cutoff || sj == 0.0) {
            res.rank_deficient = true;
            continue;
        }
        double vz = 0.0;
        for (std::size_t i = 0; i < k; ++i) vz += svd.v(i, j) * z[i];
        const double coef = vz / (sj * sj);
        for (std::size_t i = 0; i < k; ++i) res.x[i] += coef * svd.v(i, j);
    }
    for (std::size_t j = 0; j < k; ++j) {
        if (scale[j] != 0.0) res.x[j] /= scale[j];
    }
    return res;
}

}  // namespace lac::linalg
