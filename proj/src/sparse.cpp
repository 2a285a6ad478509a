#include "lacmodel/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "lacmodel/svd.hpp"

namespace lac::sparse {

namespace {

double lasso_objective(const SparseBasis& basis, std::span<const double> y,
                       const std::vector<double>& x, double lambda) {
    std::vector<double> r = linalg::matvec(basis.columns, x);
    double quad = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double d = y[i] - r[i];
        quad += d * d;
    }
    double l1 = 0.0;
    for (double v : x) l1 += std::fabs(v);
    return 0.5 * quad + lambda * l1;
}

double power_iteration_lipschitz(const linalg::Matrix& a) {
    const std::size_t k = a.cols;
    std::vector<double> v(k, 1.0 / std::sqrt(static_cast<double>(k)));
    double lambda = 0.0;
    for (int it = 0; it < 10000; ++it) {
        std::vector<double> av = linalg::matvec(a, v);
        std::vector<double> w = linalg::matvec_t(a, av);  // A^T A v
        const double norm = std::sqrt(kernels::sumsq(w.data(), k));
        if (norm == 0.0) return 0.0;
        const double next = kernels::dot(w.data(), v.data(), k);  // Rayleigh quotient
        for (std::size_t i = 0; i < k; ++i) v[i] = w[i] / norm;
        if (it > 0 && std::fabs(next - lambda) <= 1e-8 * std::fabs(next)) return next;
        lambda = next;
    }
    return lambda;
}

}  // namespace

SparseBasis build_basis(const atten::ElementSet& elements, const atten::EnergyGrid& grid,
                        const synth::StandardizationStats& stats, double lambda,
                        std::size_t k_select) {
    if (lambda < 0.0) throw ValidationError("build_basis: lambda must be >= 0");
    if (k_select < 1) throw ValidationError("build_basis: k_select must be >= 1");
    if (stats.mean.size() != grid.n_bins) throw ValidationError("build_basis: stats/grid mismatch");

    SparseBasis b;
    b.lambda = lambda;
    b.k_select = k_select;
    b.stats = stats;
    b.columns = linalg::Matrix(grid.n_bins, 92);
    std::vector<double> std_col(grid.n_bins);
    for (int z = 1; z <= 92; ++z) {
        const auto lac = atten::lac_on_grid(elements.by_z(z), grid);
        stats.standardize(lac.values, std_col);
        for (std::size_t i = 0; i < grid.n_bins; ++i) b.columns(i, z - 1) = std_col[i];
    }
    b.lipschitz = power_iteration_lipschitz(b.columns);
    return b;
}

FistaResult fista_solve(const SparseBasis& basis, std::span<const double> y,
                        double lambda_override) {
    const std::size_t nb = basis.columns.rows;
    const std::size_t k = basis.columns.cols;
    if (y.size() != nb) throw ValidationError("fista_solve: spectrum length mismatch");
    for (double v : y) {
        if (!std::isfinite(v)) throw ValidationError("fista_solve: non-finite input");
    }
    const double lambda = lambda_override >= 0.0 ? lambda_override : basis.lambda;
    const double L = basis.lipschitz;
    if (!(L > 0.0)) throw NumericalError("fista_solve: Lipschitz constant not positive");
    const double step = 1.0 / L;

    FistaResult res;
    res.x.assign(k, 0.0);
    std::vector<double> x_prev(k, 0.0);
    std::vector<double> momentum = res.x;  // extrapolated point
    std::vector<double> grad(k);
    double t = 1.0;
    double prev_obj = 0.0;

    for (std::size_t it = 0; it < basis.max_iters; ++it) {
        // grad = A^T (A m - y)
        std::vector<double> am = linalg::matvec(basis.columns, momentum);
        for (std::size_t i = 0; i < nb; ++i) am[i] -= y[i];
        grad = linalg::matvec_t(basis.columns, am);

        x_prev = res.x;
        for (std::size_t i = 0; i < k; ++i) res.x[i] = momentum[i] - step * grad[i];
        kernels::soft_threshold(res.x.data(), lambda * step, res.x.data(), k);

        const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
        const double beta = (t - 1.0) / t_next;
        for (std::size_t i = 0; i < k; ++i) {
            momentum[i] = res.x[i] + beta * (res.x[i] - x_prev[i]);
        }
        t = t_next;

        const double obj = lasso_objective(basis, y, res.x, lambda);
        res.objective_history.push_back(obj);
        if (it > 0 && std::fabs(obj - prev_obj) < basis.tol * std::max(1.0, std::fabs(obj))) {
            break;
        }
        prev_obj = obj;
    }
    return res;
}

SparseCode top_k_refit(const SparseBasis& basis, std::span<const double> y,
                       std::span<const double> x, std::vector<double> history) {
    const std::size_t k = basis.columns.cols;
    if (x.size() != k) throw ValidationError("top_k_refit: coefficient length mismatch");

    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        const double ai = std::fabs(x[i]), aj = std::fabs(x[j]);
        if (ai != aj) return ai > aj;
        return i < j;  // ties: lower atomic number
    });

    const std::size_t n_sel = std::min(basis.k_select, k);
    std::vector<std::size_t> sel(order.begin(), order.begin() + n_sel);
    std::sort(sel.begin(), sel.end());

    linalg::Matrix restricted(basis.columns.rows, n_sel);
    for (std::size_t i = 0; i < basis.columns.rows; ++i) {
        for (std::size_t j = 0; j < n_sel; ++j) restricted(i, j) = basis.columns(i, sel[j]);
    }
    const auto fit = linalg::lstsq_minnorm(restricted, y);

    SparseCode code;
    code.objective_history = std::move(history);
    code.rank_deficient = fit.rank_deficient;
    for (std::size_t j = 0; j < n_sel; ++j) {
        code.indices.push_back(static_cast<int>(sel[j]) + 1);  // column j is element j+1
        code.coefficients.push_back(fit.x[j]);
    }
    return code;
}

std::vector<double> sparse_reconstruct(const SparseBasis& basis, const SparseCode& code) {
    std::vector<double> out(basis.columns.rows, 0.0);
    for (std::size_t j = 0; j < code.indices.size(); ++j) {
        const std::size_t col = static_cast<std::size_t>(code.indices[j] - 1);
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] += code.coefficients[j] * basis.columns(i, col);
        }
    }
    return out;
}

SparseCode sparse_encode(const SparseBasis& basis, std::span<const double> y) {
    FistaResult f = fista_solve(basis, y);
    return top_k_refit(basis, y, f.x, std::move(f.objective_history));
}

double tune_lambda(const SparseBasis& basis, const linalg::Matrix& inputs,
                   const linalg::Matrix& targets, const std::vector<double>& candidates) {
    if (candidates.empty()) throw ValidationError("tune_lambda: no candidates");
    if (inputs.rows != targets.rows || inputs.cols != targets.cols) {
        throw ValidationError("tune_lambda: inputs/targets shape mismatch");
    }
    double best_lambda = candidates.front();
    double best_score = std::numeric_limits<double>::infinity();
    for (double lambda : candidates) {
        if (lambda < 0.0) throw ValidationError("tune_lambda: negative lambda");
        double total = 0.0;
        for (std::size_t r = 0; r < inputs.rows; ++r) {
            FistaResult f = fista_solve(basis, inputs.row_span(r), lambda);
            SparseCode code = top_k_refit(basis, inputs.row_span(r), f.x);
            const auto rec = sparse_reconstruct(basis, code);
            double num = 0.0;
            for (std::size_t i = 0; i < inputs.cols; ++i) {
                const double d = targets(r, i) - rec[i];
                num += d * d;
            }
            const double den = kernels::sumsq(targets.row(r), targets.cols);
            total += num / den;
        }
        const double mean = total / static_cast<double>(inputs.rows);
        if (mean < best_score) {
            best_score = mean;
            best_lambda = lambda;
        }
    }
    return best_lambda;
}

}  // namespace lac::sparse
