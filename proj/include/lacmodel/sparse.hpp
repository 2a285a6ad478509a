#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lacmodel/attenuation.hpp"
#include "lacmodel/matrix.hpp"
#include "lacmodel/synth.hpp"

namespace lac::sparse {

/// Material-basis dictionary: column j is the standardized LAC of element
/// j+1 on the working grid. The lasso 0.5*||y - Ax||^2 + lambda*||x||_1 is
/// solved with FISTA; the gradient step is 1/L with L the largest eigenvalue
/// of A^T A (power iteration).
struct SparseBasis {
    linalg::Matrix columns;  // n_bins x 92
    double lambda = 0.0;
    std::size_t k_select = 5;
    std::size_t max_iters = 2000;
    double tol = 1e-8;
    synth::StandardizationStats stats;
    double lipschitz = 0.0;
};

SparseBasis build_basis(const atten::ElementSet& elements, const atten::EnergyGrid& grid,
                        const synth::StandardizationStats& stats, double lambda,
                        std::size_t k_select = 5);

struct FistaResult {
    std::vector<double> x;                  // length 92
    std::vector<double> objective_history;  // objective after each iteration
};

/// lambda_override < 0 means "use basis.lambda".
FistaResult fista_solve(const SparseBasis& basis, std::span<const double> y,
                        double lambda_override = -1.0);

struct SparseCode {
    std::vector<int> indices;           // atomic numbers, <= k_select entries
    std::vector<double> coefficients;   // matched to indices
    std::vector<double> objective_history;
    bool rank_deficient = false;
};

/// Keeps the k_select largest-|x_j| atoms (ties: lower Z) and refits them by
/// least squares.
SparseCode top_k_refit(const SparseBasis& basis, std::span<const double> y,
                       std::span<const double> x, std::vector<double> history = {});

std::vector<double> sparse_reconstruct(const SparseBasis& basis, const SparseCode& code);

/// FISTA + top-k refit in one call.
SparseCode sparse_encode(const SparseBasis& basis, std::span<const double> y);

/// Grid search: the candidate minimizing mean NMSE of top_k_refit
/// reconstructions of `inputs` against `targets` (first minimum wins).
double tune_lambda(const SparseBasis& basis, const linalg::Matrix& inputs,
                   const linalg::Matrix& targets, const std::vector<double>& candidates);

}  // namespace lac::sparse
