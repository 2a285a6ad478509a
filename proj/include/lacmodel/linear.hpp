#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lacmodel/matrix.hpp"

namespace lac::linear {

/// k-dimensional linear subspace model of standardized spectra: the top
/// right singular vectors of a training matrix.
struct SvdModel {
    std::size_t rank = 0;
    std::size_t grid_bins = 0;
    linalg::Matrix basis;                  // grid_bins x rank, orthonormal columns
    std::vector<double> singular_values;   // all min(m, n) values, descending
};

/// Basis = top-`rank` right singular vectors of `data` (rows are standardized
/// spectra; no extra mean centering). Columns are sign-canonicalized: the
/// entry of largest magnitude is positive.
SvdModel fit_svd(const linalg::Matrix& data, std::size_t rank);

std::vector<double> svd_encode(const SvdModel& model, std::span<const double> spectrum);
std::vector<double> svd_decode(const SvdModel& model, std::span<const double> coefficients);

/// decode(encode(x)): the orthogonal projection onto the model subspace.
std::vector<double> svd_project(const SvdModel& model, std::span<const double> spectrum);

}  // namespace lac::linear
