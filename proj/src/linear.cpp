#include "lacmodel/linear.hpp"

#include <cmath>

#include "lacmodel/svd.hpp"

namespace lac::linear {

SvdModel fit_svd(const linalg::Matrix& data, std::size_t rank) {
    if (rank == 0) throw ValidationError("fit_svd: rank must be positive");
    if (rank > std::min(data.rows, data.cols)) {
        throw ValidationError("fit_svd: rank exceeds min(rows, cols)");
    }
    const auto svd = linalg::gram_svd(data);

    SvdModel m;
    m.rank = rank;
    m.grid_bins = data.cols;
    m.singular_values = svd.singular_values;
    m.basis = linalg::Matrix(data.cols, rank);
    for (std::size_t j = 0; j < rank; ++j) {
        // sign canonicalization: largest-magnitude entry positive
        std::size_t arg = 0;
        for (std::size_t i = 1; i < data.cols; ++i) {
            if (std::fabs(svd.v(i, j)) > std::fabs(svd.v(arg, j))) arg = i;
        }
        const double flip = svd.v(arg, j) < 0.0 ? -1.0 : 1.0;
        for (std::size_t i = 0; i < data.cols; ++i) m.basis(i, j) = flip * svd.v(i, j);
    }
    return m;
}

std::vector<double> svd_encode(const SvdModel& model, std::span<const double> spectrum) {
    if (spectrum.size() != model.grid_bins) throw ValidationError("svd_encode: length mismatch");
    std::vector<double> c(model.rank, 0.0);
    for (std::size_t j = 0; j < model.rank; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < model.grid_bins; ++i) s += model.basis(i, j) * spectrum[i];
        c[j] = s;
    }
    return c;
}

std::vector<double> svd_decode(const SvdModel& model, std::span<const double> coefficients) {
    if (coefficients.size() != model.rank) throw ValidationError("svd_decode: length mismatch");
    std::vector<double> x(model.grid_bins, 0.0);
    for (std::size_t j = 0; j < model.rank; ++j) {
        for (std::size_t i = 0; i < model.grid_bins; ++i) {
            x[i] += model.basis(i, j) * coefficients[j];
        }
    }
    return x;
}

std::vector<double> svd_project(const SvdModel& model, std::span<const double> spectrum) {
    return svd_decode(model, svd_encode(model, spectrum));
}

}  // namespace lac::linear
