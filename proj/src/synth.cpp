#include "lacmodel/synth.hpp"

#include <algorithm>
#include <cmath>

namespace lac::synth {

void StandardizationStats::standardize(std::span<const double> physical,
                                       std::span<double> out) const {
    if (physical.size() != mean.size() || out.size() != mean.size()) {
        throw ValidationError("standardize: length mismatch");
    }
    for (std::size_t i = 0; i < mean.size(); ++i) out[i] = (physical[i] - mean[i]) / std[i];
}

void StandardizationStats::destandardize(std::span<const double> standardized,
                                         std::span<double> out) const {
    if (standardized.size() != mean.size() || out.size() != mean.size()) {
        throw ValidationError("destandardize: length mismatch");
    }
    for (std::size_t i = 0; i < mean.size(); ++i) out[i] = standardized[i] * std[i] + mean[i];
}

ElementClasses classify_elements(const atten::ElementSet& elements, const atten::EnergyGrid& grid) {
    ElementClasses c;
    for (const auto& t : elements.tables) {
        (t.has_k_edge_in(grid.e_min, grid.e_max) ? c.with_kedge : c.without_kedge).push_back(t.z);
    }
    std::sort(c.with_kedge.begin(), c.with_kedge.end());
    std::sort(c.without_kedge.begin(), c.without_kedge.end());
    return c;
}

namespace {

void draw_distinct(rng::Stream& stream, const std::vector<int>& pool, std::size_t count,
                   std::vector<int>& out) {
    while (count--) {
        int z;
        do {
            z = pool[stream.uniform_int(pool.size())];
        } while (std::find(out.begin(), out.end(), z) != out.end());
        out.push_back(z);
    }
}

}  // namespace

MixtureSpec sample_mixture(rng::Stream& stream, std::size_t n_elements, const KEdgeRule& rule,
                           const ElementClasses& classes) {
    if (n_elements < 1 || n_elements > 5) {
        throw ValidationError("sample_mixture: 1-5 components supported");
    }
    std::vector<int> zs;
    zs.reserve(n_elements);
    if (rule.constrained) {
        if (rule.k > n_elements) throw ValidationError("k_edge_rule: k exceeds element count");
        if (rule.k > classes.with_kedge.size() ||
            n_elements - rule.k > classes.without_kedge.size()) {
            throw ValidationError("k_edge_rule: not enough elements in class");
        }
        draw_distinct(stream, classes.with_kedge, rule.k, zs);
        draw_distinct(stream, classes.without_kedge, n_elements - rule.k, zs);
    } else {
        std::vector<int> all = classes.without_kedge;
        all.insert(all.end(), classes.with_kedge.begin(), classes.with_kedge.end());
        std::sort(all.begin(), all.end());
        draw_distinct(stream, all, n_elements, zs);
    }
    MixtureSpec m;
    for (int z : zs) m.components.push_back({z, stream.uniform_open0()});
    return m;
}

atten::Spectrum mix_spectrum(const MixtureSpec& mixture, const atten::ElementSet& elements,
                             const atten::EnergyGrid& grid) {
    atten::Spectrum out;
    out.units = atten::Units::physical_lac_per_cm;
    out.values.assign(grid.n_bins, 0.0);
    for (const auto& c : mixture.components) {
        const auto lac = atten::lac_on_grid(elements.by_z(c.z), grid);
        kernels::axpy(c.weight, lac.values.data(), out.values.data(), grid.n_bins);
    }
    return out;
}

Dataset build_dataset(const DatasetSpec& spec, const atten::ElementSet& elements,
                      const StandardizationStats* stats_source) {
    if (spec.n_objects == 0) throw ValidationError("build_dataset: n_objects must be positive");
    const std::size_t nb = spec.grid.n_bins;
    const auto classes = classify_elements(elements, spec.grid);

    // Resample each element once; rows are then cheap weighted sums.
    std::vector<std::vector<double>> lac_cache(93);
    for (const auto& t : elements.tables) {
        lac_cache[t.z] = atten::lac_on_grid(t, spec.grid).values;
    }

    Dataset d;
    d.spec = spec;
    d.mixtures.reserve(spec.n_objects);
    linalg::Matrix raw(spec.n_objects, nb);
    linalg::Matrix noise(spec.n_objects, nb);

    for (std::size_t r = 0; r < spec.n_objects; ++r) {
        rng::Stream stream(rng::derive_seed(spec.seed, rng::kStreamRow, r));
        MixtureSpec mix = sample_mixture(stream, spec.n_elements, spec.rule, classes);
        double* row = raw.row(r);
        for (const auto& c : mix.components) {
            kernels::axpy(c.weight, lac_cache[c.z].data(), row, nb);
        }
        double* nrow = noise.row(r);
        for (std::size_t b = 0; b < nb; ++b) nrow[b] = spec.noise_sigma * stream.gaussian();
        d.mixtures.push_back(std::move(mix));
    }

    if (stats_source) {
        if (stats_source->mean.size() != nb) {
            throw ValidationError("build_dataset: stats_source has wrong bin count");
        }
        d.stats = *stats_source;
    } else {
        d.stats.mean.assign(nb, 0.0);
        d.stats.std.assign(nb, 0.0);
        const double inv_n = 1.0 / static_cast<double>(spec.n_objects);
        for (std::size_t r = 0; r < spec.n_objects; ++r) {
            kernels::axpy(inv_n, raw.row(r), d.stats.mean.data(), nb);
        }
        for (std::size_t r = 0; r < spec.n_objects; ++r) {
            const double* row = raw.row(r);
            for (std::size_t b = 0; b < nb; ++b) {
                const double dlt = row[b] - d.stats.mean[b];
                d.stats.std[b] += inv_n * dlt * dlt;
            }
        }
        for (std::size_t b = 0; b < nb; ++b) {
            d.stats.std[b] = std::sqrt(d.stats.std[b]);
            if (!(d.stats.std[b] > 0.0)) {
                throw ValidationError("build_dataset: degenerate bin " + std::to_string(b) +
                                      " (zero variance)");
            }
        }
    }

    d.clean = linalg::Matrix(spec.n_objects, nb);
    d.noisy = linalg::Matrix(spec.n_objects, nb);
    for (std::size_t r = 0; r < spec.n_objects; ++r) {
        d.stats.standardize(raw.row_span(r), d.clean.row_span(r));
        const double* nrow = noise.row(r);
        double* out = d.noisy.row(r);
        const double* cl = d.clean.row(r);
        for (std::size_t b = 0; b < nb; ++b) out[b] = cl[b] + nrow[b];
    }
    return d;
}

SplitResult split_dataset(const Dataset& d, std::array<double, 3> fractions, std::uint64_t seed) {
    const double sum = fractions[0] + fractions[1] + fractions[2];
    if (std::fabs(sum - 1.0) > 1e-9) throw ValidationError("split: fractions must sum to 1");
    for (double f : fractions) {
        if (!(f > 0.0)) throw ValidationError("split: fractions must be positive");
    }
    const std::size_t n = d.spec.n_objects;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    rng::Stream stream(rng::derive_seed(seed, rng::kStreamSplit, 0));
    for (std::size_t i = n - 1; i > 0; --i) {
        std::swap(perm[i], perm[stream.uniform_int(i + 1)]);
    }

    const std::size_t n_va = static_cast<std::size_t>(std::floor(fractions[1] * n));
    const std::size_t n_te = static_cast<std::size_t>(std::floor(fractions[2] * n));
    const std::size_t n_tr = n - n_va - n_te;  // floor(train) plus any remainder
    if (n_tr == 0 || n_va == 0 || n_te == 0) throw ValidationError("split: empty split");

    SplitResult out;
    out.train_rows.assign(perm.begin(), perm.begin() + n_tr);
    out.val_rows.assign(perm.begin() + n_tr, perm.begin() + n_tr + n_va);
    out.test_rows.assign(perm.begin() + n_tr + n_va, perm.end());

    auto take = [&](const std::vector<std::size_t>& rows, const char* suffix) {
        Dataset s;
        s.spec = d.spec;
        s.spec.name = d.spec.name + suffix;
        s.spec.n_objects = rows.size();
        s.stats = d.stats;
        s.clean = linalg::Matrix(rows.size(), d.clean.cols);
        s.noisy = linalg::Matrix(rows.size(), d.noisy.cols);
        s.mixtures.reserve(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::copy_n(d.clean.row(rows[i]), d.clean.cols, s.clean.row(i));
            std::copy_n(d.noisy.row(rows[i]), d.noisy.cols, s.noisy.row(i));
            s.mixtures.push_back(d.mixtures[rows[i]]);
        }
        return s;
    };
    out.train = take(out.train_rows, "/train");
    out.val = take(out.val_rows, "/val");
    out.test = take(out.test_rows, "/test");
    return out;
}

}  // namespace lac::synth
