#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lacmodel/attenuation.hpp"
#include "lacmodel/matrix.hpp"
#include "lacmodel/rng.hpp"

namespace lac::synth {

struct MixtureSpec {
    struct Component {
        int z = 0;
        double weight = 0.0;  // uniform (0,1]
    };
    std::vector<Component> components;
};

struct KEdgeRule {
    bool constrained = false;
    std::size_t k = 0;

    static KEdgeRule unconstrained() { return {}; }
    static KEdgeRule exactly(std::size_t k) { return {true, k}; }
};

struct DatasetSpec {
    std::string name;
    std::size_t n_elements = 2;
    std::size_t n_objects = 0;
    KEdgeRule rule;
    atten::EnergyGrid grid = atten::EnergyGrid::standard();
    double noise_sigma = 0.1;
    std::uint64_t seed = 0;
};

struct StandardizationStats {
    std::vector<double> mean;
    std::vector<double> std;

    void standardize(std::span<const double> physical, std::span<double> out) const;
    void destandardize(std::span<const double> standardized, std::span<double> out) const;
};

struct Dataset {
    DatasetSpec spec;
    linalg::Matrix clean;   // n_objects x n_bins, standardized
    linalg::Matrix noisy;   // clean + recorded Gaussian draws
    std::vector<MixtureSpec> mixtures;
    StandardizationStats stats;
};

/// Element atomic numbers partitioned by whether their K edge lies strictly
/// inside the grid's energy range.
struct ElementClasses {
    std::vector<int> with_kedge;
    std::vector<int> without_kedge;
};

ElementClasses classify_elements(const atten::ElementSet& elements, const atten::EnergyGrid& grid);

/// Draws n distinct elements and their weights from one seeded stream.
/// With exactly(k), the k K-edge elements are drawn first, then the rest.
MixtureSpec sample_mixture(rng::Stream& stream, std::size_t n_elements, const KEdgeRule& rule,
                           const ElementClasses& classes);

/// Weighted sum of element LACs on the grid, physical units.
atten::Spectrum mix_spectrum(const MixtureSpec& mixture, const atten::ElementSet& elements,
                             const atten::EnergyGrid& grid);

/// Generates the dataset: mixtures, per-bin standardization (computed from
/// this dataset's clean spectra unless stats_source is given) and Gaussian
/// noise of spec.noise_sigma added to the standardized values. Per-row RNG
/// streams are derived from (seed, row), so the result is deterministic.
Dataset build_dataset(const DatasetSpec& spec, const atten::ElementSet& elements,
                      const StandardizationStats* stats_source = nullptr);

struct SplitResult {
    Dataset train, val, test;
    std::vector<std::size_t> train_rows, val_rows, test_rows;  // indices into the parent
};

/// Random permutation split. Row counts are floor(fraction * n) with the
/// remainder assigned to training; stats are carried unchanged.
SplitResult split_dataset(const Dataset& d, std::array<double, 3> fractions, std::uint64_t seed);

}  // namespace lac::synth
