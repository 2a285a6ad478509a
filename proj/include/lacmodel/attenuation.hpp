#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lacmodel/common.hpp"

namespace lac::atten {

struct EnergyGrid {
    double e_min = 20.0;
    double e_max = 150.0;
    std::size_t n_bins = 26;
    std::vector<double> centers;

    static EnergyGrid make(double e_min, double e_max, std::size_t n_bins);
    /// 20-150 keV; 26 bins by default, 131 for the fine-resolution runs.
    static EnergyGrid standard(std::size_t n_bins = 26) { return make(20.0, 150.0, n_bins); }

    bool operator==(const EnergyGrid& o) const {
        return e_min == o.e_min && e_max == o.e_max && n_bins == o.n_bins;
    }
};

enum class Units { physical_lac_per_cm, standardized };

struct Spectrum {
    std::vector<double> values;
    Units units = Units::physical_lac_per_cm;
};

/// Tabulated mass attenuation samples plus density for one element. Samples
/// are sorted by energy; an absorption edge appears as two adjacent rows with
/// the same energy, pre-edge value first.
struct AttenuationTable {
    int z = 0;
    std::string symbol;
    double density = 0.0;                           // g/cm^3
    std::vector<std::pair<double, double>> samples;  // (energy keV, MAC cm^2/g)

    /// Highest duplicated (edge) energy in the table, if any. For elements
    /// with their K edge inside the tabulated range this is the K edge.
    std::optional<double> k_edge() const;
    bool has_k_edge_in(double lo, double hi) const;
    void validate() const;
};

/// Reads elements/z{ZZ}.csv; density and symbol come from the sibling
/// densities.csv. Z is parsed from the file name.
AttenuationTable load_attenuation_table(const std::filesystem::path& csv_path);

struct ElementSet {
    std::vector<AttenuationTable> tables;  // ascending Z, 1..92 when complete

    const AttenuationTable& by_z(int z) const;
    bool has_z(int z) const;
};

/// Loads z01.csv .. z92.csv (all required) from a directory that also holds
/// densities.csv. `dir` may be the elements directory itself or its parent.
ElementSet load_element_set(const std::filesystem::path& dir);

/// Resamples the table onto grid centers: density * MAC interpolated
/// log-log between bracketing samples. Centers below a duplicated edge energy
/// use the pre-edge branch, centers at or above it the post-edge branch.
Spectrum lac_on_grid(const AttenuationTable& table, const EnergyGrid& grid);

/// Compton energy dependence, alpha = e/511 keV.
double klein_nishina(double e_kev);

/// Photoelectric energy dependence 1/e^n.
double photoelectric_basis(double e_kev, double n);

inline constexpr double kPcbConstant = 9.8e-24;  // C_P
inline constexpr double kPcbExponent = 3.8;      // m

struct PcbCoefficients {
    double a_p = 0.0;  // photoelectric weight
    double a_c = 0.0;  // Compton weight
};

/// a_p = rho_e * C_P * Z^m, a_c = rho_e.
PcbCoefficients pcb_coefficients(double rho_e, int z);

/// Least-squares fit of a physical spectrum onto [1/E^n, f_KN(E)] evaluated
/// at the grid centers. Returns the coefficients and the reconstruction.
std::pair<PcbCoefficients, Spectrum> fit_pcb(const Spectrum& spectrum, const EnergyGrid& grid,
                                             double n = 3.0);

}  // namespace lac::atten
