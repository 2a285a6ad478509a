#include "lacmodel/attenuation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "lacmodel/svd.hpp"

namespace lac::atten {

EnergyGrid EnergyGrid::make(double e_min, double e_max, std::size_t n_bins) {
    if (!(e_min < e_max)) throw ValidationError("grid: e_min must be below e_max");
    if (n_bins < 2) throw ValidationError("grid: need at least 2 bins");
    EnergyGrid g;
    g.e_min = e_min;
    g.e_max = e_max;
    g.n_bins = n_bins;
    g.centers.resize(n_bins);
    const double w = (e_max - e_min) / static_cast<double>(n_bins);
    for (std::size_t i = 0; i < n_bins; ++i) {
        g.centers[i] = e_min + (static_cast<double>(i) + 0.5) * w;
    }
    return g;
}

std::optional<double> AttenuationTable::k_edge() const {
    std::optional<double> edge;
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
        if (samples[i].first == samples[i + 1].first) edge = samples[i].first;
    }
    return edge;
}

bool AttenuationTable::has_k_edge_in(double lo, double hi) const {
    const auto e = k_edge();
    return e && *e > lo && *e < hi;
}

void AttenuationTable::validate() const {
    if (z < 1 || z > 92) throw RangeError("element Z outside 1-92: " + std::to_string(z));
    if (!(density > 0.0)) throw ValidationError(symbol + ": density must be positive");
    if (samples.size() < 2) throw ValidationError(symbol + ": need at least 2 samples");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!(samples[i].second > 0.0)) {
            throw ValidationError(symbol + ": non-positive MAC at row " + std::to_string(i));
        }
        if (i == 0) continue;
        const double e0 = samples[i - 1].first, e1 = samples[i].first;
        if (e1 < e0) throw ValidationError(symbol + ": energies out of order at row " + std::to_string(i));
        if (e1 == e0) {
            // duplicated energies encode an edge: only pairs, increasing MAC
            if (i + 1 < samples.size() && samples[i + 1].first == e1) {
                throw ValidationError(symbol + ": more than two samples at energy " + std::to_string(e1));
            }
            if (i >= 2 && samples[i - 2].first == e0) {
                throw ValidationError(symbol + ": more than two samples at energy " + std::to_string(e1));
            }
            if (!(samples[i].second > samples[i - 1].second)) {
                throw ValidationError(symbol + ": edge at " + std::to_string(e1) +
                                      " must step upward");
            }
        }
    }
}

namespace {

double parse_double(const std::string& field, const std::filesystem::path& path, std::size_t line) {
    const char* begin = field.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
        throw ParseError(path.string() + ":" + std::to_string(line) + ": bad number '" + field + "'");
    }
    return v;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream ss(line);
    while (std::getline(ss, cur, ',')) out.push_back(cur);
    return out;
}

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

struct DensityRow {
    std::string symbol;
    double density;
};

std::map<int, DensityRow> load_densities(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open density file " + path.string());
    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != "z,symbol,density_g_per_cm3") {
        throw ParseError(path.string() + ": unexpected header");
    }
    std::map<int, DensityRow> rows;
    std::size_t n = 1;
    while (std::getline(in, line)) {
        ++n;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto f = split_csv(line);
        if (f.size() != 3) throw ParseError(path.string() + ":" + std::to_string(n) + ": expected 3 fields");
        const int z = static_cast<int>(parse_double(f[0], path, n));
        rows[z] = {f[1], parse_double(f[2], path, n)};
    }
    return rows;
}

int z_from_filename(const std::filesystem::path& path) {
    const std::string stem = path.stem().string();
    if (stem.size() < 2 || stem[0] != 'z') {
        throw ParseError(path.string() + ": element files are named z{ZZ}.csv");
    }
    char* end = nullptr;
    const long z = std::strtol(stem.c_str() + 1, &end, 10);
    if (end == stem.c_str() + 1 || *end != '\0') {
        throw ParseError(path.string() + ": element files are named z{ZZ}.csv");
    }
    return static_cast<int>(z);
}

}  // namespace

AttenuationTable load_attenuation_table(const std::filesystem::path& csv_path) {
    std::ifstream in(csv_path);
    if (!in) throw IoError("cannot open element file " + csv_path.string());

    AttenuationTable t;
    t.z = z_from_filename(csv_path);
    if (t.z < 1 || t.z > 92) throw RangeError("element Z outside 1-92: " + std::to_string(t.z));

    const auto densities = load_densities(csv_path.parent_path() / "densities.csv");
    const auto it = densities.find(t.z);
    if (it == densities.end()) {
        throw ValidationError("no density entry for Z=" + std::to_string(t.z));
    }
    t.symbol = it->second.symbol;
    t.density = it->second.density;

    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != "energy_kev,mac_cm2_per_g") {
        throw ParseError(csv_path.string() + ": unexpected header");
    }
    std::size_t n = 1;
    while (std::getline(in, line)) {
        ++n;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto f = split_csv(line);
        if (f.size() != 2) {
            throw ParseError(csv_path.string() + ":" + std::to_string(n) + ": expected 2 fields");
        }
        t.samples.emplace_back(parse_double(f[0], csv_path, n), parse_double(f[1], csv_path, n));
    }
    t.validate();
    return t;
}

const AttenuationTable& ElementSet::by_z(int z) const {
    for (const auto& t : tables) {
        if (t.z == z) return t;
    }
    throw RangeError("no table for Z=" + std::to_string(z));
}

bool ElementSet::has_z(int z) const {
    return std::any_of(tables.begin(), tables.end(), [&](const auto& t) { return t.z == z; });
}

ElementSet load_element_set(const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    fs::path base = dir;
    if (fs::exists(dir / "elements" / "densities.csv")) base = dir / "elements";

    ElementSet set;
    set.tables.reserve(92);
    for (int z = 1; z <= 92; ++z) {
        char name[16];
        std::snprintf(name, sizeof(name), "z%02d.csv", z);
        const fs::path p = base / name;
        if (!fs::exists(p)) throw IoError("missing element file " + p.string());
        set.tables.push_back(load_attenuation_table(p));
    }
    return set;
}

Spectrum lac_on_grid(const AttenuationTable& table, const EnergyGrid& grid) {
    const auto& s = table.samples;
    if (s.front().first > grid.e_min || s.back().first < grid.e_max) {
        throw RangeError(table.symbol + ": table does not cover grid range");
    }
    Spectrum out;
    out.units = Units::physical_lac_per_cm;
    out.values.resize(grid.n_bins);
    for (std::size_t b = 0; b < grid.n_bins; ++b) {
        const double e = grid.centers[b];
        if (e < s.front().first || e > s.back().first) {
            throw RangeError(table.symbol + ": energy outside table range");
        }
        // last sample with energy <= e; at a duplicated edge energy this is
        // the post-edge row.
        std::size_t i = 0;
        while (i + 1 < s.size() && s[i + 1].first <= e) ++i;
        double mac;
        if (s[i].first == e) {
            mac = s[i].second;
        } else {
            const auto& [e1, m1] = s[i];
            const auto& [e2, m2] = s[i + 1];
            const double t = (std::log(e) - std::log(e1)) / (std::log(e2) - std::log(e1));
            mac = std::exp(std::log(m1) + t * (std::log(m2) - std::log(m1)));
        }
        out.values[b] = table.density * mac;
    }
    return out;
}

double klein_nishina(double e_kev) {
    if (!(e_kev > 0.0)) throw DomainError("klein_nishina: energy must be positive");
    const double a = e_kev / 511.0;
    const double l = std::log(1.0 + 2.0 * a);
    const double t1 = (1.0 + a) / (a * a) * (2.0 * (1.0 + a) / (1.0 + 2.0 * a) - l / a);
    const double t2 = l / (2.0 * a);
    const double t3 = (1.0 + 3.0 * a) / ((1.0 + 2.0 * a) * (1.0 + 2.0 * a));
    return t1 + t2 - t3;
}

double photoelectric_basis(double e_kev, double n) {
    if (!(e_kev > 0.0)) throw DomainError("photoelectric_basis: energy must be positive");
    if (!(n > 0.0)) throw DomainError("photoelectric_basis: exponent must be positive");
    return std::pow(e_kev, -n);
}

PcbCoefficients pcb_coefficients(double rho_e, int z) {
    if (!(rho_e > 0.0)) throw DomainError("pcb_coefficients: electron density must be positive");
    if (z < 1 || z > 92) throw RangeError("pcb_coefficients: Z outside 1-92");
    PcbCoefficients c;
    c.a_p = rho_e * kPcbConstant * std::pow(static_cast<double>(z), kPcbExponent);
    c.a_c = rho_e;
    return c;
}

std::pair<PcbCoefficients, Spectrum> fit_pcb(const Spectrum& spectrum, const EnergyGrid& grid,
                                             double n) {
    if (spectrum.units != Units::physical_lac_per_cm) {
        throw ValidationError("fit_pcb: spectrum must be in physical units");
    }
    if (spectrum.values.size() != grid.n_bins) {
        throw ValidationError("fit_pcb: spectrum length does not match grid");
    }
    linalg::Matrix design(grid.n_bins, 2);
    for (std::size_t i = 0; i < grid.n_bins; ++i) {
        design(i, 0) = photoelectric_basis(grid.centers[i], n);
        design(i, 1) = klein_nishina(grid.centers[i]);
    }
    const auto fit = linalg::lstsq_minnorm(design, spectrum.values);
    if (fit.rank_deficient) throw NumericalError("fit_pcb: design matrix is rank deficient");

    PcbCoefficients c{fit.x[0], fit.x[1]};
    Spectrum rec;
    rec.units = Units::physical_lac_per_cm;
    rec.values.resize(grid.n_bins);
    for (std::size_t i = 0; i < grid.n_bins; ++i) {
        rec.values[i] = c.a_p * design(i, 0) + c.a_c * design(i, 1);
    }
    return {c, rec};
}

}  // namespace lac::atten
