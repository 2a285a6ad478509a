#!/usr/bin/env python3
"""Regenerates data/elements/*.csv.

Mass attenuation tables for Z = 1..92 over 15-160 keV from a parametric
cross-section model: a photoelectric power law with K-shell jump ratios,
Klein-Nishina incoherent scattering, and a coherent-scattering power law.
Coefficients are calibrated against standard attenuation values (Al and I
at 30/100 keV). Edge energies are Bearden K absorption edges; rows at an
edge are duplicated (pre-edge first) so interpolating readers can keep the
discontinuity.

Stdlib only; deterministic output.
"""

import math
import os

N_A = 6.02214076e23          # 1/mol
TWO_PI_RE2 = 4.98937e-25     # cm^2, 2*pi*r_e^2
C_PE = 2.716e-23             # photoelectric scale, cm^2 keV^3
PE_EXPONENT = 4.135          # effective Z exponent of the photoelectric term
C_COH = 2.96e-24             # coherent scale, cm^2 keV^2
E_LO, E_HI = 15.0, 160.0
N_BASE = 56

# z, symbol, atomic weight, density g/cm^3 (gases at NTP)
ELEMENTS = [
    (1, "H", 1.008, 8.375e-05), (2, "He", 4.0026, 1.663e-04),
    (3, "Li", 6.94, 0.534), (4, "Be", 9.0122, 1.848),
    (5, "B", 10.81, 2.370), (6, "C", 12.011, 1.700),
    (7, "N", 14.007, 1.165e-03), (8, "O", 15.999, 1.332e-03),
    (9, "F", 18.998, 1.580e-03), (10, "Ne", 20.180, 8.385e-04),
    (11, "Na", 22.990, 0.971), (12, "Mg", 24.305, 1.740),
    (13, "Al", 26.982, 2.699), (14, "Si", 28.085, 2.330),
    (15, "P", 30.974, 2.200), (16, "S", 32.06, 2.000),
    (17, "Cl", 35.45, 2.995e-03), (18, "Ar", 39.948, 1.662e-03),
    (19, "K", 39.098, 0.862), (20, "Ca", 40.078, 1.550),
    (21, "Sc", 44.956, 2.989), (22, "Ti", 47.867, 4.540),
    (23, "V", 50.942, 6.110), (24, "Cr", 51.996, 7.180),
    (25, "Mn", 54.938, 7.440), (26, "Fe", 55.845, 7.874),
    (27, "Co", 58.933, 8.900), (28, "Ni", 58.693, 8.902),
    (29, "Cu", 63.546, 8.960), (30, "Zn", 65.38, 7.133),
    (31, "Ga", 69.723, 5.904), (32, "Ge", 72.630, 5.323),
    (33, "As", 74.922, 5.730), (34, "Se", 78.971, 4.500),
    (35, "Br", 79.904, 3.120), (36, "Kr", 83.798, 3.478e-03),
    (37, "Rb", 85.468, 1.532), (38, "Sr", 87.62, 2.540),
    (39, "Y", 88.906, 4.469), (40, "Zr", 91.224, 6.506),
    (41, "Nb", 92.906, 8.570), (42, "Mo", 95.95, 10.220),
    (43, "Tc", 98.0, 11.500), (44, "Ru", 101.07, 12.410),
    (45, "Rh", 102.91, 12.410), (46, "Pd", 106.42, 12.020),
    (47, "Ag", 107.87, 10.500), (48, "Cd", 112.41, 8.650),
    (49, "In", 114.82, 7.310), (50, "Sn", 118.71, 7.310),
    (51, "Sb", 121.76, 6.691), (52, "Te", 127.60, 6.240),
    (53, "I", 126.90, 4.930), (54, "Xe", 131.29, 5.485e-03),
    (55, "Cs", 132.91, 1.873), (56, "Ba", 137.33, 3.500),
    (57, "La", 138.91, 6.154), (58, "Ce", 140.12, 6.657),
    (59, "Pr", 140.91, 6.710), (60, "Nd", 144.24, 6.900),
    (61, "Pm", 145.0, 7.220), (62, "Sm", 150.36, 7.460),
    (63, "Eu", 151.96, 5.243), (64, "Gd", 157.25, 7.900),
    (65, "Tb", 158.93, 8.229), (66, "Dy", 162.50, 8.550),
    (67, "Ho", 164.93, 8.795), (68, "Er", 167.26, 9.066),
    (69, "Tm", 168.93, 9.321), (70, "Yb", 173.05, 6.730),
    (71, "Lu", 174.97, 9.840), (72, "Hf", 178.49, 13.310),
    (73, "Ta", 180.95, 16.654), (74, "W", 183.84, 19.300),
    (75, "Re", 186.21, 21.020), (76, "Os", 190.23, 22.570),
    (77, "Ir", 192.22, 22.420), (78, "Pt", 195.08, 21.450),
    (79, "Au", 196.97, 19.320), (80, "Hg", 200.59, 13.546),
    (81, "Tl", 204.38, 11.720), (82, "Pb", 207.2, 11.350),
    (83, "Bi", 208.98, 9.747), (84, "Po", 209.0, 9.320),
    (85, "At", 210.0, 9.320), (86, "Rn", 222.0, 9.066e-03),
    (87, "Fr", 223.0, 1.870), (88, "Ra", 226.0, 5.500),
    (89, "Ac", 227.0, 10.070), (90, "Th", 232.04, 11.720),
    (91, "Pa", 231.04, 15.370), (92, "U", 238.03, 18.950),
]

# Bearden K absorption edges (keV) for elements whose edge lies in the
# tabulated range. Edges below 15 keV (Z < 37) never enter the tables.
K_EDGE_KEV = {
    37: 15.200, 38: 16.105, 39: 17.038, 40: 17.998, 41: 18.986,
    42: 19.9995, 43: 21.044, 44: 22.117, 45: 23.220, 46: 24.350,
    47: 25.514, 48: 26.711, 49: 27.940, 50: 29.200, 51: 30.491,
    52: 31.814, 53: 33.169, 54: 34.561, 55: 35.985, 56: 37.441,
    57: 38.925, 58: 40.443, 59: 41.991, 60: 43.569, 61: 45.184,
    62: 46.834, 63: 48.519, 64: 50.239, 65: 51.996, 66: 53.789,
    67: 55.618, 68: 57.486, 69: 59.390, 70: 61.332, 71: 63.314,
    72: 65.351, 73: 67.416, 74: 69.525, 75: 71.676, 76: 73.871,
    77: 76.111, 78: 78.395, 79: 80.725, 80: 83.102, 81: 85.530,
    82: 88.005, 83: 90.526, 84: 93.105, 85: 95.730, 86: 98.404,
    87: 101.137, 88: 103.922, 89: 106.755, 90: 109.651, 91: 112.601,
    92: 115.606,
}


def f_kn(e_kev):
    a = e_kev / 511.0
    t1 = (1.0 + a) / (a * a) * (2.0 * (1.0 + a) / (1.0 + 2.0 * a)
                                - math.log(1.0 + 2.0 * a) / a)
    t2 = math.log(1.0 + 2.0 * a) / (2.0 * a)
    t3 = (1.0 + 3.0 * a) / ((1.0 + 2.0 * a) ** 2)
    return t1 + t2 - t3


def k_jump_ratio(z):
    return 125.0 / z + 3.5


def mac(z, a_weight, e_kev, above_k_edge):
    tau = C_PE * z ** PE_EXPONENT / e_kev ** 3
    # Z < 37 has its K edge below the table; the shell always participates.
    if K_EDGE_KEV.get(z) is not None and not above_k_edge:
        tau /= k_jump_ratio(z)
    sigma_c = z * TWO_PI_RE2 * f_kn(e_kev)
    sigma_r = C_COH * z ** 2.5 / (e_kev * e_kev)
    return N_A / a_weight * (tau + sigma_c + sigma_r)


def energy_rows(z):
    """(energy, above_k_edge) samples; duplicated pair at the K edge."""
    base = [E_LO * (E_HI / E_LO) ** (i / (N_BASE - 1)) for i in range(N_BASE)]
    edge = K_EDGE_KEV.get(z)
    if edge is None or not (E_LO < edge < E_HI):
        return [(e, True) for e in base]
    pts = [e for e in base if abs(e - edge) / edge > 0.004]
    pts += [edge * 1.008, edge * 1.025]
    rows = [(e, e >= edge) for e in sorted(pts)]
    lo = [(e, False) for e, _ in rows if e < edge]
    hi = [(e, True) for e, _ in rows if e > edge]
    return lo + [(edge, False), (edge, True)] + hi


def main():
    out = os.path.join(os.path.dirname(__file__), "..", "data", "elements")
    os.makedirs(out, exist_ok=True)
    for z, sym, a_weight, density in ELEMENTS:
        path = os.path.join(out, f"z{z:02d}.csv")
        with open(path, "w") as f:
            f.write("energy_kev,mac_cm2_per_g\n")
            for e, above in energy_rows(z):
                f.write(f"{e:.6g},{mac(z, a_weight, e, above):.6g}\n")
    with open(os.path.join(out, "densities.csv"), "w") as f:
        f.write("z,symbol,density_g_per_cm3\n")
        for z, sym, a_weight, density in ELEMENTS:
            f.write(f"{z},{sym},{density:.6g}\n")
    print(f"wrote {len(ELEMENTS)} element tables to {out}")


if __name__ == "__main__":
    main()
