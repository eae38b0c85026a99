#pragma once

#include "qgspec/band_engine.hpp"
#include "qgspec/lattice.hpp"

#include <string_view>
#include <vector>

namespace qgspec {

enum class ProbabilityMethod { finite_scan, torus_area, closed_form };
std::string_view to_string(ProbabilityMethod m);

/// Fraction of the energy axis covered by the positive spectrum.
struct ProbabilityEstimate {
    double value = 0.0;
    ProbabilityMethod method = ProbabilityMethod::finite_scan;
    double K_energy = 0.0; ///< energy cutoff (finite_scan)
    long grid_n = 0;       ///< points per torus axis (torus_area)
    LatticeSpec spec;
};

/// |continuous bands on the energy axis within [0, K_energy]| / K_energy.
/// Throws InsufficientScan when the scan stops below sqrt(K_energy).
ProbabilityEstimate band_measure(const BandStructure& bands, double K_energy);

/// Positive scan up to sqrt(K_energy) followed by band_measure.
ProbabilityEstimate finite_scan_probability(const LatticeSpec& spec, double K_energy, double resolution = 0.0);

/**
 High-energy limit for incommensurate kagome edges: the area fraction of the
 torus (x, y) in [0, 2pi)^2, x = kb/2, y = kc/2, where
   (2cos(y + 2x) + cos y)(cos x + 2cos(x + 2y))(cos(y - x) + 2cos(x + y)) >= 0,
 from a grid_n x grid_n midpoint grid.
 */
ProbabilityEstimate torus_probability(const LatticeSpec& spec, int grid_n);

/// Exactly 2/3 for the equilateral kagome and triangular lattices; Unsupported otherwise.
ProbabilityEstimate closed_form_probability(const LatticeSpec& spec);

struct SweepPoint {
    double ratio = 0.0; ///< c / d
    ProbabilityEstimate estimate;
};

/// Finite-scan estimates for c = ratio * d, keeping d and ell of spec_template.
std::vector<SweepPoint> probability_sweep(const std::vector<double>& ratios, const LatticeSpec& spec_template,
                                          double K_energy, double resolution = 0.0);

} // namespace qgspec
