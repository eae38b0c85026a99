#pragma once

#include "qgspec/lattice.hpp"

#include <string>
#include <vector>

namespace qgspec {

struct AsymptoticBandPrediction {
    double center_k = 0.0;    ///< momentum (kappa on the negative side)
    double band_width_E = 0.0;
    double gap_width_E = 0.0;
    std::string order_note;
    std::string source;
};

struct NegativeLimitSet {
    std::vector<double> limit_energies; ///< ascending
    std::vector<double> widths;         ///< energy widths, same order
    std::vector<double> centers;        ///< predicted band centers, same order
};

/// Pair of narrow bands around k = (2n - 1) pi / c for the equilateral kagome lattice.
AsymptoticBandPrediction equilateral_narrow_band(int n, const LatticeSpec& spec);

/// Pair of narrow bands around k = (2n - 1) pi / d for the triangular lattice.
AsymptoticBandPrediction triangular_narrow_band(int n, const LatticeSpec& spec);

/// f(ell, c; kappa) = 4(e^{-kappa c} + 1)(kappa^2 ell^2 - 1)^2 + e^{-2 kappa c}(kappa^4 ell^4 - 14 kappa^2 ell^2 + 1)
double kagome_large_d_f(double kappa, double c, double ell);

/**
 Large-d limits of the kagome negative bands: the two roots of f(ell, c; .)
 and -ell^-2. Widths come from the first-order shift of each root by the
 e^{kappa d} term evaluated at the three extremal quasimomenta.
 */
NegativeLimitSet kagome_negative_large_d(const LatticeSpec& spec);

/// Two bands of width sqrt3 ell^-2 e^{-c/ell} separated by 2 sqrt3 ell^-2 e^{-c/ell} around -ell^-2.
AsymptoticBandPrediction equilateral_negative_widths(const LatticeSpec& spec);

/// Limits -3 ell^-2 and -ell^-2/3 with widths 18 ell^-2 e^{-sqrt3 d/ell} and 2 ell^-2 e^{-d/(sqrt3 ell)}.
NegativeLimitSet triangular_negative_large_d(const LatticeSpec& spec);

/// Measured pair of bands around a center on one side: the nearest band below and above.
struct MeasuredPair {
    bool found = false;
    double lower_width_E = 0.0;
    double upper_width_E = 0.0;
    double gap_E = 0.0;
    double mean_width_E() const { return 0.5 * (lower_width_E + upper_width_E); }
};

MeasuredPair measure_pair(const LatticeSpec& spec, Side side, double center, double half_window);

struct ComparisonRow {
    std::string quantity;
    double predicted = 0.0;
    double measured = 0.0;
    double relative_error = 0.0;
};

/// Predictions for spec compared against scans; n selects the narrow-band pair.
std::vector<ComparisonRow> asymptotic_report(const LatticeSpec& spec, int n);

} // namespace qgspec
