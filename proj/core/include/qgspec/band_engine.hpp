#pragma once

#include "qgspec/lattice.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qgspec {

enum class BandType { continuous, flat, degenerate_point };
std::string_view to_string(BandType t);

/**
 One band on the momentum axis (kappa on the negative side). Energies are
 E = k^2 or E = -kappa^2; energy_lo <= energy_hi in both cases, so on the
 negative side energy_lo belongs to k_hi.
 */
struct SpectralInterval {
    double k_lo = 0.0;
    double k_hi = 0.0;
    Side side = Side::positive;
    BandType band_type = BandType::continuous;
    double energy_lo = 0.0;
    double energy_hi = 0.0;
    ThetaExtremum edge_theta_lo = ThetaExtremum::none;
    ThetaExtremum edge_theta_hi = ThetaExtremum::none;

    double width_k() const { return k_hi - k_lo; }
    double width_energy() const { return energy_hi - energy_lo; }
};

SpectralInterval make_interval(double k_lo, double k_hi, Side side, BandType type,
                               ThetaExtremum lo = ThetaExtremum::none, ThetaExtremum hi = ThetaExtremum::none);

struct BandStructure {
    LatticeSpec spec;
    Side side = Side::positive;
    std::vector<SpectralInterval> intervals; ///< sorted by k_lo
    double scan_k_max = 0.0;
    double resolution = 0.0;
    double edge_tolerance = 1e-10; ///< relative
    std::vector<std::string> warnings;

    std::vector<SpectralInterval> continuous() const;
};

enum class FlatBandFamily { c_family, b_family, d_family, equilateral_merged, david_star, degenerate_point };
std::string_view to_string(FlatBandFamily f);

struct FlatBand {
    double k = 0.0;
    FlatBandFamily family = FlatBandFamily::c_family;
    std::string multiplicity_note; ///< other families sharing this k, if any
    bool embedded = false;
};

/// Positive-side flat bands with k <= k_max, ascending; coinciding families are merged.
std::vector<FlatBand> flat_bands(const LatticeSpec& spec, double k_max);

/// True when some edge length over ell is 2pi/3 or 4pi/3 mod 2pi, making k = 1/ell a degenerate point.
bool has_degenerate_point(const LatticeSpec& spec);

/// Band membership from the three extremal theta values. x is k or kappa.
bool in_band(double x, Side side, const LatticeSpec& spec);

/// Default momentum step 2 pi / (1000 d).
double default_resolution(const LatticeSpec& spec);

/**
 Scans [0, k_max] for bands. On the positive side the step is `resolution`
 up to k = x_c and then shrinks like 1/k so the energy step stays near
 0.1/(d ell); this keeps the O(1)-wide narrow bands at high energy resolved.
 Every sign change of an edge function is refined by bisection. resolution <= 0
 selects default_resolution().
 */
BandStructure scan_bands(const LatticeSpec& spec, Side side, double k_max, double resolution = 0.0);

/// Negative spectrum up to kappa_max (default 10/ell). Throws ConsistencyError
/// when the band count exceeds 3 (kagome) or 2 (triangular).
BandStructure scan_negative_bands(const LatticeSpec& spec, double kappa_max = 0.0, double resolution = 0.0);

struct Threshold {
    bool positive_starts_at_zero = false;
    bool negative_reaches_zero = false;
};

/// d >= 2 sqrt3 ell and d <= 2 sqrt3 ell respectively.
Threshold spectral_threshold(const LatticeSpec& spec);

struct GapClosing {
    double k = 0.0;
    double d = 0.0;
    ThetaExtremum theta = ThetaExtremum::none;
    double gap = 0.0; ///< gap width in k at the candidate, 0 when the edges merge inside a band
};

/**
 Candidate (k, d) where two bands touch: simultaneous zeros of an edge
 function and its k and d derivatives, the theta derivatives vanishing at the
 three extremal points automatically. c and ell come from spec. Candidates are
 kept only when a scan at that d shows the gap narrower than 1e-6 in k.
 */
std::vector<GapClosing> detect_gap_closings(const LatticeSpec& spec, std::pair<double, double> k_window,
                                            std::pair<double, double> d_window, Side side = Side::positive);

} // namespace qgspec
