#pragma once

#include <numbers>
#include <string>
#include <string_view>

namespace qgspec {

inline constexpr double pi = std::numbers::pi;
inline constexpr double sqrt3 = std::numbers::sqrt3;

enum class LatticeKind { kagome, equilateral_kagome, triangular };

/// Spectral side: positive energies E = k^2, negative energies E = -kappa^2.
enum class Side { positive, negative };

std::string_view to_string(LatticeKind kind);
std::string_view to_string(Side side);
LatticeKind parse_lattice_kind(std::string_view name);
Side parse_side(std::string_view name);

/**
 Geometry and coupling parameters of one lattice.

 The kagome cell has edges of length c and b = d - c; the triangular lattice is
 the b -> 0 limit with a single edge length d (c is stored equal to d). All
 lengths share the unit of the coupling length scale ell.
 */
struct LatticeSpec {
    LatticeKind kind = LatticeKind::kagome;
    double c = 1.0;
    double d = 3.0;
    double ell = 1.0;

    /// Kagome lattice; d == 2c yields the equilateral kind.
    static LatticeSpec kagome(double c, double d, double ell);
    static LatticeSpec equilateral(double c, double ell);
    static LatticeSpec triangular(double d, double ell);

    double b() const { return d - c; }
    bool is_kagome_family() const { return kind != LatticeKind::triangular; }

    /// Throws InvalidArgument when the invariants of `kind` do not hold.
    void validate() const;

    /// Same lattice with c and d - c exchanged.
    LatticeSpec mirrored() const;

    std::string describe() const;

    friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;
};

/// Quasimomentum components (theta1, theta2) on the torus [-pi, pi)^2.
struct Quasimomentum {
    double theta1 = 0.0;
    double theta2 = 0.0;
};

/// cos t1 + cos(t1 - t2) + cos t2, ranging through [-3/2, 3].
double f_theta(Quasimomentum q);
/// sin t2 + sin(t1 - t2) - sin t1, ranging through [-3 sqrt3/2, 3 sqrt3/2].
double g_theta(Quasimomentum q);

/// The three points where f_theta and g_theta jointly reach the corners of
/// their admissible region; band edges are attained at one of them.
enum class ThetaExtremum { gamma, k_plus, k_minus, none };

std::string_view to_string(ThetaExtremum t);
Quasimomentum theta_of(ThetaExtremum t);

} // namespace qgspec
