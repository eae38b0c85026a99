#pragma once

#include "qgspec/lattice.hpp"

#include <array>
#include <complex>
#include <optional>
#include <utility>

namespace qgspec {

/// Values of lambda_1, lambda_2, lambda_3 (tilded on the negative side) at one momentum.
struct KernelTriple {
    double l1 = 0.0;
    double l2 = 0.0;
    double l3 = 0.0;
    Side side = Side::positive;
};

/**
 Positive-side kernels.

 Kagome kinds: the three trigonometric polynomials of the spectral condition
   lambda_1 - lambda_2 f_theta - lambda_3 g_theta = 0
 in their displayed expanded form. Triangular: the large bracket of the
 triangular condition, split as l1 - l2 f_theta with l3 = 0.
 */
KernelTriple lambda_pos(double k, const LatticeSpec& spec);

/// Negative-side analogues at E = -kappa^2 (hyperbolic functions, unscaled).
KernelTriple lambda_neg(double kappa, const LatticeSpec& spec);

/// Positive-side formulas at a complex momentum z; lambda_j(i kappa) = tilde lambda_j(kappa).
std::array<std::complex<double>, 3> lambda_complex(std::complex<double> z, const LatticeSpec& spec);

/// Delta = l1 - l2 f_theta - l3 g_theta.
double bracket(double x, Side side, Quasimomentum theta, const LatticeSpec& spec);

/**
 Kernels used for band decisions. They equal lambda_pos / lambda_neg up to a
 nonzero common factor: the equilateral bracket drops 4(q+1)(2cos kc + 1),
 and on the negative side every kernel is multiplied by exp(-2 kappa d)
 (exp(-3 kappa c) for the equilateral bracket) so that large kappa cannot
 overflow. Small arguments are evaluated in long double.
 */
KernelTriple membership_kernels(double x, Side side, const LatticeSpec& spec);

/// h_j = l1 - e_j for the extremal values e_0 = 3 l2 (theta = gamma),
/// e_+ = -3/2 (l2 + sqrt3 l3) (k_plus), e_- = -3/2 (l2 - sqrt3 l3) (k_minus).
std::array<double, 3> edge_functions(const KernelTriple& t);

/// edge_functions(membership_kernels(x, side, spec)) without the intermediate rounding to double.
std::array<double, 3> edge_values(double x, Side side, const LatticeSpec& spec);

/// Extremum attaining edge function j of edge_functions().
ThetaExtremum edge_extremum(int j);

/// True when l1 lies between the smallest and largest extremal value.
bool kernels_in_band(const KernelTriple& t);

/// Triangular G(k); nullopt when |cos(kd/2)| or |k^2 ell^2 - 1| is below 1e-8.
std::optional<double> tri_G(double k, const LatticeSpec& spec);
double tri_G_tilde(double kappa, const LatticeSpec& spec);

/// Equilateral negative-side F(kappa); the band condition is F in [-3/2, 3].
double kagome_equilateral_F(double kappa, const LatticeSpec& spec);

/// cos kc - cos 2kc
double xi(double k, double c);

enum class AsymptoticCoefficient { alpha, beta, gamma };

/**
 High-energy coefficients of the positive bracket.
   alpha: kagome, Delta = alpha(k) (k ell)^6 + O(k^5); returned as (alpha, 0).
   beta:  equilateral bracket = beta1 k^4 + beta2 k^2 + O(1); returns (beta1, beta2).
   gamma: triangular bracket  = gamma1 k^4 + gamma2 k^2 + O(1); returns (gamma1, gamma2).
 */
std::pair<double, double> asymptotic_coefficients(double k, Quasimomentum theta, const LatticeSpec& spec,
                                                  AsymptoticCoefficient which);

} // namespace qgspec
