#pragma once

#include "qgspec/lattice.hpp"
#include "qgspec/linalg.hpp"

#include <complex>

namespace qgspec {

/**
 Floquet secular system of one elementary cell.

 Kagome (12 x 12). Columns are the amplitudes X+ and X- of
   X(x) = X+ e^{izx} + X- e^{-izx},
 in the order B3+, B3-, B4+, B4-, C1+, C1-, C4+, C4-, D3+, D3-, D4+, D4-.
 The Floquet and midpoint conditions are substituted beforehand:
   psi1(x) = e^{i theta2} C1(x - c),  psi2(x) = e^{i(theta2 - theta1)} D4(x - c),
   chi1(x) = e^{i theta1} C4(x - c),
   psi3 = phi3 = B3, psi4 = chi2 = B4, phi1 = C1, phi4 = C4, phi2 = chi3 = D3, chi4 = D4.
 Rows 0-3, 4-7 and 8-11 are the vertex conditions at the psi, phi and chi
 vertices. Each vertex lists its edges in cyclic order
   psi: psi1, psi2, psi3, psi4    phi: phi1, phi2, phi3, phi4    chi: chi1, chi2, chi3, chi4
 and row j of a vertex reads
   u_{j+1} - u_j + i ell (u'_{j+1} + u'_j) = 0
 with u'_j the outgoing derivative of the j-th edge at the vertex.

 Triangular (6 x 6). Columns C1+, C1-, C4+, C4-, D4+, D4-; a single vertex
 with the cyclic edge order psi1, psi2, phi4, phi1, chi4, chi1, where
 psi1 = e^{i theta2} C1(x - d), psi2 = e^{i(theta2 - theta1)} D4(x - d),
 chi1 = e^{i theta1} C4(x - d).
 */
struct SecularSystem {
    int dimension = 0;
    ComplexMatrix matrix;
    std::complex<double> momentum;
    Quasimomentum theta;
    LatticeSpec spec;
};

SecularSystem kagome_secular_matrix(std::complex<double> z, Quasimomentum theta, const LatticeSpec& spec);
SecularSystem triangular_secular_matrix(std::complex<double> z, Quasimomentum theta, const LatticeSpec& spec);

/// Determinant of the kagome or triangular system, chosen by spec.kind.
std::complex<double> secular_det(std::complex<double> z, Quasimomentum theta, const LatticeSpec& spec);
std::complex<double> triangular_secular_det(std::complex<double> z, Quasimomentum theta, const LatticeSpec& spec);

/**
 Known factor of the determinant:
   kagome      -1024 i e^{2i theta2} (z ell)^3 sin(zc/2) sin(zd/2) sin(z(d-c)/2)
   triangular    -32   e^{2i theta2} (z ell)   sin^2(zd/2)
 The quotient det / factor is the spectral bracket Delta.
 */
std::complex<double> determinant_prefactor(std::complex<double> z, Quasimomentum theta, const LatticeSpec& spec,
                                           bool include_sines = true);

struct NormalizedDet {
    std::complex<double> det;
    double normalized = 0.0; ///< real part of det / prefactor
    bool raw = false;        ///< sine factors skipped because one was within 1e-8 of zero
};

NormalizedDet normalized_secular_det(std::complex<double> z, Quasimomentum theta, const LatticeSpec& spec);

/**
 Brute-force membership: true when the normalized determinant changes sign or
 vanishes (|v| < 1e-9 max|v|) over the n x n theta grid on [-pi, pi)^2. The
 grid minimum is then polished by a compass search so that band edges attained
 off the grid are still resolved. x is k on the positive side, kappa on the
 negative side.
 */
bool oracle_in_spectrum(double x, const LatticeSpec& spec, int theta_grid_n, Side side = Side::positive);

} // namespace qgspec
