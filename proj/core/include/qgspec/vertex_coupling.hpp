#pragma once

#include "qgspec/linalg.hpp"

#include <vector>

namespace qgspec {

/// N x N circulant shift: ones at (i, i+1 mod N), zeros elsewhere.
struct CirculantU {
    int size = 0;
    RealMatrix entries;
};

/// On-shell scattering matrix S(k) of one vertex with the circulant coupling.
struct ScatteringMatrix {
    int size = 0;
    double k = 0.0;
    double ell = 0.0;
    double eta = 0.0; ///< (1 - k ell) / (1 + k ell)
    ComplexMatrix entries;
};

CirculantU build_circulant_u(int n);

/**
 Component formula

   S_ij = (1 - eta^2)/(1 - eta^N) * ( -eta (1 - eta^(N-2))/(1 - eta^2) delta_ij
                                      + (1 - delta_ij) eta^((j - i - 1) mod N) ),

 evaluated with 1 +- eta taken from k ell directly so that the matrix stays
 unitary to rounding for any k ell > 0, including k ell >> 1 where eta -> -1.
 */
ScatteringMatrix scattering_matrix(int n, double ell, double k);

/// lim_{k -> inf} S(k). Closed forms for N = 4 and N = 6, otherwise S at k ell = 1e8.
RealMatrix high_energy_limit(int n);

/// Momentum-scale argument k ell used for the numeric high-energy limit.
inline constexpr double high_energy_k_ell = 1e8;

/// Bound states -ell^-2 tan^2(m pi / N) of the star graph, ascending.
std::vector<double> star_negative_eigenvalues(int n, double ell);

} // namespace qgspec
