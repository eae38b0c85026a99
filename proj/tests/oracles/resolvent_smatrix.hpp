#pragma once

#include "qgspec/linalg.hpp"

#include <complex>

namespace qgspec::oracle {

// b = S a from (U - I) psi + i ell (U + I) psi' = 0 with psi_j = a_j e^{-ikx} + b_j e^{ikx}:
// S = -[(U - I) - k ell (U + I)]^{-1} [(U - I) + k ell (U + I)].
inline ComplexMatrix resolvent_scattering(int n, double ell, double k) {
    const std::size_t N = static_cast<std::size_t>(n);
    ComplexMatrix lhs(N, N), rhs(N, N);
    const double kl = k * ell;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            const double u = j == (i + 1) % N ? 1.0 : 0.0;
            const double id = i == j ? 1.0 : 0.0;
            lhs(i, j) = (u - id) - kl * (u + id);
            rhs(i, j) = -((u - id) + kl * (u + id));
        }
    return solve(lhs, rhs);
}

} // namespace qgspec::oracle
