#include "qgspec/vertex_coupling.hpp"

#include "qgspec/errors.hpp"
#include "qgspec/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qgspec {

namespace {

void require_degree(int n) {
    if (n < 3) throw InvalidArgument("vertex degree must be at least 3, got " + std::to_string(n));
}

// Quantities derived from eta without cancellation.
struct EtaPowers {
    double eta;
    double one_plus;  // 1 + eta = 2/(1 + k ell)
    double one_minus; // 1 - eta = 2 k ell/(1 + k ell)
    double log_abs;   // log|eta|

    explicit EtaPowers(double k_ell)
        : eta((1.0 - k_ell) / (1.0 + k_ell)),
          one_plus(2.0 / (1.0 + k_ell)),
          one_minus(2.0 * k_ell / (1.0 + k_ell)),
          log_abs(std::log1p(-std::min(one_plus, one_minus))) {}

    // 1 - eta^m
    double one_minus_pow(int m) const {
        if (eta >= 0.0 || m % 2 == 0) return -std::expm1(m * log_abs);
        return 1.0 + std::exp(m * log_abs);
    }
};

} // namespace

CirculantU build_circulant_u(int n) {
    require_degree(n);
    CirculantU u{n, RealMatrix(n, n)};
    for (int i = 0; i < n; ++i) u.entries(i, (i + 1) % n) = 1.0;
    return u;
}

ScatteringMatrix scattering_matrix(int n, double ell, double k) {
    require_degree(n);
    if (!(ell > 0.0) || !(k > 0.0)) throw InvalidArgument("scattering matrix needs ell > 0 and k > 0");

    const EtaPowers p(k * ell);
    ScatteringMatrix s{n, k, ell, p.eta, ComplexMatrix(n, n)};

    const double denom = p.one_minus_pow(n);
    const double prefactor = p.one_plus * p.one_minus / denom; // (1 - eta^2)/(1 - eta^N)
    const double diagonal = -p.eta * p.one_minus_pow(n - 2) / denom;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                s.entries(i, j) = diagonal;
            } else {
                const int power = ((j - i - 1) % n + n) % n;
                s.entries(i, j) = prefactor * std::pow(p.eta, power);
            }
        }
    }
    return s;
}

RealMatrix high_energy_limit(int n) {
    require_degree(n);
    if (n == 4) {
        RealMatrix m{{1, 1, -1, 1}, {1, 1, 1, -1}, {-1, 1, 1, 1}, {1, -1, 1, 1}};
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) m(i, j) *= 0.5;
        return m;
    }
    if (n == 6) {
        // (2/3) I + (1/3) P, P_ij = (-1)^(i+j+1) off the diagonal
        RealMatrix m(6, 6);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j)
                m(i, j) = i == j ? 2.0 / 3.0 : ((i + j) % 2 == 1 ? 1.0 : -1.0) / 3.0;
        return m;
    }
    const ScatteringMatrix s = scattering_matrix(n, 1.0, high_energy_k_ell);
    RealMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = s.entries(i, j).real();
    return m;
}

std::vector<double> star_negative_eigenvalues(int n, double ell) {
    require_degree(n);
    if (!(ell > 0.0)) throw InvalidArgument("ell must be positive");
    // floor(N/2) for odd N and floor((N-1)/2) for even N coincide.
    const int m_max = (n - 1) / 2;
    std::vector<double> out;
    out.reserve(m_max);
    for (int m = 1; m <= m_max; ++m) {
        const double t = std::tan(m * pi / n);
        out.push_back(-t * t / (ell * ell));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace qgspec
