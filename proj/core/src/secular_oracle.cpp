#include "qgspec/secular_oracle.hpp"

#include "qgspec/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace qgspec {

namespace {

using cplx = std::complex<double>;
constexpr cplx I{0.0, 1.0};

// Floquet phase carried by an edge function: 1, e^{i t2}, e^{i(t2 - t1)}, e^{i t1}.
enum Phase { none = 0, t2 = 1, t2_minus_t1 = 2, t1 = 3 };

struct EdgeTerm {
    int unknown;  // amplitude pair index
    Phase phase;
    double shift; // argument is x - shift
    double x;     // vertex position on the edge
    int sign;     // +1 when increasing x points away from the vertex
};

using Vertex = std::vector<EdgeTerm>;

std::vector<Vertex> kagome_vertices(const LatticeSpec& s) {
    const double b = s.b(), c = s.c;
    enum { B3, B4, C1, C4, D3, D4 };
    return {
        {{C1, t2, c, 0.0, +1}, {D4, t2_minus_t1, c, 0.0, +1}, {B3, none, 0, b / 2, -1}, {B4, none, 0, b / 2, -1}},
        {{C1, none, 0, 0.0, -1}, {D3, none, 0, -b / 2, +1}, {B3, none, 0, -b / 2, +1}, {C4, none, 0, 0.0, -1}},
        {{C4, t1, c, 0.0, +1}, {B4, none, 0, -b / 2, +1}, {D3, none, 0, b / 2, -1}, {D4, none, 0, 0.0, -1}},
    };
}

std::vector<Vertex> triangular_vertices(const LatticeSpec& s) {
    const double d = s.d;
    enum { C1, C4, D4 };
    return {{{C1, t2, d, 0.0, +1},
             {D4, t2_minus_t1, d, 0.0, +1},
             {C4, none, 0, 0.0, -1},
             {C1, none, 0, 0.0, -1},
             {D4, none, 0, 0.0, -1},
             {C4, t1, d, 0.0, +1}}};
}

// Secular matrix split by Floquet phase: M(theta) = sum_p phase_p(theta) parts[p].
struct PhaseSplit {
    std::size_t n = 0;
    std::array<ComplexMatrix, 4> parts;

    PhaseSplit(cplx z, const LatticeSpec& spec, const std::vector<Vertex>& vertices) {
        for (const auto& v : vertices) n += v.size();
        for (auto& p : parts) p = ComplexMatrix(n, n);
        const double ell = spec.ell;
        std::size_t row = 0;
        for (const auto& v : vertices) {
            const std::size_t m = v.size();
            for (std::size_t j = 0; j < m; ++j, ++row) {
                add(row, v[j], -1.0, z, ell);
                add(row, v[(j + 1) % m], +1.0, z, ell);
            }
        }
    }

    // sigma u(x) + i ell s u'(x) for u(x) = A+ e^{iz(x-shift)} + A- e^{-iz(x-shift)}
    void add(std::size_t row, const EdgeTerm& e, double sigma, cplx z, double ell) {
        const cplx ep = std::exp(I * z * (e.x - e.shift));
        const cplx em = std::exp(-I * z * (e.x - e.shift));
        auto& m = parts[e.phase];
        m(row, 2 * e.unknown) += ep * (sigma - ell * e.sign * z);
        m(row, 2 * e.unknown + 1) += em * (sigma + ell * e.sign * z);
    }

    ComplexMatrix at(Quasimomentum th) const {
        const std::array<cplx, 4> w{1.0, std::polar(1.0, th.theta2), std::polar(1.0, th.theta2 - th.theta1),
                                    std::polar(1.0, th.theta1)};
        ComplexMatrix out = parts[0];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (int p = 1; p < 4; ++p) {
                    const cplx v = parts[p](i, j);
                    if (v != 0.0) out(i, j) += w[p] * v;
                }
        return out;
    }
};

PhaseSplit split_for(cplx z, const LatticeSpec& spec) {
    if (spec.kind == LatticeKind::triangular) return PhaseSplit(z, spec, triangular_vertices(spec));
    return PhaseSplit(z, spec, kagome_vertices(spec));
}

constexpr double sine_floor = 1e-8;

struct Normalizer {
    cplx base;          // prefactor without theta phase and sines
    cplx sines{1.0};
    bool raw = false;

    Normalizer(cplx z, const LatticeSpec& spec) {
        const cplx zl = z * spec.ell;
        if (spec.kind == LatticeKind::triangular) {
            base = -32.0 * zl;
            const cplx s = std::sin(z * spec.d / 2.0);
            raw = std::abs(s) < sine_floor;
            sines = s * s;
        } else {
            base = -1024.0 * I * zl * zl * zl;
            const cplx s1 = std::sin(z * spec.c / 2.0), s2 = std::sin(z * spec.d / 2.0), s3 = std::sin(z * spec.b() / 2.0);
            raw = std::min({std::abs(s1), std::abs(s2), std::abs(s3)}) < sine_floor;
            sines = s1 * s2 * s3;
        }
    }

    cplx factor(Quasimomentum th, bool with_sines) const {
        const cplx f = base * std::polar(1.0, 2.0 * th.theta2);
        return with_sines ? f * sines : f;
    }

    double normalize(cplx det, Quasimomentum th) const { return (det / factor(th, !raw)).real(); }
};

} // namespace

SecularSystem kagome_secular_matrix(cplx z, Quasimomentum theta, const LatticeSpec& spec) {
    if (spec.kind == LatticeKind::triangular)
        throw InvalidArgument("kagome secular matrix needs a kagome lattice; use the triangular system");
    spec.validate();
    if (z == 0.0) throw InvalidArgument("secular matrix needs z != 0");
    return {12, PhaseSplit(z, spec, kagome_vertices(spec)).at(theta), z, theta, spec};
}

SecularSystem triangular_secular_matrix(cplx z, Quasimomentum theta, const LatticeSpec& spec) {
    if (spec.kind != LatticeKind::triangular) throw InvalidArgument("triangular secular matrix needs a triangular lattice");
    spec.validate();
    return {6, PhaseSplit(z, spec, triangular_vertices(spec)).at(theta), z, theta, spec};
}

cplx triangular_secular_det(cplx z, Quasimomentum theta, const LatticeSpec& spec) {
    return determinant(triangular_secular_matrix(z, theta, spec).matrix);
}

cplx secular_det(cplx z, Quasimomentum theta, const LatticeSpec& spec) {
    if (spec.kind == LatticeKind::triangular) return triangular_secular_det(z, theta, spec);
    return determinant(kagome_secular_matrix(z, theta, spec).matrix);
}

cplx determinant_prefactor(cplx z, Quasimomentum theta, const LatticeSpec& spec, bool include_sines) {
    return Normalizer(z, spec).factor(theta, include_sines);
}

NormalizedDet normalized_secular_det(cplx z, Quasimomentum theta, const LatticeSpec& spec) {
    const Normalizer norm(z, spec);
    const cplx det = secular_det(z, theta, spec);
    return {det, norm.normalize(det, theta), norm.raw};
}

bool oracle_in_spectrum(double x, const LatticeSpec& spec, int theta_grid_n, Side side) {
    if (theta_grid_n < 8) throw InvalidArgument("oracle theta grid needs n >= 8");
    if (!(x > 0.0)) throw InvalidArgument("oracle momentum must be positive");
    spec.validate();

    const cplx z = side == Side::positive ? cplx{x, 0.0} : cplx{0.0, x};
    const PhaseSplit split = split_for(z, spec);
    const Normalizer norm(z, spec);
    auto value = [&](Quasimomentum th) { return norm.normalize(determinant(split.at(th)), th); };

    struct Sample {
        double v;
        Quasimomentum th;
    };
    const int n = theta_grid_n;
    const double h = 2.0 * pi / n;
    std::vector<Sample> samples;
    samples.reserve(static_cast<std::size_t>(n) * n);
    bool seen_pos = false, seen_neg = false;
    double scale = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Quasimomentum th{-pi + i * h, -pi + j * h};
            const double v = value(th);
            if (v > 0.0) seen_pos = true;
            if (v < 0.0) seen_neg = true;
            if (seen_pos && seen_neg) return true;
            scale = std::max(scale, std::abs(v));
            samples.push_back({v, th});
        }
    }
    if (scale == 0.0) return true;
    const double tol = 1e-9 * scale;

    // Every grid value has one sign; push the best candidates toward zero.
    const double dir = seen_pos ? 1.0 : -1.0;
    std::partial_sort(samples.begin(), samples.begin() + 3, samples.end(),
                      [&](const Sample& a, const Sample& b) { return dir * a.v < dir * b.v; });
    for (int s = 0; s < 3; ++s) {
        Sample best = samples[s];
        if (std::abs(best.v) < tol) return true;
        double step = h;
        while (step > 1e-9) {
            bool moved = false;
            for (const auto& [a, b] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}}) {
                const Quasimomentum th{best.th.theta1 + a * step, best.th.theta2 + b * step};
                const double v = value(th);
                if (dir * v <= 0.0 || std::abs(v) < tol) return true;
                if (dir * v < dir * best.v) {
                    best = {v, th};
                    moved = true;
                }
            }
            if (!moved) step *= 0.5;
        }
    }
    return false;
}

} // namespace qgspec
