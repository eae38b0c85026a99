#include "qgspec/spectral_probability.hpp"

#include "qgspec/errors.hpp"
#include "qgspec/parallel.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace qgspec {

std::string_view to_string(ProbabilityMethod m) {
    switch (m) {
    case ProbabilityMethod::finite_scan: return "finite_scan";
    case ProbabilityMethod::torus_area: return "torus_area";
    case ProbabilityMethod::closed_form: return "closed_form";
    }
    return "finite_scan";
}

ProbabilityEstimate band_measure(const BandStructure& bands, double K_energy) {
    if (bands.side != Side::positive) throw InvalidArgument("band measure needs the positive spectrum");
    if (!(K_energy > 0.0)) throw InvalidArgument("energy cutoff must be positive");
    if (bands.scan_k_max * bands.scan_k_max < K_energy * (1.0 - 1e-12)) {
        std::ostringstream os;
        os << "scan reaches k = " << bands.scan_k_max << " but the cutoff needs k = " << std::sqrt(K_energy);
        throw InsufficientScan(os.str());
    }
    long double covered = 0.0L;
    for (const auto& b : bands.intervals) {
        if (b.band_type != BandType::continuous || b.energy_lo >= K_energy) continue;
        covered += std::min(b.energy_hi, K_energy) - b.energy_lo;
    }
    return {static_cast<double>(covered / K_energy), ProbabilityMethod::finite_scan, K_energy, 0, bands.spec};
}

ProbabilityEstimate finite_scan_probability(const LatticeSpec& spec, double K_energy, double resolution) {
    if (!(K_energy > 0.0)) throw InvalidArgument("energy cutoff must be positive");
    return band_measure(scan_bands(spec, Side::positive, std::sqrt(K_energy), resolution), K_energy);
}

ProbabilityEstimate torus_probability(const LatticeSpec& spec, int grid_n) {
    spec.validate();
    if (grid_n < 100) throw InvalidArgument("torus grid needs grid_n >= 100");
    if (spec.kind == LatticeKind::triangular) throw Unsupported("the torus limit applies to kagome lattices");

    const double h = 2.0 * pi / grid_n;
    std::vector<double> cos_x(grid_n);
    for (int i = 0; i < grid_n; ++i) cos_x[i] = std::cos((i + 0.5) * h);
    // Every argument below is an integer combination of grid midpoints, so
    // cos(m x + n y) is looked up from cos_x by index arithmetic mod grid_n.
    // Midpoints sit at (i + 1/2) h, so a sum of an odd number of them is again
    // a midpoint and an even sum lands on the shifted lattice i h.
    std::vector<double> cos_int(grid_n);
    for (int i = 0; i < grid_n; ++i) cos_int[i] = std::cos(i * h);
    auto wrap = [grid_n](long v) { return static_cast<int>(((v % grid_n) + grid_n) % grid_n); };
    // cos of (a (i + 1/2) + b (j + 1/2)) h with a + b odd -> midpoint index (2 * shift) / 2
    auto cos_comb = [&](int a, int i, int b, int j) {
        const long twice = static_cast<long>(a) * (2 * i + 1) + static_cast<long>(b) * (2 * j + 1);
        if (twice % 2 != 0) return cos_x[wrap((twice - 1) / 2)];
        return cos_int[wrap(twice / 2)];
    };

    std::vector<long> counts(grid_n, 0);
    parallel_chunks(static_cast<std::size_t>(grid_n), [&](std::size_t row) {
        const int j = static_cast<int>(row); // y index
        long count = 0;
        for (int i = 0; i < grid_n; ++i) { // x index
            const double f1 = 2.0 * cos_comb(2, i, 1, j) + cos_x[j];
            const double f2 = cos_x[i] + 2.0 * cos_comb(1, i, 2, j);
            const double f3 = cos_comb(-1, i, 1, j) + 2.0 * cos_comb(1, i, 1, j);
            if (f1 * f2 * f3 >= 0.0) ++count;
        }
        counts[row] = count;
    });
    const long total = std::accumulate(counts.begin(), counts.end(), 0L);
    const double value = static_cast<double>(total) / (static_cast<double>(grid_n) * grid_n);
    return {value, ProbabilityMethod::torus_area, 0.0, grid_n, spec};
}

ProbabilityEstimate closed_form_probability(const LatticeSpec& spec) {
    spec.validate();
    if (spec.kind == LatticeKind::kagome)
        throw Unsupported("no closed-form band measure for the general kagome lattice");
    return {2.0 / 3.0, ProbabilityMethod::closed_form, 0.0, 0, spec};
}

std::vector<SweepPoint> probability_sweep(const std::vector<double>& ratios, const LatticeSpec& spec_template,
                                          double K_energy, double resolution) {
    std::vector<SweepPoint> out;
    out.reserve(ratios.size());
    for (double r : ratios) {
        if (!(r > 0.0 && r < 1.0)) throw InvalidArgument("sweep ratios must lie in (0, 1)");
        const LatticeSpec s = LatticeSpec::kagome(r * spec_template.d, spec_template.d, spec_template.ell);
        out.push_back({r, finite_scan_probability(s, K_energy, resolution)});
    }
    return out;
}

} // namespace qgspec
