#include "qgspec/asymptotics.hpp"

#include "qgspec/band_engine.hpp"
#include "qgspec/errors.hpp"
#include "scan_detail.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qgspec {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw InvalidArgument(what);
}

template <typename F>
double bisect_root(F f, double lo, double hi) {
    double flo = f(lo);
    for (int it = 0; it < 400 && hi - lo > 1e-12 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// theta-dependent e^{kappa d} coefficient of the large-d kagome condition
double kagome_large_d_g(double kappa, double c, double ell, Quasimomentum th) {
    const double p = kappa * kappa * ell * ell;
    const double e1 = std::exp(-kappa * c), e2 = e1 * e1;
    const double pp = (p + 1.0) * (p + 1.0);
    return (e2 + 3.0 * e1 + 2.0) * (p - 1.0) * pp * f_theta(th) -
           2.0 * kappa * ell * e2 * (std::exp(kappa * c) - 1.0) * pp * g_theta(th) -
           (p - 1.0) * (e2 * (p * p - 14.0 * p + 1.0) + e1 * (5.0 * p * p - 22.0 * p + 5.0) +
                        4.0 * (std::exp(kappa * c) + 2.0) * (p - 1.0) * (p - 1.0));
}

double relative_error(double predicted, double measured) {
    if (predicted == 0.0) return std::abs(measured);
    return std::abs(measured - predicted) / std::abs(predicted);
}

} // namespace

AsymptoticBandPrediction equilateral_narrow_band(int n, const LatticeSpec& spec) {
    require(spec.kind == LatticeKind::equilateral_kagome, "narrow-band formula needs the equilateral kagome lattice");
    require(n >= 1, "band pair index must be at least 1");
    const double s = sqrt3 / (5.0 * spec.c * spec.ell);
    return {(2 * n - 1) * pi / spec.c, 2.0 * s, 16.0 * s, "O(1/n)", "narrow-band pair expansion, f_theta in {-3/2, 3}"};
}

AsymptoticBandPrediction triangular_narrow_band(int n, const LatticeSpec& spec) {
    require(spec.kind == LatticeKind::triangular, "narrow-band formula needs the triangular lattice");
    require(n >= 1, "band pair index must be at least 1");
    const double s = 4.0 / (sqrt3 * spec.d * spec.ell);
    return {(2 * n - 1) * pi / spec.d, s, 2.0 * s, "O(1/n)", "narrow-band pair expansion, f_theta in {-3/2, 3}"};
}

double kagome_large_d_f(double kappa, double c, double ell) {
    const double p = kappa * kappa * ell * ell;
    const double e1 = std::exp(-kappa * c);
    return 4.0 * (e1 + 1.0) * (p - 1.0) * (p - 1.0) + e1 * e1 * (p * p - 14.0 * p + 1.0);
}

NegativeLimitSet kagome_negative_large_d(const LatticeSpec& spec) {
    spec.validate();
    require(spec.is_kagome_family(), "large-d negative limits need a kagome lattice");
    const double c = spec.c, ell = spec.ell, d = spec.d;
    auto f = [&](double k) { return kagome_large_d_f(k, c, ell); };
    const double k1 = 1.0 / ell;
    if (!(f(0.0) > 0.0 && f(k1) < 0.0)) throw ConsistencyError("large-d kagome function lost its sign bracket");
    double hi = 2.0 * k1;
    while (f(hi) <= 0.0) {
        hi *= 2.0;
        if (hi > 1e6 * k1) throw ConsistencyError("large-d kagome function has no root above 1/ell");
    }
    const double roots[3] = {bisect_root(f, k1, hi), k1, bisect_root(f, 0.0, k1)};

    NegativeLimitSet out;
    auto lead = [&](double k) { return (1.0 - k * k * ell * ell) * f(k); };
    for (double kstar : roots) {
        const double h = 1e-6 * kstar;
        const double slope = (lead(kstar + h) - lead(kstar - h)) / (2.0 * h);
        double e_min = std::numeric_limits<double>::infinity(), e_max = -e_min;
        for (auto t : {ThetaExtremum::gamma, ThetaExtremum::k_plus, ThetaExtremum::k_minus}) {
            const double shift = -kagome_large_d_g(kstar, c, ell, theta_of(t)) * std::exp(-kstar * d) / slope;
            const double e = -(kstar + shift) * (kstar + shift);
            e_min = std::min(e_min, e);
            e_max = std::max(e_max, e);
        }
        out.limit_energies.push_back(-kstar * kstar);
        out.widths.push_back(e_max - e_min);
        out.centers.push_back(0.5 * (e_min + e_max));
    }
    return out;
}

AsymptoticBandPrediction equilateral_negative_widths(const LatticeSpec& spec) {
    require(spec.kind == LatticeKind::equilateral_kagome, "negative widths formula needs the equilateral kagome lattice");
    const double w = sqrt3 * std::exp(-spec.c / spec.ell) / (spec.ell * spec.ell);
    return {1.0 / spec.ell, w, 2.0 * w, "O(exp(-2c/ell))", "expansion around E = -1/ell^2"};
}

NegativeLimitSet triangular_negative_large_d(const LatticeSpec& spec) {
    require(spec.kind == LatticeKind::triangular, "large-d negative limits need the triangular lattice");
    spec.validate();
    const double l2 = 1.0 / (spec.ell * spec.ell);
    const double e1 = std::exp(-sqrt3 * spec.d / spec.ell);
    const double e2 = std::exp(-spec.d / (sqrt3 * spec.ell));
    // Centers: f_theta at the middle of [-3/2, 3].
    NegativeLimitSet out;
    out.limit_energies = {-3.0 * l2, -l2 / 3.0};
    out.widths = {18.0 * l2 * e1, 2.0 * l2 * e2};
    out.centers = {-3.0 * l2 - 4.0 * l2 * e1 * 0.75, -l2 / 3.0 + 4.0 / 9.0 * l2 * e2 * 0.75};
    return out;
}

MeasuredPair measure_pair(const LatticeSpec& spec, Side side, double center, double half_window) {
    const double lo = std::max(center - half_window, 1e-9);
    const auto segs = detail::scan_window(spec, side, lo, center + half_window, 20000);
    const detail::Segment* below = nullptr;
    const detail::Segment* above = nullptr;
    for (const auto& s : segs) {
        if (s.hi <= center) below = &s;
        else if (s.lo >= center && !above) above = &s;
    }
    MeasuredPair m;
    if (!below || !above) return m;
    m.found = true;
    m.lower_width_E = below->hi * below->hi - below->lo * below->lo;
    m.upper_width_E = above->hi * above->hi - above->lo * above->lo;
    m.gap_E = above->lo * above->lo - below->hi * below->hi;
    return m;
}

namespace {

void pair_rows(std::vector<ComparisonRow>& rows, const std::string& tag, const AsymptoticBandPrediction& p,
               const MeasuredPair& m) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double width = m.found ? m.mean_width_E() : nan;
    const double gap = m.found ? m.gap_E : nan;
    rows.push_back({tag + "_band_width", p.band_width_E, width, relative_error(p.band_width_E, width)});
    rows.push_back({tag + "_gap_width", p.gap_width_E, gap, relative_error(p.gap_width_E, gap)});
    const double ratio = p.gap_width_E / p.band_width_E;
    rows.push_back({tag + "_gap_band_ratio", ratio, gap / width, relative_error(ratio, gap / width)});
}

void limit_rows(std::vector<ComparisonRow>& rows, const NegativeLimitSet& lim, const BandStructure& neg) {
    const auto bands = neg.continuous();
    for (std::size_t i = 0; i < lim.limit_energies.size(); ++i) {
        const SpectralInterval* best = nullptr;
        double dist = std::numeric_limits<double>::infinity();
        for (const auto& b : bands) {
            const double mid = 0.5 * (b.energy_lo + b.energy_hi);
            if (std::abs(mid - lim.limit_energies[i]) < dist) {
                dist = std::abs(mid - lim.limit_energies[i]);
                best = &b;
            }
        }
        const std::string tag = "negative_band_" + std::to_string(i + 1);
        const double nan = std::numeric_limits<double>::quiet_NaN();
        const double center = best ? 0.5 * (best->energy_lo + best->energy_hi) : nan;
        const double width = best ? best->width_energy() : nan;
        rows.push_back({tag + "_limit_energy", lim.limit_energies[i], center,
                        relative_error(lim.limit_energies[i], center)});
        rows.push_back({tag + "_center", lim.centers[i], center, relative_error(lim.centers[i], center)});
        rows.push_back({tag + "_width", lim.widths[i], width, relative_error(lim.widths[i], width)});
    }
}

} // namespace

std::vector<ComparisonRow> asymptotic_report(const LatticeSpec& spec, int n) {
    spec.validate();
    std::vector<ComparisonRow> rows;
    switch (spec.kind) {
    case LatticeKind::equilateral_kagome: {
        const auto p = equilateral_narrow_band(n, spec);
        pair_rows(rows, "positive_pair_n" + std::to_string(n), p,
                  measure_pair(spec, Side::positive, p.center_k, 0.25 * pi / spec.c));
        const auto q = equilateral_negative_widths(spec);
        pair_rows(rows, "negative_pair", q, measure_pair(spec, Side::negative, q.center_k, 0.9 / spec.ell));
        break;
    }
    case LatticeKind::triangular: {
        const auto p = triangular_narrow_band(n, spec);
        pair_rows(rows, "positive_pair_n" + std::to_string(n), p,
                  measure_pair(spec, Side::positive, p.center_k, 0.25 * pi / spec.d));
        limit_rows(rows, triangular_negative_large_d(spec), scan_negative_bands(spec));
        break;
    }
    case LatticeKind::kagome:
        limit_rows(rows, kagome_negative_large_d(spec), scan_negative_bands(spec));
        break;
    }
    return rows;
}

} // namespace qgspec
