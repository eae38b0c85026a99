#include "qgspec/band_engine.hpp"

#include "qgspec/errors.hpp"
#include "qgspec/spectral_kernels.hpp"
#include "scan_detail.hpp"

#include <algorithm>
#include <cmath>

namespace qgspec {

namespace {

// Spec with a different period; kagome kinds keep the general formulas so d may cross 2c.
LatticeSpec with_period(const LatticeSpec& base, double d) {
    LatticeSpec s = base;
    s.d = d;
    if (base.kind == LatticeKind::triangular) s.c = d;
    else s.kind = LatticeKind::kagome;
    return s;
}

struct EdgeSurface {
    const LatticeSpec& base;
    Side side;
    int edge;

    double operator()(double k, double d) const {
        const LatticeSpec s = with_period(base, d);
        const KernelTriple t = side == Side::positive ? lambda_pos(k, s) : lambda_neg(k, s);
        return edge_functions(t)[edge];
    }

    double scale(double k, double d) const {
        const LatticeSpec s = with_period(base, d);
        const KernelTriple t = side == Side::positive ? lambda_pos(k, s) : lambda_neg(k, s);
        return std::abs(t.l1) + std::abs(t.l2) + std::abs(t.l3);
    }
};

// Newton iteration on grad h = 0 with central differences.
bool stationary_point(const EdgeSurface& h, double& k, double& d) {
    for (int it = 0; it < 60; ++it) {
        const double ek = 1e-5 * std::max(1.0, k), ed = 1e-5 * std::max(1.0, d);
        const double f0 = h(k, d);
        const double fkp = h(k + ek, d), fkm = h(k - ek, d);
        const double fdp = h(k, d + ed), fdm = h(k, d - ed);
        const double fpp = h(k + ek, d + ed), fpm = h(k + ek, d - ed);
        const double fmp = h(k - ek, d + ed), fmm = h(k - ek, d - ed);
        const double gk = (fkp - fkm) / (2 * ek), gd = (fdp - fdm) / (2 * ed);
        const double hkk = (fkp - 2 * f0 + fkm) / (ek * ek);
        const double hdd = (fdp - 2 * f0 + fdm) / (ed * ed);
        const double hkd = (fpp - fpm - fmp + fmm) / (4 * ek * ed);
        const double det = hkk * hdd - hkd * hkd;
        if (det == 0.0 || !std::isfinite(det)) return false;
        const double dk = (hdd * gk - hkd * gd) / det;
        const double dd = (hkk * gd - hkd * gk) / det;
        k -= dk;
        d -= dd;
        if (!(k > 0.0) || !(d > 0.0) || !std::isfinite(k) || !std::isfinite(d)) return false;
        if (std::abs(dk) < 1e-12 * std::max(1.0, k) && std::abs(dd) < 1e-12 * std::max(1.0, d)) return true;
    }
    return false;
}

double gap_near(const LatticeSpec& spec, Side side, double k, double w) {
    const auto segs = detail::scan_window(spec, side, std::max(k - w, 1e-9), k + w, 400);
    double gap = 2.0 * w;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        if (segs[i].lo <= k && k <= segs[i].hi) gap = std::min(gap, 0.0);
        if (i + 1 < segs.size()) {
            const double g = segs[i + 1].lo - segs[i].hi;
            if (segs[i].hi <= k + 1e-6 && segs[i + 1].lo >= k - 1e-6) gap = std::min(gap, std::max(g, 0.0));
        }
    }
    return gap;
}

} // namespace

std::vector<GapClosing> detect_gap_closings(const LatticeSpec& spec, std::pair<double, double> k_window,
                                            std::pair<double, double> d_window, Side side) {
    spec.validate();
    const auto [k_lo, k_hi] = k_window;
    const auto [d_lo, d_hi] = d_window;
    if (!(k_lo > 0.0) || !(k_hi > k_lo) || !(d_lo > 0.0) || !(d_hi > d_lo))
        throw InvalidArgument("gap-closing windows must be nonempty and positive");
    if (spec.is_kagome_family() && !(d_lo > spec.c))
        throw InvalidArgument("kagome period window must stay above c");

    std::vector<GapClosing> found;
    constexpr int seeds = 14;
    for (int edge = 0; edge < 3; ++edge) {
        const EdgeSurface h{spec, side, edge};
        for (int i = 0; i < seeds; ++i) {
            for (int j = 0; j < seeds; ++j) {
                double k = k_lo + (k_hi - k_lo) * (i + 0.5) / seeds;
                double d = d_lo + (d_hi - d_lo) * (j + 0.5) / seeds;
                if (!stationary_point(h, k, d)) continue;
                if (k < k_lo || k > k_hi || d < d_lo || d > d_hi) continue;
                if (std::abs(h(k, d)) > 1e-7 * h.scale(k, d)) continue;
                const bool duplicate = std::any_of(found.begin(), found.end(), [&](const GapClosing& g) {
                    return std::abs(g.k - k) < 1e-6 * std::max(1.0, k) && std::abs(g.d - d) < 1e-6 * std::max(1.0, d);
                });
                if (duplicate) continue;
                const LatticeSpec at = with_period(spec, d);
                // A closing: bands touch at d, and a gap opens once d moves away.
                const double w = 0.05 / std::max(1.0, at.d);
                const double gap = gap_near(at, side, k, w);
                if (gap >= 1e-6) continue;
                const double shifted = std::max(gap_near(with_period(spec, d * (1 + 1e-3)), side, k, w),
                                                gap_near(with_period(spec, d * (1 - 1e-3)), side, k, w));
                if (shifted <= 0.0) continue;
                found.push_back({k, d, edge_extremum(edge), gap});
            }
        }
    }
    std::sort(found.begin(), found.end(),
              [](const GapClosing& a, const GapClosing& b) { return a.d < b.d || (a.d == b.d && a.k < b.k); });
    return found;
}

} // namespace qgspec
