#include "qgspec/band_engine.hpp"

#include "qgspec/errors.hpp"
#include "qgspec/parallel.hpp"
#include "qgspec/spectral_kernels.hpp"
#include "scan_detail.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qgspec {

std::string_view to_string(BandType t) {
    switch (t) {
    case BandType::continuous: return "continuous";
    case BandType::flat: return "flat";
    case BandType::degenerate_point: return "degenerate_point";
    }
    return "continuous";
}

std::string_view to_string(FlatBandFamily f) {
    switch (f) {
    case FlatBandFamily::c_family: return "c_family";
    case FlatBandFamily::b_family: return "b_family";
    case FlatBandFamily::d_family: return "d_family";
    case FlatBandFamily::equilateral_merged: return "equilateral_merged";
    case FlatBandFamily::david_star: return "david_star";
    case FlatBandFamily::degenerate_point: return "degenerate_point";
    }
    return "c_family";
}

SpectralInterval make_interval(double k_lo, double k_hi, Side side, BandType type, ThetaExtremum lo,
                               ThetaExtremum hi) {
    SpectralInterval s{k_lo, k_hi, side, type, 0.0, 0.0, lo, hi};
    if (side == Side::positive) {
        s.energy_lo = k_lo * k_lo;
        s.energy_hi = k_hi * k_hi;
    } else {
        s.energy_lo = -k_hi * k_hi;
        s.energy_hi = -k_lo * k_lo;
    }
    return s;
}

std::vector<SpectralInterval> BandStructure::continuous() const {
    std::vector<SpectralInterval> out;
    for (const auto& i : intervals)
        if (i.band_type == BandType::continuous) out.push_back(i);
    return out;
}

bool has_degenerate_point(const LatticeSpec& spec) {
    if (!spec.is_kagome_family()) return false;
    for (double len : {spec.c, spec.b(), spec.d}) {
        const double t = std::fmod(len / spec.ell, 2.0 * pi);
        const double tol = 1e-9 * std::max(1.0, len / spec.ell);
        if (std::abs(t - 2.0 * pi / 3.0) <= tol || std::abs(t - 4.0 * pi / 3.0) <= tol) return true;
    }
    return false;
}

bool in_band(double x, Side side, const LatticeSpec& spec) {
    const auto h = edge_values(x, side, spec);
    const bool any_nonneg = h[0] >= 0.0 || h[1] >= 0.0 || h[2] >= 0.0;
    const bool any_nonpos = h[0] <= 0.0 || h[1] <= 0.0 || h[2] <= 0.0;
    return any_nonneg && any_nonpos;
}

std::vector<FlatBand> flat_bands(const LatticeSpec& spec, double k_max) {
    spec.validate();
    struct Raw {
        double k;
        FlatBandFamily family;
    };
    std::vector<Raw> raw;
    auto family = [&](double period, FlatBandFamily f) {
        for (int n = 1; n * period <= k_max; ++n) raw.push_back({n * period, f});
    };
    switch (spec.kind) {
    case LatticeKind::kagome:
        family(2.0 * pi / spec.c, FlatBandFamily::c_family);
        family(2.0 * pi / spec.b(), FlatBandFamily::b_family);
        family(2.0 * pi / spec.d, FlatBandFamily::d_family);
        break;
    case LatticeKind::equilateral_kagome:
        family(pi / spec.c, FlatBandFamily::equilateral_merged);
        // ((6n - 3) + (-1)^{n+1}) pi / (6c): 2 pi m / (3c) with m not divisible by 3
        for (int n = 1;; ++n) {
            const double k = ((6 * n - 3) + (n % 2 == 1 ? 1 : -1)) * pi / (6.0 * spec.c);
            if (k > k_max) break;
            raw.push_back({k, FlatBandFamily::david_star});
        }
        break;
    case LatticeKind::triangular:
        family(2.0 * pi / spec.d, FlatBandFamily::d_family);
        break;
    }
    if (has_degenerate_point(spec) && 1.0 / spec.ell <= k_max)
        raw.push_back({1.0 / spec.ell, FlatBandFamily::degenerate_point});

    std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
        return a.k < b.k || (a.k == b.k && a.family < b.family);
    });

    std::vector<FlatBand> out;
    std::vector<std::vector<FlatBandFamily>> members;
    for (const auto& r : raw) {
        if (!out.empty() && std::abs(r.k - out.back().k) <= 1e-9 * r.k) {
            members.back().push_back(r.family);
            continue;
        }
        out.push_back({r.k, r.family, "", false});
        members.push_back({r.family});
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        auto& fam = members[i];
        std::sort(fam.begin(), fam.end());
        fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
        // A degenerate point outranks the flat families it coincides with.
        std::stable_partition(fam.begin(), fam.end(), [](FlatBandFamily f) { return f == FlatBandFamily::degenerate_point; });
        out[i].family = fam.front();
        if (fam.size() > 1) {
            std::ostringstream os;
            os << "coincides with";
            for (std::size_t j = 1; j < fam.size(); ++j) os << (j > 1 ? "," : "") << ' ' << to_string(fam[j]);
            out[i].multiplicity_note = os.str();
        }
        const bool degenerate = std::find(fam.begin(), fam.end(), FlatBandFamily::degenerate_point) != fam.end();
        const bool never_embedded = spec.kind == LatticeKind::triangular ||
                                    std::find(fam.begin(), fam.end(), FlatBandFamily::equilateral_merged) != fam.end() || degenerate;
        out[i].embedded = never_embedded ? false : in_band(out[i].k, Side::positive, spec);
    }
    return out;
}

double default_resolution(const LatticeSpec& spec) { return 2.0 * pi / (1000.0 * spec.d); }

namespace {

constexpr double energy_step_factor = 0.1; // positive-side energy step is this / (d ell)
constexpr double edge_rel_tol = 1e-10;  // reported edge tolerance
constexpr double bisect_rel_tol = 1e-12;
constexpr double small_momentum_floor = 1e-4; // times 1/max(d, ell)

struct Grid {
    double step;
    double x_c;     // end of the uniform part
    long i_c;
    double alpha;   // x^2 grows by alpha per index beyond i_c
    long count;     // regular points 1..count

    Grid(double r, double x_max, double adaptive_scale) : step(r) {
        if (adaptive_scale <= 0.0) {
            x_c = x_max;
            i_c = static_cast<long>(std::ceil(x_max / r));
            alpha = 0.0;
            count = i_c;
            return;
        }
        x_c = std::min(x_max, adaptive_scale / r);
        i_c = static_cast<long>(std::floor(x_c / r));
        x_c = i_c * r;
        alpha = 2.0 * adaptive_scale;
        count = i_c + static_cast<long>(std::ceil((x_max * x_max - x_c * x_c) / alpha));
    }

    double at(long i, double x_max) const {
        const double x = i <= i_c ? i * step : std::sqrt(x_c * x_c + alpha * static_cast<double>(i - i_c));
        return std::min(x, x_max);
    }
};

using detail::Segment;

struct Root {
    double x;
    int edge;
};

class Scanner {
public:
    Scanner(const LatticeSpec& spec, Side side) : spec_(spec), side_(side) {}

    std::array<double, 3> edges(double x) const { return edge_values(x, side_, spec_); }

    bool member(double x) const { return in_band(x, side_, spec_); }

    double bisect(double a, double b, double ha, int j) const {
        for (int it = 0; it < 200 && b - a > bisect_rel_tol * b; ++it) {
            const double m = 0.5 * (a + b);
            const double hm = edges(m)[j];
            if (hm == 0.0) return m;
            if ((hm < 0.0) == (ha < 0.0)) {
                a = m;
                ha = hm;
            } else {
                b = m;
            }
        }
        return 0.5 * (a + b);
    }

    void cell(double xa, const std::array<double, 3>& ha, double xb, const std::array<double, 3>& hb,
              std::vector<Segment>& out) const {
        Root roots[3];
        int nr = 0;
        bool exact_zero = false;
        int sign[3];
        for (int j = 0; j < 3; ++j) {
            exact_zero = exact_zero || ha[j] == 0.0 || hb[j] == 0.0;
            sign[j] = ha[j] < 0.0 ? -1 : 1;
            if ((ha[j] < 0.0 && hb[j] > 0.0) || (ha[j] > 0.0 && hb[j] < 0.0))
                roots[nr++] = {bisect(xa, xb, ha[j], j), j};
        }
        for (int a = 1; a < nr; ++a)
            for (int b = a; b > 0 && roots[b].x < roots[b - 1].x; --b) std::swap(roots[b], roots[b - 1]);

        double lo = xa;
        ThetaExtremum theta_lo = ThetaExtremum::none;
        for (int r = 0; r <= nr; ++r) {
            const double hi = r < nr ? roots[r].x : xb;
            const ThetaExtremum theta_hi = r < nr ? edge_extremum(roots[r].edge) : ThetaExtremum::none;
            if (hi > lo) {
                // Between roots every edge function keeps its sign; a zero at an end needs a direct look.
                const bool inside = exact_zero ? member(0.5 * (lo + hi))
                                               : !(sign[0] == sign[1] && sign[1] == sign[2]);
                if (inside) push(out, {lo, hi, theta_lo, theta_hi});
            }
            if (r < nr) sign[roots[r].edge] = -sign[roots[r].edge];
            lo = std::max(lo, hi);
            theta_lo = theta_hi;
        }
    }

    static void push(std::vector<Segment>& out, const Segment& s) {
        if (!out.empty() && s.lo <= out.back().hi) {
            if (s.hi > out.back().hi) {
                out.back().hi = s.hi;
                out.back().theta_hi = s.theta_hi;
            }
            return;
        }
        out.push_back(s);
    }

private:
    const LatticeSpec& spec_;
    Side side_;
};

std::vector<Segment> scan_segments(const LatticeSpec& spec, Side side, double x_max, double r) {
    const double adaptive = side == Side::positive ? energy_step_factor / (spec.d * spec.ell) : 0.0;
    const Grid grid(r, x_max, adaptive);
    const Scanner scanner(spec, side);

    // Below x_floor the edge functions at the critical period 2 sqrt3 ell cancel
    // beyond long-double resolution; membership there follows the small-momentum rule.
    const double x1 = grid.at(1, x_max);
    const double x_floor = std::min(x1, small_momentum_floor / std::max(spec.d, spec.ell));
    std::vector<double> head;
    head.push_back(x_floor);
    for (int m = 12; m >= 1; --m)
        if (std::ldexp(x1, -m) > x_floor) head.push_back(std::ldexp(x1, -m));

    const long total = static_cast<long>(head.size()) + grid.count; // indices 0..total-1
    auto point = [&](long i) {
        return i < static_cast<long>(head.size()) ? head[i] : grid.at(i - static_cast<long>(head.size()) + 1, x_max);
    };

    const long chunk_len = 4096;
    const long cells = total - 1;
    const std::size_t chunks = static_cast<std::size_t>((cells + chunk_len - 1) / chunk_len);
    std::vector<std::vector<Segment>> partial(chunks);
    parallel_chunks(chunks, [&](std::size_t ci) {
        const long first = static_cast<long>(ci) * chunk_len;
        const long last = std::min(cells, first + chunk_len);
        auto& out = partial[ci];
        double xa = point(first);
        auto ha = scanner.edges(xa);
        for (long i = first; i < last; ++i) {
            const double xb = point(i + 1);
            const auto hb = scanner.edges(xb);
            if (xb > xa) scanner.cell(xa, ha, xb, hb, out);
            xa = xb;
            ha = hb;
        }
    });

    const Threshold th = spectral_threshold(spec);
    const bool from_zero = side == Side::positive ? th.positive_starts_at_zero : th.negative_reaches_zero;
    std::vector<Segment> merged;
    if (from_zero) merged.push_back({0.0, x_floor, ThetaExtremum::none, ThetaExtremum::none});
    for (const auto& part : partial)
        for (const auto& s : part) Scanner::push(merged, s);
    return merged;
}

} // namespace

std::vector<Segment> detail::scan_window(const LatticeSpec& spec, Side side, double lo, double hi, long cells) {
    const Scanner scanner(spec, side);
    std::vector<Segment> out;
    const double step = (hi - lo) / static_cast<double>(cells);
    double xa = lo;
    auto ha = scanner.edges(xa);
    for (long i = 1; i <= cells; ++i) {
        const double xb = i == cells ? hi : lo + step * static_cast<double>(i);
        const auto hb = scanner.edges(xb);
        scanner.cell(xa, ha, xb, hb, out);
        xa = xb;
        ha = hb;
    }
    return out;
}

namespace {

void sort_intervals(std::vector<SpectralInterval>& v) {
    std::stable_sort(v.begin(), v.end(), [](const SpectralInterval& a, const SpectralInterval& b) {
        return a.k_lo < b.k_lo || (a.k_lo == b.k_lo && a.k_hi < b.k_hi);
    });
}

} // namespace

BandStructure scan_bands(const LatticeSpec& spec, Side side, double k_max, double resolution) {
    spec.validate();
    if (!(k_max > 0.0)) throw InvalidArgument("scan range must be positive");
    if (resolution <= 0.0) resolution = default_resolution(spec);
    if (!std::isfinite(resolution)) throw InvalidArgument("resolution must be finite");

    BandStructure bs;
    bs.spec = spec;
    bs.side = side;
    bs.scan_k_max = k_max;
    bs.resolution = resolution;
    bs.edge_tolerance = edge_rel_tol;
    if (resolution > pi / (20.0 * spec.d)) {
        std::ostringstream os;
        os << "resolution " << resolution << " is coarser than pi/(20 d) = " << pi / (20.0 * spec.d)
           << "; narrow bands may be missed";
        bs.warnings.push_back(os.str());
    }

    const bool degenerate = side == Side::positive && has_degenerate_point(spec) && 1.0 / spec.ell <= k_max;
    const double k_deg = 1.0 / spec.ell;
    for (const auto& s : scan_segments(spec, side, k_max, resolution)) {
        if (degenerate && s.hi - s.lo < 1e-6 && s.lo <= k_deg * (1 + 1e-9) && s.hi >= k_deg * (1 - 1e-9)) continue;
        bs.intervals.push_back(make_interval(s.lo, s.hi, side, BandType::continuous, s.theta_lo, s.theta_hi));
    }

    if (side == Side::positive) {
        for (const auto& fb : flat_bands(spec, k_max)) {
            const BandType t =
                fb.family == FlatBandFamily::degenerate_point ? BandType::degenerate_point : BandType::flat;
            bs.intervals.push_back(make_interval(fb.k, fb.k, side, t));
        }
    } else if (spec.kind == LatticeKind::equilateral_kagome && 1.0 / spec.ell <= k_max) {
        bs.intervals.push_back(make_interval(1.0 / spec.ell, 1.0 / spec.ell, side, BandType::flat));
    }
    sort_intervals(bs.intervals);
    return bs;
}

BandStructure scan_negative_bands(const LatticeSpec& spec, double kappa_max, double resolution) {
    if (kappa_max <= 0.0) kappa_max = 10.0 / spec.ell;
    BandStructure bs = scan_bands(spec, Side::negative, kappa_max, resolution);
    const std::size_t count = bs.continuous().size();
    const std::size_t bound = spec.kind == LatticeKind::triangular ? 2 : 3;
    if (count > bound) {
        std::ostringstream os;
        os << spec.describe() << ": " << count << " negative bands exceed the bound " << bound;
        throw ConsistencyError(os.str());
    }
    return bs;
}

Threshold spectral_threshold(const LatticeSpec& spec) {
    spec.validate();
    const double critical = 2.0 * sqrt3 * spec.ell;
    return {spec.d >= critical, spec.d <= critical};
}

} // namespace qgspec
