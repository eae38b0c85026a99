#include "qgspec/band_engine.hpp"
#include "qgspec/errors.hpp"
#include "qgspec/secular_oracle.hpp"

#include "band_edges.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace qgspec;

TEST_CASE("scan agrees with the determinant oracle away from edges") {
    for (const auto& spec : {LatticeSpec::kagome(1, 3, 1), LatticeSpec::triangular(2, 1)}) {
        const auto bs = scan_bands(spec, Side::positive, 6.0);
        const auto edges = oracle::edges_of(bs);
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> ks(0.01, 6.0);
        for (int t = 0; t < 150; ++t) {
            const double k = ks(rng);
            if (oracle::distance_to_edge(k, edges) < 1e-6) continue;
            CHECK(in_band(k, Side::positive, spec) == oracle_in_spectrum(k, spec, 32));
        }
    }
}

TEST_CASE("band intervals are sorted, disjoint and carry energies") {
    const auto bs = scan_bands(LatticeSpec::kagome(1, 3, 1), Side::positive, 10.0);
    REQUIRE(bs.intervals.size() > 5);
    double last = -1.0;
    for (const auto& b : bs.continuous()) {
        CHECK(b.k_lo > last);
        CHECK(b.k_hi >= b.k_lo);
        CHECK(b.energy_lo == doctest::Approx(b.k_lo * b.k_lo));
        last = b.k_hi;
    }
    const auto neg = scan_negative_bands(LatticeSpec::kagome(1, 3, 1));
    for (const auto& b : neg.continuous()) {
        CHECK(b.energy_lo == doctest::Approx(-b.k_hi * b.k_hi));
        CHECK(b.energy_lo <= b.energy_hi);
    }
}

TEST_CASE("exchanging c and d - c leaves the spectrum unchanged") {
    for (Side side : {Side::positive, Side::negative}) {
        const auto a = scan_bands(LatticeSpec::kagome(1, 3, 1), side, 8.0).continuous();
        const auto b = scan_bands(LatticeSpec::kagome(2, 3, 1), side, 8.0).continuous();
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].k_lo == doctest::Approx(b[i].k_lo).epsilon(1e-9));
            CHECK(a[i].k_hi == doctest::Approx(b[i].k_hi).epsilon(1e-9));
        }
    }
}

TEST_CASE("spectral threshold at d = 2 sqrt3 ell") {
    CHECK_FALSE(spectral_threshold(LatticeSpec::kagome(1, 3, 1)).positive_starts_at_zero);
    CHECK(spectral_threshold(LatticeSpec::kagome(1, 3, 1)).negative_reaches_zero);
    CHECK(spectral_threshold(LatticeSpec::kagome(1, 4, 1)).positive_starts_at_zero);
    CHECK_FALSE(spectral_threshold(LatticeSpec::kagome(1, 4, 1)).negative_reaches_zero);
    const auto crit = spectral_threshold(LatticeSpec::triangular(2 * sqrt3, 1));
    CHECK(crit.positive_starts_at_zero);
    CHECK(crit.negative_reaches_zero);
}

TEST_CASE("critical period does not fragment the bands near zero") {
    const auto spec = LatticeSpec::kagome(1, 2 * sqrt3, 1);
    const auto pos = scan_bands(spec, Side::positive, 1.0).continuous();
    REQUIRE_FALSE(pos.empty());
    CHECK(pos.front().k_lo == 0.0);
    CHECK(pos.front().k_hi > 0.5);
    CHECK(scan_negative_bands(spec).continuous().size() == 3);
}

TEST_CASE("flat bands") {
    SUBCASE("kagome families at 2 pi m / length") {
        const auto fb = flat_bands(LatticeSpec::kagome(1, 3, 1), 7.0);
        bool c = false, d = false;
        for (const auto& b : fb) {
            if (std::abs(b.k - 2 * pi) < 1e-12) c = true;
            if (std::abs(b.k - 2 * pi / 3) < 1e-12) d = true;
        }
        CHECK(c);
        CHECK(d);
    }
    SUBCASE("degenerate point outranks coinciding families") {
        const auto fb = flat_bands(LatticeSpec::equilateral(4 * pi / 3, 1), 1.5);
        bool found = false;
        for (const auto& b : fb)
            if (b.k == 1.0) {
                found = true;
                CHECK(b.family == FlatBandFamily::degenerate_point);
                CHECK_FALSE(b.multiplicity_note.empty());
                CHECK_FALSE(b.embedded);
            }
        CHECK(found);
    }
    SUBCASE("triangular flat bands are never embedded") {
        for (const auto& b : flat_bands(LatticeSpec::triangular(2, 1), 20.0)) CHECK_FALSE(b.embedded);
    }
}

TEST_CASE("degenerate points") {
    CHECK(has_degenerate_point(LatticeSpec::kagome(1, 2 * pi / 3, 1)));
    CHECK_FALSE(has_degenerate_point(LatticeSpec::kagome(1, 3, 1)));
    const auto bs = scan_bands(LatticeSpec::kagome(1, 4 * pi / 3 + 1, 1), Side::positive, 1.5);
    int points = 0;
    for (const auto& b : bs.intervals)
        if (b.band_type == BandType::degenerate_point) {
            ++points;
            CHECK(b.k_lo == 1.0);
            CHECK(b.width_k() == 0.0);
        }
    CHECK(points == 1);
}

TEST_CASE("coarse resolution is reported") {
    const auto bs = scan_bands(LatticeSpec::kagome(1, 3, 1), Side::positive, 2.0, 0.2);
    CHECK_FALSE(bs.warnings.empty());
}

TEST_CASE("invalid requests") {
    CHECK_THROWS_AS(scan_bands(LatticeSpec::kagome(1, 3, 1), Side::positive, -1.0), InvalidArgument);
    CHECK_THROWS_AS(LatticeSpec::kagome(3, 1, 1), InvalidArgument);
    CHECK_THROWS_AS(LatticeSpec::triangular(1, 0), InvalidArgument);
}

TEST_CASE("gap closings are touching points") {
    const auto spec = LatticeSpec::kagome(1, 3, 1);
    const auto found = detect_gap_closings(spec, {0.5, 4.0}, {2.0, 4.0});
    for (const auto& g : found) {
        CHECK(g.gap < 1e-6);
        CHECK(g.d > 2.0);
        CHECK(g.d < 4.0);
    }
    CHECK_THROWS_AS(detect_gap_closings(spec, {0.5, 4.0}, {0.5, 4.0}), InvalidArgument);
}
