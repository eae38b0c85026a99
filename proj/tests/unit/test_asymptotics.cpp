#include "qgspec/asymptotics.hpp"

#include <doctest.h>

#include <cmath>

using namespace qgspec;

TEST_CASE("narrow band formulas") {
    const auto eq = equilateral_narrow_band(3, LatticeSpec::equilateral(2.0, 0.5));
    CHECK(eq.center_k == doctest::Approx(5 * pi / 2.0));
    CHECK(eq.band_width_E == doctest::Approx(2 * sqrt3 / (5 * 2.0 * 0.5)));
    CHECK(eq.gap_width_E / eq.band_width_E == doctest::Approx(8.0));
    const auto tri = triangular_narrow_band(2, LatticeSpec::triangular(3.0, 1.0));
    CHECK(tri.band_width_E == doctest::Approx(4 / (sqrt3 * 3.0)));
    CHECK(tri.gap_width_E / tri.band_width_E == doctest::Approx(2.0));
}

TEST_CASE("large-d kagome limits are roots of f") {
    const auto spec = LatticeSpec::kagome(1.0, 30.0, 1.0);
    const auto lim = kagome_negative_large_d(spec);
    REQUIRE(lim.limit_energies.size() == 3);
    int roots = 0;
    for (double e : lim.limit_energies) {
        const double kappa = std::sqrt(-e);
        if (std::abs(e + 1.0) < 1e-12) continue;
        CHECK(std::abs(kagome_large_d_f(kappa, 1.0, 1.0)) < 1e-10);
        ++roots;
    }
    CHECK(roots == 2);
    for (double w : lim.widths) CHECK(w >= 0.0);
}

TEST_CASE("triangular large-d limits") {
    const auto lim = triangular_negative_large_d(LatticeSpec::triangular(10, 1));
    REQUIRE(lim.limit_energies.size() == 2);
    CHECK(lim.limit_energies[0] == doctest::Approx(-3.0));
    CHECK(lim.limit_energies[1] == doctest::Approx(-1.0 / 3.0));
    CHECK(lim.widths[0] == doctest::Approx(18 * std::exp(-10 * sqrt3)));
    CHECK(lim.widths[1] == doctest::Approx(2 * std::exp(-10 / sqrt3)));
}

TEST_CASE("equilateral negative widths") {
    const auto p = equilateral_negative_widths(LatticeSpec::equilateral(8, 1));
    CHECK(p.band_width_E == doctest::Approx(sqrt3 * std::exp(-8.0)));
    CHECK(p.gap_width_E == doctest::Approx(2 * sqrt3 * std::exp(-8.0)));
}

TEST_CASE("report compares against scans") {
    const auto rows = asymptotic_report(LatticeSpec::triangular(10, 1), 20);
    REQUIRE_FALSE(rows.empty());
    for (const auto& r : rows) CHECK(std::isfinite(r.measured));
}
