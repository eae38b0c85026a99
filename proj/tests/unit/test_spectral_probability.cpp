#include "qgspec/errors.hpp"
#include "qgspec/spectral_probability.hpp"

#include "torus_count.hpp"

#include <doctest.h>

using namespace qgspec;

TEST_CASE("closed form") {
    CHECK(closed_form_probability(LatticeSpec::equilateral(1, 1)).value == doctest::Approx(2.0 / 3.0));
    CHECK(closed_form_probability(LatticeSpec::triangular(3, 1)).value == doctest::Approx(2.0 / 3.0));
    CHECK_THROWS_AS(closed_form_probability(LatticeSpec::kagome(1, 3, 1)), Unsupported);
}

TEST_CASE("torus fraction matches a direct count") {
    const auto spec = LatticeSpec::kagome(1, 2.618, 1);
    for (int n : {128, 301, 800}) CHECK(torus_probability(spec, n).value == doctest::Approx(oracle::torus_fraction(n)).epsilon(1e-12));
    CHECK(torus_probability(spec, 400).method == ProbabilityMethod::torus_area);
    CHECK_THROWS_AS(torus_probability(spec, 0), InvalidArgument);
}

TEST_CASE("band measure on a synthetic structure") {
    BandStructure bs;
    bs.spec = LatticeSpec::kagome(1, 3, 1);
    bs.scan_k_max = 3.0;
    bs.intervals = {make_interval(0.0, 1.0, Side::positive, BandType::continuous),
                    make_interval(2.0, 2.5, Side::positive, BandType::continuous),
                    make_interval(1.5, 1.5, Side::positive, BandType::flat)};
    const auto e = band_measure(bs, 4.0);
    CHECK(e.value == doctest::Approx(0.25));
    const auto f = band_measure(bs, 9.0);
    CHECK(f.value == doctest::Approx((1.0 + 6.25 - 4.0) / 9.0));
    CHECK_THROWS_AS(band_measure(bs, 16.0), InsufficientScan);
}

TEST_CASE("finite scan estimates") {
    CHECK(finite_scan_probability(LatticeSpec::equilateral(1, 1), 1e4).value == doctest::Approx(2.0 / 3.0).epsilon(0.03));
    CHECK(finite_scan_probability(LatticeSpec::triangular(1, 1), 1e4).value == doctest::Approx(2.0 / 3.0).epsilon(0.03));
}

TEST_CASE("sweep keeps d and ell") {
    const auto pts = probability_sweep({0.3, 0.7}, LatticeSpec::kagome(1, 3, 1), 2e3);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].estimate.spec.c == doctest::Approx(0.9));
    CHECK(pts[1].estimate.spec.d == 3.0);
    CHECK(pts[0].estimate.value == doctest::Approx(pts[1].estimate.value).epsilon(1e-9));
}
