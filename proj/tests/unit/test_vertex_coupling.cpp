#include "qgspec/errors.hpp"
#include "qgspec/vertex_coupling.hpp"

#include "resolvent_smatrix.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace qgspec;

TEST_CASE("circulant shift has ones on the superdiagonal and the corner") {
    const auto u = build_circulant_u(5);
    CHECK(u.size == 5);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) CHECK(u.entries(i, j) == (j == (i + 1) % 5 ? 1.0 : 0.0));
    CHECK_THROWS_AS(build_circulant_u(1), InvalidArgument);
}

TEST_CASE("S(1/ell) is the coupling matrix itself") {
    for (int n : {3, 4, 6, 7}) {
        const auto s = scattering_matrix(n, 0.7, 1.0 / 0.7);
        const auto u = build_circulant_u(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                CHECK(s.entries(i, j).real() == u.entries(i, j));
                CHECK(s.entries(i, j).imag() == 0.0);
            }
    }
}

TEST_CASE("component formula agrees with the resolvent form") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> lk(-4.0, 4.0);
    for (int n : {3, 4, 5, 6}) {
        for (int t = 0; t < 40; ++t) {
            const double ell = std::pow(10.0, lk(rng) / 4.0);
            const double k = std::pow(10.0, lk(rng)) / ell;
            const auto s = scattering_matrix(n, ell, k);
            CHECK(max_abs_difference(s.entries, oracle::resolvent_scattering(n, ell, k)) < 1e-10);
        }
    }
}

TEST_CASE("eta tends to -1 at high energy") {
    CHECK(scattering_matrix(4, 1.0, 1e6).eta == doctest::Approx(-1.0).epsilon(1e-5));
    CHECK(scattering_matrix(4, 1.0, 1e-6).eta == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("odd degree limit is the identity") {
    const auto m = high_energy_limit(5);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) CHECK(m(i, j) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-6));
}

TEST_CASE("star bound states") {
    const auto four = star_negative_eigenvalues(4, 2.0);
    REQUIRE(four.size() == 1);
    CHECK(four[0] == doctest::Approx(-0.25));
    const auto six = star_negative_eigenvalues(6, 1.0);
    REQUIRE(six.size() == 2);
    CHECK(six[0] == doctest::Approx(-3.0));
    CHECK(six[1] == doctest::Approx(-1.0 / 3.0));
    CHECK(star_negative_eigenvalues(3, 1.0).size() == 1);
}
