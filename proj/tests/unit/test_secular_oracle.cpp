#include "qgspec/errors.hpp"
#include "qgspec/secular_oracle.hpp"
#include "qgspec/spectral_kernels.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace qgspec;

namespace {

void check_factorization(const LatticeSpec& spec, Side side, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> xs(0.05, 4.0), th(-pi, pi);
    for (int t = 0; t < 60; ++t) {
        const double x = xs(rng);
        const Quasimomentum q{th(rng), th(rng)};
        const std::complex<double> z = side == Side::positive ? std::complex<double>(x, 0) : std::complex<double>(0, x);
        const auto det = secular_det(z, q, spec);
        const auto pre = determinant_prefactor(z, q, spec);
        const double br = bracket(x, side, q, spec);
        const auto ratio = det / pre;
        const double scale = std::abs(lambda_complex(z, spec)[0]) + std::abs(lambda_complex(z, spec)[1]) +
                             std::abs(lambda_complex(z, spec)[2]) + 1e-300;
        CHECK(std::abs(ratio.real() - br) < 1e-8 * scale);
        CHECK(std::abs(ratio.imag()) < 1e-8 * scale);
    }
}

} // namespace

TEST_CASE("kagome determinant factors into prefactor times bracket") {
    check_factorization(LatticeSpec::kagome(1.0, 3.0, 1.0), Side::positive, 1);
    check_factorization(LatticeSpec::kagome(0.7, 2.3, 0.8), Side::positive, 2);
    check_factorization(LatticeSpec::kagome(1.0, 3.0, 1.0), Side::negative, 3);
    check_factorization(LatticeSpec::equilateral(1.0, 1.0), Side::positive, 4);
}

TEST_CASE("triangular determinant factors into prefactor times bracket") {
    check_factorization(LatticeSpec::triangular(2.0, 1.0), Side::positive, 5);
    check_factorization(LatticeSpec::triangular(1.3, 0.6), Side::negative, 6);
}

TEST_CASE("secular matrix shapes") {
    const Quasimomentum q{0.3, -1.1};
    CHECK(kagome_secular_matrix({1.2, 0}, q, LatticeSpec::kagome(1, 3, 1)).dimension == 12);
    CHECK(triangular_secular_matrix({1.2, 0}, q, LatticeSpec::triangular(2, 1)).dimension == 6);
}

TEST_CASE("normalized determinant falls back to raw mode on vanishing sines") {
    const auto spec = LatticeSpec::kagome(1.0, 3.0, 1.0);
    const auto nd = normalized_secular_det({2.0 * pi, 0.0}, {0.4, 0.9}, spec);
    CHECK(nd.raw);
    CHECK_FALSE(normalized_secular_det({1.3, 0.0}, {0.4, 0.9}, spec).raw);
}

TEST_CASE("oracle membership on obvious points") {
    const auto spec = LatticeSpec::kagome(1.0, 3.0, 1.0);
    CHECK(oracle_in_spectrum(2.2, spec, 64));
    CHECK_FALSE(oracle_in_spectrum(0.3, spec, 64));
    CHECK_THROWS_AS(oracle_in_spectrum(-1.0, spec, 64), InvalidArgument);
}
