#include "qgspec/spectral_kernels.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace qgspec;

TEST_CASE("complex continuation reproduces the negative kernels") {
    for (const auto& spec : {LatticeSpec::kagome(1, 3, 1), LatticeSpec::kagome(0.4, 1.9, 1.7),
                             LatticeSpec::triangular(2, 1)}) {
        for (double kappa : {0.1, 0.6, 1.0, 2.5}) {
            const auto z = lambda_complex({0.0, kappa}, spec);
            const auto t = lambda_neg(kappa, spec);
            const double scale = std::abs(t.l1) + std::abs(t.l2) + std::abs(t.l3);
            CHECK(std::abs(z[0] - t.l1) < 1e-10 * scale);
            CHECK(std::abs(z[1] - t.l2) < 1e-10 * scale);
            CHECK(std::abs(z[2] - t.l3) < 1e-10 * scale);
        }
    }
}

TEST_CASE("membership kernels differ from the display kernels by a positive common factor") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> xs(0.05, 3.0);
    for (const auto& spec : {LatticeSpec::kagome(1, 3, 1), LatticeSpec::triangular(2, 1)}) {
        for (Side side : {Side::positive, Side::negative}) {
            for (int t = 0; t < 50; ++t) {
                const double x = xs(rng);
                const auto a = side == Side::positive ? lambda_pos(x, spec) : lambda_neg(x, spec);
                const auto b = membership_kernels(x, side, spec);
                const double r = b.l1 / a.l1;
                CHECK(r > 0.0);
                CHECK(b.l2 == doctest::Approx(r * a.l2).epsilon(1e-8).scale(std::abs(r * a.l1)));
                CHECK(b.l3 == doctest::Approx(r * a.l3).epsilon(1e-8).scale(std::abs(r * a.l1)));
            }
        }
    }
}

TEST_CASE("edge functions pick the extremal quasimomenta") {
    const KernelTriple t{1.0, 0.5, -0.25, Side::positive};
    const auto h = edge_functions(t);
    for (int j = 0; j < 3; ++j) {
        const auto q = theta_of(edge_extremum(j));
        CHECK(h[j] == doctest::Approx(t.l1 - t.l2 * f_theta(q) - t.l3 * g_theta(q)));
    }
}

TEST_CASE("triangular G solves the band condition") {
    const auto spec = LatticeSpec::triangular(2.0, 1.0);
    int hits = 0;
    for (double k = 0.05; k < 6.0; k += 0.013) {
        const auto G = tri_G(k, spec);
        if (!G || *G < -1.0 || *G > 3.0) continue;
        const Quasimomentum q{std::acos((*G - 1.0) / 2.0), 0.0};
        const auto t = lambda_pos(k, spec);
        CHECK(std::abs(bracket(k, Side::positive, q, spec)) < 1e-9 * (std::abs(t.l1) + std::abs(t.l2)));
        ++hits;
    }
    CHECK(hits > 20);
    CHECK_FALSE(tri_G(1.0, spec).has_value());
}

TEST_CASE("negative G and F solve the band condition") {
    const auto tri = LatticeSpec::triangular(1.5, 1.0);
    const auto eq = LatticeSpec::equilateral(1.0, 1.0);
    for (double kappa = 0.05; kappa < 3.0; kappa += 0.011) {
        for (const auto* spec : {&tri, &eq}) {
            const double v = spec->kind == LatticeKind::triangular ? tri_G_tilde(kappa, *spec)
                                                                   : kagome_equilateral_F(kappa, *spec);
            if (v < -1.0 || v > 3.0) continue;
            const Quasimomentum q{std::acos((v - 1.0) / 2.0), 0.0};
            const auto t = lambda_neg(kappa, *spec);
            CHECK(std::abs(bracket(kappa, Side::negative, q, *spec)) <
                  1e-9 * (std::abs(t.l1) + std::abs(t.l2) + std::abs(t.l3)));
        }
    }
}

TEST_CASE("xi") {
    CHECK(xi(0.0, 1.0) == 0.0);
    CHECK(xi(pi, 1.0) == doctest::Approx(-2.0));
    CHECK(xi(pi / 3.0, 1.0) == doctest::Approx(1.0));
}

TEST_CASE("alpha is the leading coefficient of the kagome bracket") {
    const auto spec = LatticeSpec::kagome(1.0, 2.618, 1.0);
    const Quasimomentum q{0.7, -0.4};
    for (double k : {1e4 + 0.3, 3e4 + 1.1}) {
        const double a = asymptotic_coefficients(k, q, spec, AsymptoticCoefficient::alpha).first;
        const double kl = k * spec.ell;
        CHECK(bracket(k, Side::positive, q, spec) / std::pow(kl, 6) == doctest::Approx(a).epsilon(1e-3).scale(1.0));
    }
}

TEST_CASE("beta and gamma expansions leave an O(1) remainder") {
    const Quasimomentum q{0.7, -0.4};
    const auto eq = LatticeSpec::equilateral(1.0, 1.0);
    const auto tri = LatticeSpec::triangular(2.0, 1.0);
    for (double k : {1e3 + 0.37, 1e4 + 0.37}) {
        const auto [b1, b2] = asymptotic_coefficients(k, q, eq, AsymptoticCoefficient::beta);
        const auto r = membership_kernels(k, Side::positive, eq); // reduced equilateral bracket
        const double rem_eq = r.l1 - r.l2 * f_theta(q) - r.l3 * g_theta(q) - b1 * std::pow(k, 4) - b2 * k * k;
        CHECK(std::abs(rem_eq) < 1e-3 * k * k);
        const auto [g1, g2] = asymptotic_coefficients(k, q, tri, AsymptoticCoefficient::gamma);
        const double rem_tri = bracket(k, Side::positive, q, tri) - g1 * std::pow(k, 4) - g2 * k * k;
        CHECK(std::abs(rem_tri) < 1e-3 * k * k);
    }
}
