#include "qgspec/spectral_kernels.hpp"

#include <algorithm>
#include <cmath>

namespace qgspec {

namespace {

template <typename T>
std::array<T, 3> kagome_pos(T k, T c, T d, T ell) {
    using std::cos;
    using std::sin;
    const T q = k * k * ell * ell;
    const T one{1};
    const T l1 = T{2} * (q + one) *
                 (T{4} * (q + one) * (q + one) *
                      (cos(k * (c + d)) + cos(k * (c - T{2} * d)) + T{2} * cos(k * d) + cos(T{2} * k * d)) +
                  (q * q + T{14} * q + one) * (T{2} * cos(k * d) + one) * cos(k * (T{2} * c - d)) +
                  (T{3} * q * q + T{18} * q + T{3}) +
                  (T{5} * q * q + T{22} * q + T{5}) * (cos(k * (d - c)) + cos(k * c)));
    const T l2 = T{8} * (q + one) * (q - one) * (q - one) * cos(k * (d - c) / T{2}) * cos(k * c / T{2}) *
                 (cos(k * (T{2} * c - d) / T{2}) + T{2} * cos(k * d / T{2}));
    const T l3 = T{16} * k * ell * (q - one) * (q - one) * sin(k * (d - c) / T{2}) * sin(k * c / T{2}) *
                 sin(k * (d - T{2} * c) / T{2});
    return {l1, l2, l3};
}

template <typename T>
std::array<T, 3> kagome_neg(T kappa, T c, T d, T ell) {
    using std::cosh;
    using std::sinh;
    const T p = kappa * kappa * ell * ell;
    const T one{1};
    const T l1 = T{2} * (one - p) *
                 (T{4} * (p - one) * (p - one) *
                      (cosh(kappa * (c + d)) + cosh(kappa * (c - T{2} * d)) + T{2} * cosh(kappa * d) +
                       cosh(T{2} * kappa * d)) +
                  (p * p - T{14} * p + one) * (T{2} * cosh(kappa * d) + one) * cosh(kappa * (T{2} * c - d)) +
                  (T{3} * p * p - T{18} * p + T{3}) +
                  (T{5} * p * p - T{22} * p + T{5}) * (cosh(kappa * (d - c)) + cosh(kappa * c)));
    const T l2 = T{8} * (one - p) * (p + one) * (p + one) *
                 (cosh(kappa * (T{2} * c - d) / T{2}) + T{2} * cosh(kappa * d / T{2})) *
                 cosh(kappa * (d - c) / T{2}) * cosh(kappa * c / T{2});
    const T l3 = T{16} * kappa * ell * (p + one) * (p + one) * sinh(kappa * (d - c) / T{2}) *
                 sinh(kappa * c / T{2}) * sinh(kappa * (d - T{2} * c) / T{2});
    return {l1, l2, l3};
}

template <typename T>
std::array<T, 3> triangular_pos(T k, T d, T ell) {
    using std::cos;
    const T q = k * k * ell * ell;
    const T ch = cos(k * d / T{2});
    const T l1 = T{3} * (q * q + T{6} * q + T{1}) +
                 (T{3} * q * q + T{10} * q + T{3}) * (T{2} * cos(k * d) + cos(T{2} * k * d));
    const T l2 = T{4} * (q - T{1}) * (q - T{1}) * ch * ch;
    return {l1, l2, T{0}};
}

template <typename T>
std::array<T, 3> triangular_neg(T kappa, T d, T ell) {
    using std::cosh;
    const T p = kappa * kappa * ell * ell;
    const T ch = cosh(kappa * d / T{2});
    const T l1 = T{3} * (p * p - T{6} * p + T{1}) +
                 (T{3} * p * p - T{10} * p + T{3}) * (T{2} * cosh(kappa * d) + cosh(T{2} * kappa * d));
    const T l2 = T{4} * (p + T{1}) * (p + T{1}) * ch * ch;
    return {l1, l2, T{0}};
}

// Scaled hyperbolic functions: cosh(x) e^-s and sinh(x) e^-s for |x| <= s.
template <typename T>
T cosh_s(T x, T s) {
    using std::abs;
    using std::cosh;
    using std::exp;
    x = abs(x);
    if (x < T{20}) return cosh(x) * exp(-s);
    return (exp(x - s) + exp(-x - s)) / T{2};
}

template <typename T>
T sinh_s(T x, T s) {
    using std::exp;
    using std::sinh;
    if (std::abs(x) < T{20}) return sinh(x) * exp(-s);
    return (exp(x - s) - exp(-x - s)) / T{2};
}

// Negative kagome kernels times exp(-2 kappa d).
template <typename T>
std::array<T, 3> kagome_neg_scaled(T kappa, T c, T d, T ell) {
    using std::exp;
    const T p = kappa * kappa * ell * ell;
    const T one{1};
    const T s = T{2} * kappa * d;
    const T kd = kappa * d;
    const T a = T{4} * (p - one) * (p - one) *
                (cosh_s(kappa * (c + d), s) + cosh_s(kappa * (c - T{2} * d), s) + T{2} * cosh_s(kd, s) +
                 cosh_s(T{2} * kd, s));
    const T b = (p * p - T{14} * p + one) * (T{2} * cosh_s(kd, kd) + exp(-kd)) * cosh_s(kappa * (T{2} * c - d), kd);
    const T cc = (T{3} * p * p - T{18} * p + T{3}) * exp(-s);
    const T dd = (T{5} * p * p - T{22} * p + T{5}) * (cosh_s(kappa * (d - c), s) + cosh_s(kappa * c, s));
    const T l1 = T{2} * (one - p) * (a + b + cc + dd);

    const T half_d = kd / T{2};
    const T half_b = kappa * (d - c) / T{2};
    const T half_c = kappa * c / T{2};
    const T l2 = T{8} * (one - p) * (p + one) * (p + one) *
                 (cosh_s(kappa * (T{2} * c - d) / T{2}, half_d) + T{2} * cosh_s(half_d, half_d)) *
                 cosh_s(half_b, half_b) * cosh_s(half_c, half_c) * exp(-kd);
    const T l3 = T{16} * kappa * ell * (p + one) * (p + one) * sinh_s(half_b, half_b) * sinh_s(half_c, half_c) *
                 sinh_s(kappa * (d - T{2} * c) / T{2}, half_d) * exp(-kd);
    return {l1, l2, l3};
}

template <typename T>
std::array<T, 3> triangular_neg_scaled(T kappa, T d, T ell) {
    const T p = kappa * kappa * ell * ell;
    const T kd = kappa * d;
    const T s = T{2} * kd;
    const T ch = cosh_s(kd / T{2}, kd);
    const T l1 = T{3} * (p * p - T{6} * p + T{1}) * std::exp(-s) +
                 (T{3} * p * p - T{10} * p + T{3}) * (T{2} * cosh_s(kd, s) + cosh_s(T{2} * kd, s));
    const T l2 = T{4} * (p + T{1}) * (p + T{1}) * ch * ch;
    return {l1, l2, T{0}};
}

template <typename T>
std::array<T, 3> equilateral_pos_reduced(T k, T c, T ell) {
    using std::cos;
    const T q = k * k * ell * ell;
    const T l1 = (q * q + T{14} * q + T{1}) * cos(k * c) +
                 (q + T{1}) * (q + T{1}) * (T{2} * cos(T{2} * k * c) + T{2} * cos(T{3} * k * c) + T{1});
    const T l2 = (cos(k * c) + T{1}) * (q - T{1}) * (q - T{1});
    return {l1, l2, T{0}};
}

// Equilateral negative bracket times exp(-3 kappa c).
template <typename T>
std::array<T, 3> equilateral_neg_reduced_scaled(T kappa, T c, T ell) {
    const T p = kappa * kappa * ell * ell;
    const T kc = kappa * c;
    const T s = T{3} * kc;
    const T l1 = (p - T{1}) * (p - T{1}) * (T{2} * cosh_s(T{2} * kc, s) + T{2} * cosh_s(T{3} * kc, s) + std::exp(-s)) +
                 (p * p - T{14} * p + T{1}) * cosh_s(kc, s);
    const T l2 = (p + T{1}) * (p + T{1}) * (cosh_s(kc, s) + std::exp(-s));
    return {l1, l2, T{0}};
}

KernelTriple to_triple(const std::array<double, 3>& a, Side side) { return {a[0], a[1], a[2], side}; }

template <typename T>
KernelTriple to_triple(const std::array<T, 3>& a, Side side) {
    return {static_cast<double>(a[0]), static_cast<double>(a[1]), static_cast<double>(a[2]), side};
}

template <typename T>
std::array<T, 3> membership_in(T x, Side side, const LatticeSpec& s) {
    const T c = s.c, d = s.d, ell = s.ell;
    switch (s.kind) {
    case LatticeKind::kagome:
        return side == Side::positive ? kagome_pos<T>(x, c, d, ell) : kagome_neg_scaled<T>(x, c, d, ell);
    case LatticeKind::equilateral_kagome:
        return side == Side::positive ? equilateral_pos_reduced<T>(x, c, ell)
                                      : equilateral_neg_reduced_scaled<T>(x, c, ell);
    case LatticeKind::triangular:
        return side == Side::positive ? triangular_pos<T>(x, d, ell) : triangular_neg_scaled<T>(x, d, ell);
    }
    return {};
}

template <typename T>
std::array<double, 3> edges_of(const std::array<T, 3>& t) {
    const T a = T{1.5} * t[1];
    const T b = T{1.5} * static_cast<T>(sqrt3) * t[2];
    return {static_cast<double>(t[0] - T{3} * t[1]), static_cast<double>(t[0] + a + b),
            static_cast<double>(t[0] + a - b)};
}

bool small_argument(double x, const LatticeSpec& spec) { return x * std::max(spec.d, spec.ell) < 0.1; }

} // namespace

KernelTriple lambda_pos(double k, const LatticeSpec& spec) {
    if (spec.kind == LatticeKind::triangular) return to_triple(triangular_pos(k, spec.d, spec.ell), Side::positive);
    return to_triple(kagome_pos(k, spec.c, spec.d, spec.ell), Side::positive);
}

KernelTriple lambda_neg(double kappa, const LatticeSpec& spec) {
    if (spec.kind == LatticeKind::triangular)
        return to_triple(triangular_neg(kappa, spec.d, spec.ell), Side::negative);
    return to_triple(kagome_neg(kappa, spec.c, spec.d, spec.ell), Side::negative);
}

std::array<std::complex<double>, 3> lambda_complex(std::complex<double> z, const LatticeSpec& spec) {
    using C = std::complex<double>;
    if (spec.kind == LatticeKind::triangular) return triangular_pos<C>(z, spec.d, spec.ell);
    return kagome_pos<C>(z, spec.c, spec.d, spec.ell);
}

double bracket(double x, Side side, Quasimomentum theta, const LatticeSpec& spec) {
    const KernelTriple t = side == Side::positive ? lambda_pos(x, spec) : lambda_neg(x, spec);
    return t.l1 - t.l2 * f_theta(theta) - t.l3 * g_theta(theta);
}

KernelTriple membership_kernels(double x, Side side, const LatticeSpec& spec) {
    if (small_argument(x, spec)) return to_triple(membership_in<long double>(x, side, spec), side);
    return to_triple(membership_in<double>(x, side, spec), side);
}

std::array<double, 3> edge_values(double x, Side side, const LatticeSpec& spec) {
    if (small_argument(x, spec)) return edges_of(membership_in<long double>(x, side, spec));
    return edges_of(membership_in<double>(x, side, spec));
}

std::array<double, 3> edge_functions(const KernelTriple& t) {
    const double a = 1.5 * t.l2;
    const double b = 1.5 * sqrt3 * t.l3;
    return {t.l1 - 3.0 * t.l2, t.l1 + a + b, t.l1 + a - b};
}

ThetaExtremum edge_extremum(int j) {
    switch (j) {
    case 0: return ThetaExtremum::gamma;
    case 1: return ThetaExtremum::k_plus;
    case 2: return ThetaExtremum::k_minus;
    default: return ThetaExtremum::none;
    }
}

bool kernels_in_band(const KernelTriple& t) {
    const auto h = edge_functions(t);
    const bool any_nonneg = h[0] >= 0.0 || h[1] >= 0.0 || h[2] >= 0.0;
    const bool any_nonpos = h[0] <= 0.0 || h[1] <= 0.0 || h[2] <= 0.0;
    return any_nonneg && any_nonpos;
}

std::optional<double> tri_G(double k, const LatticeSpec& spec) {
    const double q = k * k * spec.ell * spec.ell;
    const double ch = std::cos(k * spec.d / 2.0);
    if (std::abs(ch) < 1e-8 || std::abs(q - 1.0) < 1e-8) return std::nullopt;
    const double sec2 = 1.0 / (ch * ch);
    return (2.0 * q * sec2 + (3.0 * q * q + 10.0 * q + 3.0) * std::cos(k * spec.d)) / ((q - 1.0) * (q - 1.0));
}

double tri_G_tilde(double kappa, const LatticeSpec& spec) {
    const double p = kappa * kappa * spec.ell * spec.ell;
    const double ch = std::cosh(kappa * spec.d / 2.0);
    const double sech2 = 1.0 / (ch * ch);
    return ((3.0 * p * p - 10.0 * p + 3.0) * std::cosh(kappa * spec.d) - 2.0 * p * sech2) / ((p + 1.0) * (p + 1.0));
}

double kagome_equilateral_F(double kappa, const LatticeSpec& spec) {
    const double p = kappa * kappa * spec.ell * spec.ell;
    const double kc = kappa * spec.c;
    const double num = (p - 1.0) * (p - 1.0) * (2.0 * std::cosh(2.0 * kc) + 2.0 * std::cosh(3.0 * kc) + 1.0) +
                       (p * p - 14.0 * p + 1.0) * std::cosh(kc);
    return num / ((p + 1.0) * (p + 1.0) * (std::cosh(kc) + 1.0));
}

double xi(double k, double c) { return std::cos(k * c) - std::cos(2.0 * k * c); }

std::pair<double, double> asymptotic_coefficients(double k, Quasimomentum theta, const LatticeSpec& spec,
                                                  AsymptoticCoefficient which) {
    const double c = spec.c, d = spec.d, l2 = spec.ell * spec.ell, l4 = l2 * l2;
    const double f = f_theta(theta);
    switch (which) {
    case AsymptoticCoefficient::alpha: {
        const double alpha =
            4.0 * (std::cos(k * (2.0 * c - d) / 2.0) + 2.0 * std::cos(k * d / 2.0)) *
            ((2.0 * std::cos(k * (c - d)) + 4.0 * std::cos(k * d) - 1.0) * std::cos(k * d / 2.0) +
             std::cos(k * (2.0 * c + d) / 2.0) - 2.0 * f * std::cos(k * c / 2.0) * std::cos(k * (c - d) / 2.0));
        return {alpha, 0.0};
    }
    case AsymptoticCoefficient::beta: {
        const double ch = std::cos(k * c / 2.0);
        const double b1 = -2.0 * l4 * ch * ch * (4.0 * std::cos(k * c) - 4.0 * std::cos(2.0 * k * c) + f - 3.0);
        const double b2 = 2.0 * l2 *
                          ((std::cos(k * c) + 1.0) * f + 7.0 * std::cos(k * c) + 2.0 * std::cos(2.0 * k * c) +
                           2.0 * std::cos(3.0 * k * c) + 1.0);
        return {b1, b2};
    }
    case AsymptoticCoefficient::gamma: {
        const double ch = std::cos(k * d / 2.0);
        const double g1 = 4.0 * l4 * ch * ch * (3.0 * std::cos(k * d) - f);
        const double g2 =
            2.0 * l2 * (10.0 * std::cos(k * d) + 5.0 * std::cos(2.0 * k * d) + 9.0 + 2.0 * (std::cos(k * d) + 1.0) * f);
        return {g1, g2};
    }
    }
    return {0.0, 0.0};
}

} // namespace qgspec
