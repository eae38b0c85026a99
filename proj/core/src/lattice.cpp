#include "qgspec/lattice.hpp"

#include "qgspec/errors.hpp"

#include <cmath>
#include <sstream>

namespace qgspec {

std::string_view to_string(LatticeKind kind) {
    switch (kind) {
    case LatticeKind::kagome: return "kagome";
    case LatticeKind::equilateral_kagome: return "equilateral";
    case LatticeKind::triangular: return "triangular";
    }
    return "unknown";
}

std::string_view to_string(Side side) {
    return side == Side::positive ? "positive" : "negative";
}

LatticeKind parse_lattice_kind(std::string_view name) {
    if (name == "kagome") return LatticeKind::kagome;
    if (name == "equilateral" || name == "equilateral_kagome") return LatticeKind::equilateral_kagome;
    if (name == "triangular") return LatticeKind::triangular;
    throw InvalidArgument("unknown lattice kind '" + std::string(name) + "'");
}

Side parse_side(std::string_view name) {
    if (name == "positive") return Side::positive;
    if (name == "negative") return Side::negative;
    throw InvalidArgument("unknown spectral side '" + std::string(name) + "'");
}

LatticeSpec LatticeSpec::kagome(double c, double d, double ell) {
    LatticeSpec s{LatticeKind::kagome, c, d, ell};
    if (d == 2.0 * c) s.kind = LatticeKind::equilateral_kagome;
    s.validate();
    return s;
}

LatticeSpec LatticeSpec::equilateral(double c, double ell) {
    LatticeSpec s{LatticeKind::equilateral_kagome, c, 2.0 * c, ell};
    s.validate();
    return s;
}

LatticeSpec LatticeSpec::triangular(double d, double ell) {
    LatticeSpec s{LatticeKind::triangular, d, d, ell};
    s.validate();
    return s;
}

void LatticeSpec::validate() const {
    auto finite_positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!finite_positive(ell)) throw InvalidArgument("coupling length ell must be positive");
    if (!finite_positive(d)) throw InvalidArgument("cell period d must be positive");
    switch (kind) {
    case LatticeKind::kagome:
        if (!finite_positive(c) || !(c < d))
            throw InvalidArgument("kagome lattice needs 0 < c < d (degenerate edges: use the triangular lattice)");
        if (d == 2.0 * c) throw InvalidArgument("d = 2c is the equilateral kagome kind");
        break;
    case LatticeKind::equilateral_kagome:
        if (!finite_positive(c) || d != 2.0 * c)
            throw InvalidArgument("equilateral kagome lattice needs d = 2c > 0");
        break;
    case LatticeKind::triangular:
        if (c != d) throw InvalidArgument("triangular lattice stores c = d");
        break;
    }
}

LatticeSpec LatticeSpec::mirrored() const {
    if (kind != LatticeKind::kagome) return *this;
    return LatticeSpec::kagome(d - c, d, ell);
}

std::string LatticeSpec::describe() const {
    std::ostringstream os;
    os.precision(12);
    os << to_string(kind);
    if (kind != LatticeKind::triangular) os << " c=" << c;
    os << " d=" << d << " ell=" << ell;
    return os.str();
}

double f_theta(Quasimomentum q) {
    return std::cos(q.theta1) + std::cos(q.theta1 - q.theta2) + std::cos(q.theta2);
}

double g_theta(Quasimomentum q) {
    return std::sin(q.theta2) + std::sin(q.theta1 - q.theta2) - std::sin(q.theta1);
}

std::string_view to_string(ThetaExtremum t) {
    switch (t) {
    case ThetaExtremum::gamma: return "gamma";
    case ThetaExtremum::k_plus: return "k_plus";
    case ThetaExtremum::k_minus: return "k_minus";
    case ThetaExtremum::none: return "none";
    }
    return "none";
}

Quasimomentum theta_of(ThetaExtremum t) {
    switch (t) {
    case ThetaExtremum::k_plus: return {2.0 * pi / 3.0, -2.0 * pi / 3.0};
    case ThetaExtremum::k_minus: return {-2.0 * pi / 3.0, 2.0 * pi / 3.0};
    default: return {0.0, 0.0};
    }
}

} // namespace qgspec
