#pragma once

#include "qgspec/lattice.hpp"

#include <vector>

namespace qgspec::detail {

struct Segment {
    double lo, hi;
    ThetaExtremum theta_lo, theta_hi;
};

/// Band segments inside [lo, hi] from a uniform grid of `cells` cells with edge bisection.
std::vector<Segment> scan_window(const LatticeSpec& spec, Side side, double lo, double hi, long cells);

} // namespace qgspec::detail
