#pragma once

#include "qgspec/band_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace qgspec::oracle {

inline std::vector<double> edges_of(const BandStructure& bs) {
    std::vector<double> e;
    for (const auto& b : bs.intervals) {
        e.push_back(b.k_lo);
        e.push_back(b.k_hi);
    }
    std::sort(e.begin(), e.end());
    return e;
}

inline double distance_to_edge(double x, const std::vector<double>& edges) {
    double best = std::numeric_limits<double>::infinity();
    for (double e : edges) best = std::min(best, std::abs(x - e));
    return best;
}

} // namespace qgspec::oracle
