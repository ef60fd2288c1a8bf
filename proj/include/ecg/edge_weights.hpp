#pragma once

#include <vector>

namespace ecg {

// Per-edge consensus weights aligned to a Graph's edge indices. Every
// value lies in [w_star, 1]; edges outside the 2-core carry exactly w_star.
struct EdgeWeightMap {
    std::vector<double> values;
    double w_star = 0.0;
};

} // namespace ecg
