// Discretized diffusion paths and level-set extraction.
#pragma once

#include <cstdint>

#include "randset/set_sample.hpp"

namespace randset {

struct PathSample {
    double dt = 0.0;
    std::vector<double> values;  // values[k] at time k * dt; grid covers [0, t]

    std::size_t steps() const { return values.empty() ? 0 : values.size() - 1; }
    double horizon() const { return dt * static_cast<double>(steps()); }
};

// Standard Brownian motion on the grid 0, dt, ..., t via Gaussian increments.
PathSample sample_brownian_path(double t, double dt, std::uint64_t seed);

// The set {s : path(s) = a} at grid resolution. A step contributes its
// midpoint (flag fill) iff the path crosses the level across the step or an
// endpoint comes within band * sqrt(dt) of it. The default band 0.5 makes the
// detection error resolution-limited rather than systematic: a Brownian bridge
// with endpoints that close crosses with Theta(1) probability.
SetSample extract_level_set(const PathSample& path, double a, double band = 0.5);

}  // namespace randset
