#include "randset/path_samplers.hpp"

#include <cmath>
#include <stdexcept>

#include "randset/rng.hpp"

namespace randset {

PathSample sample_brownian_path(double t, double dt, std::uint64_t seed) {
    if (!(t > 0.0)) throw std::invalid_argument("sample_brownian_path: t must be positive");
    if (!(dt > 0.0)) throw std::invalid_argument("sample_brownian_path: dt must be positive");
    if (dt > t) throw std::invalid_argument("sample_brownian_path: dt must not exceed t");
    const auto steps = static_cast<std::size_t>(std::llround(t / dt));
    PathSample path;
    path.dt = dt;
    path.values.resize(steps + 1);
    path.values[0] = 0.0;
    Rng rng(seed);
    const double sigma = std::sqrt(dt);
    for (std::size_t k = 1; k <= steps; ++k)
        path.values[k] = path.values[k - 1] + sigma * rng.normal();
    return path;
}

SetSample extract_level_set(const PathSample& path, double a, double band) {
    if (!(band >= 0.0)) throw std::invalid_argument("extract_level_set: band must be >= 0");
    if (path.values.size() < 2 || !(path.dt > 0.0))
        throw std::invalid_argument("extract_level_set: degenerate path");
    const double near = band * std::sqrt(path.dt);
    SetSample out;
    out.horizon = path.horizon();
    out.resolution = path.dt;
    const std::size_t steps = path.steps();
    double prev = path.values[0] - a;
    for (std::size_t k = 0; k < steps; ++k) {
        const double next = path.values[k + 1] - a;
        const bool hit = (prev <= 0.0 && next >= 0.0) || (prev >= 0.0 && next <= 0.0) ||
                         std::fabs(prev) <= near || std::fabs(next) <= near;
        if (hit) {
            out.points.push_back((static_cast<double>(k) + 0.5) * path.dt);
            out.flags.push_back(PointFlag::fill);
        }
        prev = next;
    }
    return out;
}

}  // namespace randset
