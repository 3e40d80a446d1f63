#include "randset/set_sample.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace randset {

char flag_char(PointFlag f) {
    switch (f) {
        case PointFlag::isolated: return 'i';
        case PointFlag::accumulation: return 'a';
        case PointFlag::fill: return 'f';
    }
    throw std::logic_error("flag_char: bad flag");
}

PointFlag flag_from_char(char c) {
    switch (c) {
        case 'i': return PointFlag::isolated;
        case 'a': return PointFlag::accumulation;
        case 'f': return PointFlag::fill;
    }
    throw std::invalid_argument("flag_from_char: expected one of i/a/f");
}

std::uint16_t SetSample::depth(std::size_t i) const {
    if (!depths.empty()) return depths[i];
    return flags[i] == PointFlag::accumulation ? 1 : 0;
}

void SetSample::validate() const {
    if (!(horizon > 0.0)) throw std::invalid_argument("SetSample: nonpositive horizon");
    if (resolution <= 0.0) throw std::invalid_argument("SetSample: nonpositive resolution");
    if (flags.size() != points.size())
        throw std::invalid_argument("SetSample: flags/points size mismatch");
    if (!depths.empty() && depths.size() != points.size())
        throw std::invalid_argument("SetSample: depths/points size mismatch");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i] < 0.0 || points[i] > horizon)
            throw std::invalid_argument("SetSample: point outside [0, horizon]");
        if (i > 0 && !(points[i - 1] < points[i]))
            throw std::invalid_argument("SetSample: points not strictly increasing");
    }
}

SetSample make_set_sample(double horizon, double resolution,
                          std::vector<double> points, std::vector<PointFlag> flags) {
    SetSample s;
    s.horizon = horizon;
    s.resolution = resolution;
    s.points = std::move(points);
    s.flags = std::move(flags);
    s.validate();
    return s;
}

namespace {

// Largest distance from a point of `a` to the set `b`; both sorted, nonempty.
double directed_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    std::size_t j = 0;
    for (const double p : a) {
        while (j + 1 < b.size() && b[j + 1] <= p) ++j;
        double best = std::fabs(p - b[j]);
        if (j + 1 < b.size()) best = std::min(best, std::fabs(b[j + 1] - p));
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace

double hausdorff_distance(const SetSample& a, const SetSample& b) {
    if (a.horizon != b.horizon)
        throw std::invalid_argument("hausdorff_distance: horizon mismatch");
    if (a.empty() && b.empty()) return 0.0;
    if (a.empty() || b.empty()) return a.horizon;  // sentinel, see header
    return std::max(directed_distance(a.points, b.points),
                    directed_distance(b.points, a.points));
}

SetSample rescale(const SetSample& c, double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("rescale: lambda must be positive");
    SetSample out = c;
    out.horizon = c.horizon * lambda;
    out.resolution = c.resolution * lambda;
    for (double& p : out.points) p *= lambda;
    return out;
}

SetSample time_reverse(const SetSample& c) {
    SetSample out;
    out.horizon = c.horizon;
    out.resolution = c.resolution;
    const std::size_t n = c.points.size();
    out.points.resize(n);
    out.flags.resize(n);
    if (!c.depths.empty()) out.depths.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = n - 1 - i;
        out.points[i] = c.horizon - c.points[j];
        out.flags[i] = c.flags[j];
        if (!c.depths.empty()) out.depths[i] = c.depths[j];
    }
    return out;
}

SetSample derived_set(const SetSample& c) {
    if (c.flags.size() != c.points.size())
        throw std::invalid_argument("derived_set: sampler did not populate flags");
    SetSample out;
    out.horizon = c.horizon;
    out.resolution = c.resolution;
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        switch (c.flags[i]) {
            case PointFlag::isolated: break;
            case PointFlag::fill:
                out.points.push_back(c.points[i]);
                out.flags.push_back(PointFlag::fill);
                out.depths.push_back(0);
                break;
            case PointFlag::accumulation: {
                out.points.push_back(c.points[i]);
                const std::uint16_t d = c.depth(i);
                if (d >= 2) {
                    out.flags.push_back(PointFlag::accumulation);
                    out.depths.push_back(static_cast<std::uint16_t>(d - 1));
                } else {
                    out.flags.push_back(PointFlag::isolated);
                    out.depths.push_back(0);
                }
                break;
            }
        }
    }
    return out;
}

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string to_line(const SetSample& c) {
    std::string out = format_double(c.horizon);
    out += ' ';
    out += format_double(c.resolution);
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        out += ' ';
        out += format_double(c.points[i]);
        out += ':';
        out += flag_char(c.flags[i]);
    }
    return out;
}

SetSample from_line(const std::string& line) {
    std::istringstream in(line);
    SetSample s;
    if (!(in >> s.horizon >> s.resolution))
        throw std::invalid_argument("SetSample line: missing header fields");
    std::string tok;
    while (in >> tok) {
        const auto colon = tok.find(':');
        if (colon == std::string::npos || colon + 2 != tok.size())
            throw std::invalid_argument("SetSample line: bad point token '" + tok + "'");
        double t = 0.0;
        const auto res = std::from_chars(tok.data(), tok.data() + colon, t);
        if (res.ec != std::errc{})
            throw std::invalid_argument("SetSample line: bad time in '" + tok + "'");
        s.points.push_back(t);
        s.flags.push_back(flag_from_char(tok[colon + 1]));
    }
    s.validate();
    return s;
}

std::string to_json(const SetSample& c) {
    nlohmann::json j;
    j["horizon"] = c.horizon;
    j["resolution"] = c.resolution;
    nlohmann::json pts = nlohmann::json::array();
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        pts.push_back({{"time", c.points[i]}, {"flag", std::string(1, flag_char(c.flags[i]))}});
    }
    j["points"] = std::move(pts);
    return j.dump();
}

}  // namespace randset
