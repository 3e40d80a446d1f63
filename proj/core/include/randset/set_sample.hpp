// Sampled closed subsets of [0, t]. An uncountable set is represented at a
// finite resolution by an ordered point list; per-point flags record what the
// sampler knows about the local structure, which is the only place the
// finite/infinite and isolated/accumulation distinctions survive
// discretization.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace randset {

enum class PointFlag : std::uint8_t {
    isolated,      // an isolated point of the set
    accumulation,  // a limit of other points of the set
    fill,          // stands for a dense sub-segment, resolved at `resolution`
};

char flag_char(PointFlag f);
PointFlag flag_from_char(char c);

struct SetSample {
    double horizon = 0.0;     // the set lives in [0, horizon]
    double resolution = 0.0;  // smallest spacing the sampler resolves
    std::vector<double> points;      // strictly increasing, within [0, horizon]
    std::vector<PointFlag> flags;    // one per point
    // Accumulation order per point: how many times the point survives
    // derivation. 0 for isolated, k >= 1 for accumulation flags. Filled by the
    // jump-set sampler; defaulted from flags otherwise.
    std::vector<std::uint16_t> depths;

    bool empty() const { return points.empty(); }
    std::size_t size() const { return points.size(); }

    // Depth of point i, deriving it from the flag when `depths` is not set.
    std::uint16_t depth(std::size_t i) const;

    // Throws std::invalid_argument if the invariants do not hold.
    void validate() const;
};

SetSample make_set_sample(double horizon, double resolution,
                          std::vector<double> points, std::vector<PointFlag> flags);

// --- geometry ---------------------------------------------------------------

// Hausdorff distance of two samples with a common horizon, exact on the point
// lists. Distance involving exactly one empty set is the horizon (a diameter
// bound keeping the function total); both empty gives 0.
double hausdorff_distance(const SetSample& a, const SetSample& b);

// The map C -> lambda * C, horizon and resolution scaled along.
SetSample rescale(const SetSample& c, double lambda);

// The time reversal C -> horizon - C; flags and depths follow their points.
SetSample time_reverse(const SetSample& c);

// The derived set C': accumulation points keep one derivation order less,
// fill segments persist (every point of a dense segment is an accumulation
// point), isolated points drop out.
SetSample derived_set(const SetSample& c);

// --- serialization ----------------------------------------------------------

// One sample per line: "horizon resolution time:flag time:flag ...", shortest
// round-trip number formatting, flags i/a/f.
std::string to_line(const SetSample& c);
SetSample from_line(const std::string& line);

// JSON object with the same fields.
std::string to_json(const SetSample& c);

std::string format_double(double v);

}  // namespace randset
