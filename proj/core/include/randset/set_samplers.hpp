// Samplers whose output is a SetSample directly: the closed range of a stable
// subordinator, Bessel zero sets built on top of it, and a Poisson point set
// used as a reference process in the block diagnostics.
#pragma once

#include <cstdint>

#include "randset/set_sample.hpp"

namespace randset {

struct SubordinatorParams {
    double index = 0.5;        // alpha in (0,1)
    double jump_cutoff = 0.0;  // absolute small-jump cutoff eps_J > 0
    // Spacing of the fill points standing for drift-covered stretches;
    // defaults to jump_cutoff when 0.
    double fill_spacing = 0.0;

    void validate() const;
};

inline SubordinatorParams default_subordinator_params(double alpha, double t) {
    // eps_J default 1e-6 * t; jump-truncation bias is O(eps_J^(1-alpha)).
    return SubordinatorParams{alpha, 1e-6 * t, 0.0};
}

// Closed range of a stable subordinator of index alpha, truncated to [0, t].
// Jumps of size >= eps_J are simulated from the restricted Levy measure; the
// residual small-jump activity is replaced by its compensating drift and
// represented as fill segments. The output always contains 0; its complement
// in [0, t] is the union of the realized jump gaps.
SetSample sample_subordinator_range(double t, const SubordinatorParams& params,
                                    std::uint64_t seed);

struct BesselZeroSetOptions {
    double dt = 1e-4;          // Euler step of the squared-Bessel hitting stage
    double jump_cutoff = 0.0;  // eps_J for the post-hit stage; 1e-6 * t when 0
    double fill_spacing = 0.0;
};

// Zero set of a Bessel process of dimension delta in (0,2) started at a >= 0.
// Stage one finds the first hitting time of 0 by Euler-Maruyama on the squared
// Bessel process dX = delta dt + 2 sqrt(X+) dW clamped at 0 (the Bessel drift
// itself is singular there), with a Brownian-bridge crossing check per step so
// the monitoring bias is O(dt) instead of O(sqrt(dt)). Stage two generates the
// zero set after the hit as the range of a stable subordinator of index
// 1 - delta/2, shifted and truncated; the shifted set is independent of the
// hitting time.
SetSample sample_bessel_zero_set(double t, double a, double delta, std::uint64_t seed,
                                 const BesselZeroSetOptions& opts = {});

// Poisson point process of intensity mu on [0, t], all points isolated.
SetSample sample_poisson_point_set(double t, double mu, std::uint64_t seed);

}  // namespace randset
