#include "randset/set_samplers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "randset/rng.hpp"

namespace randset {

void SubordinatorParams::validate() const {
    if (!(index > 0.0 && index < 1.0))
        throw std::invalid_argument("SubordinatorParams: index must lie in (0,1)");
    if (!(jump_cutoff > 0.0))
        throw std::invalid_argument("SubordinatorParams: jump_cutoff must be positive");
}

namespace {

// Emits the fill representation of a drift-covered segment [x0, x1].
void emit_fill_segment(SetSample& out, double x0, double x1, double spacing, double t) {
    x1 = std::min(x1, t);
    if (x0 > t) return;
    double last = out.points.empty() ? -1.0 : out.points.back();
    auto push = [&](double x) {
        if (x > last && x <= t) {
            out.points.push_back(x);
            out.flags.push_back(PointFlag::fill);
            last = x;
        }
    };
    push(x0);
    for (double x = x0 + spacing; x < x1; x += spacing) push(x);
    if (x1 > x0) push(x1);
}

}  // namespace

SetSample sample_subordinator_range(double t, const SubordinatorParams& params,
                                    std::uint64_t seed) {
    if (!(t > 0.0)) throw std::invalid_argument("sample_subordinator_range: t must be positive");
    params.validate();
    const double alpha = params.index;
    const double eps = params.jump_cutoff;
    const double spacing = params.fill_spacing > 0.0 ? params.fill_spacing : eps;

    // Levy measure alpha * x^(-1-alpha) dx: tail mass above eps and the
    // compensating drift of the suppressed small jumps.
    const double big_rate = std::pow(eps, -alpha);
    const double drift = alpha / (1.0 - alpha) * std::pow(eps, 1.0 - alpha);

    SetSample out;
    out.horizon = t;
    out.resolution = spacing;
    Rng rng(seed);
    double x = 0.0;
    while (x <= t) {
        const double wait = rng.exponential(big_rate);
        const double reach = x + drift * wait;
        emit_fill_segment(out, x, reach, spacing, t);
        if (reach > t) break;
        const double jump = eps * std::pow(rng.uniform_pos(), -1.0 / alpha);
        x = reach + jump;
    }
    return out;
}

namespace {

// First hitting time of 0 of the squared Bessel process started at a^2, by
// Euler steps with a per-step Brownian-bridge crossing test in the Bessel
// coordinate. Returns infinity if no hit before t.
double squared_bessel_hit_time(double a, double delta, double t, double dt, Rng& rng) {
    double x = a * a;
    const double sigma = 2.0 * std::sqrt(dt);
    double time = 0.0;
    while (time < t) {
        const double sq = std::sqrt(std::max(x, 0.0));
        const double next = x + delta * dt + sigma * sq * rng.normal();
        time += dt;
        if (next <= 0.0) return time;
        // Bridge dip probability for the Bessel coordinate r = sqrt(x), which
        // has unit diffusion near the barrier.
        const double p_dip = std::exp(-2.0 * sq * std::sqrt(next) / dt);
        if (rng.uniform() < p_dip) return time;
        x = next;
    }
    return std::numeric_limits<double>::infinity();
}

}  // namespace

SetSample sample_bessel_zero_set(double t, double a, double delta, std::uint64_t seed,
                                 const BesselZeroSetOptions& opts) {
    if (!(delta > 0.0 && delta < 2.0))
        throw std::invalid_argument("sample_bessel_zero_set: delta must lie in (0,2)");
    if (!(a >= 0.0)) throw std::invalid_argument("sample_bessel_zero_set: a must be >= 0");
    if (!(t > 0.0)) throw std::invalid_argument("sample_bessel_zero_set: t must be positive");
    if (!(opts.dt > 0.0)) throw std::invalid_argument("sample_bessel_zero_set: dt must be positive");

    Rng rng(seed);
    double hit = 0.0;
    if (a > 0.0) hit = squared_bessel_hit_time(a, delta, t, opts.dt, rng);

    SubordinatorParams params;
    params.index = 1.0 - delta / 2.0;
    params.jump_cutoff = opts.jump_cutoff > 0.0 ? opts.jump_cutoff : 1e-6 * t;
    params.fill_spacing = opts.fill_spacing;

    SetSample out;
    out.horizon = t;
    out.resolution = std::max(opts.dt, params.fill_spacing > 0.0 ? params.fill_spacing
                                                                 : params.jump_cutoff);
    if (!(hit < t)) return out;  // never hit zero: the set is empty

    const SetSample range =
        sample_subordinator_range(t - hit, params, mix64(seed ^ 0x5bd1e995u));
    out.points.reserve(range.points.size());
    for (std::size_t i = 0; i < range.points.size(); ++i) {
        const double s = hit + range.points[i];
        if (s > t) break;
        if (!out.points.empty() && s <= out.points.back()) continue;
        out.points.push_back(s);
        out.flags.push_back(range.flags[i]);
    }
    return out;
}

SetSample sample_poisson_point_set(double t, double mu, std::uint64_t seed) {
    if (!(t > 0.0)) throw std::invalid_argument("sample_poisson_point_set: t must be positive");
    if (mu < 0.0) throw std::invalid_argument("sample_poisson_point_set: mu must be >= 0");
    Rng rng(seed);
    const std::uint64_t count = mu > 0.0 ? rng.poisson(mu * t) : 0;
    std::vector<double> pts(count);
    for (auto& p : pts) p = t * rng.uniform_pos();
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    SetSample out;
    out.horizon = t;
    out.resolution = t * 1e-12;
    out.points = std::move(pts);
    out.flags.assign(out.points.size(), PointFlag::isolated);
    return out;
}

}  // namespace randset
