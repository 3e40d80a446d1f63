#include "randset/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace randset::stats {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

namespace {

// Lower regularized incomplete gamma by series expansion; valid for x < a+1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper regularized incomplete gamma by continued fraction; valid for x >= a+1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double gamma_p(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw std::invalid_argument("gamma_p: bad arguments");
    if (x == 0.0) return 0.0;
    return (x < a + 1.0) ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw std::invalid_argument("gamma_q: bad arguments");
    if (x == 0.0) return 1.0;
    return (x < a + 1.0) ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

double chi_square_sf(double x, double df) {
    if (x <= 0.0) return 1.0;
    return gamma_q(df / 2.0, x / 2.0);
}

double poisson_pmf(std::uint64_t k, double mean) {
    if (mean <= 0.0) return k == 0 ? 1.0 : 0.0;
    const double kd = static_cast<double>(k);
    return std::exp(kd * std::log(mean) - mean - std::lgamma(kd + 1.0));
}

double binomial_pmf(std::uint64_t k, std::uint64_t n, double p) {
    if (k > n) return 0.0;
    if (p <= 0.0) return k == 0 ? 1.0 : 0.0;
    if (p >= 1.0) return k == n ? 1.0 : 0.0;
    const double kd = static_cast<double>(k);
    const double nd = static_cast<double>(n);
    const double logc =
        std::lgamma(nd + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(nd - kd + 1.0);
    return std::exp(logc + kd * std::log(p) + (nd - kd) * std::log1p(-p));
}

LineFit ols(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("ols: need two equally sized samples of size >= 2");
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw std::invalid_argument("ols: degenerate abscissae");
    LineFit fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    return fit;
}

double weighted_auc(std::vector<std::pair<double, double>> a,
                    std::vector<std::pair<double, double>> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("weighted_auc: empty sample");
    auto by_value = [](const auto& l, const auto& r) { return l.first < r.first; };
    std::sort(a.begin(), a.end(), by_value);
    std::sort(b.begin(), b.end(), by_value);
    double wa_total = 0.0, wb_total = 0.0;
    for (const auto& [v, w] : a) wa_total += w;
    for (const auto& [v, w] : b) wb_total += w;

    // Sweep b; for each distinct a-value accumulate the b-weight strictly
    // below it and half the tied b-weight.
    double u = 0.0;
    std::size_t j = 0;
    double below = 0.0;
    std::size_t i = 0;
    while (i < a.size()) {
        const double v = a[i].first;
        double wa = 0.0;
        while (i < a.size() && a[i].first == v) wa += a[i++].second;
        while (j < b.size() && b[j].first < v) below += b[j++].second;
        double tied = 0.0;
        std::size_t k = j;
        while (k < b.size() && b[k].first == v) tied += b[k++].second;
        u += wa * (below + 0.5 * tied);
    }
    return u / (wa_total * wb_total);
}

double all_in_one_side_pvalue(std::uint64_t k, std::uint64_t n_a, std::uint64_t n_b) {
    if (k == 0) return 1.0;
    if (k > n_a) return 0.0;
    // log C(nA,k) - log C(nA+nB,k)
    double logp = 0.0;
    for (std::uint64_t i = 0; i < k; ++i) {
        logp += std::log(static_cast<double>(n_a - i)) -
                std::log(static_cast<double>(n_a + n_b - i));
    }
    return std::exp(logp);
}

double two_proportion_z(std::uint64_t k1, std::uint64_t n1,
                        std::uint64_t k2, std::uint64_t n2) {
    if (n1 == 0 || n2 == 0) throw std::invalid_argument("two_proportion_z: empty group");
    const double p1 = static_cast<double>(k1) / static_cast<double>(n1);
    const double p2 = static_cast<double>(k2) / static_cast<double>(n2);
    const double pooled =
        static_cast<double>(k1 + k2) / static_cast<double>(n1 + n2);
    const double var =
        pooled * (1.0 - pooled) * (1.0 / static_cast<double>(n1) + 1.0 / static_cast<double>(n2));
    if (var == 0.0) return (p1 == p2) ? 0.0 : std::numeric_limits<double>::infinity();
    return (p1 - p2) / std::sqrt(var);
}

double binomial_lower_bound(std::uint64_t k, std::uint64_t n, double confidence) {
    if (n == 0) throw std::invalid_argument("binomial_lower_bound: n = 0");
    if (k == 0) return 0.0;
    // Clopper-Pearson via bisection on the binomial upper tail.
    const double alpha = 1.0 - confidence;
    auto tail = [&](double p) {
        // Pr[X >= k] at proportion p
        double s = 0.0;
        for (std::uint64_t i = k; i <= n; ++i) s += binomial_pmf(i, n, p);
        return s;
    };
    double lo = 0.0, hi = static_cast<double>(k) / static_cast<double>(n);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (tail(mid) < alpha / 2.0)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace randset::stats
