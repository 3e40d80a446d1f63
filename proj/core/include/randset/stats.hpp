// Small numeric/statistics toolbox shared by the diagnostics: tail
// probabilities, least squares, rank statistics, proportion intervals.
#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace randset::stats {

double normal_cdf(double x);

// Upper tail of the chi-square distribution with df degrees of freedom.
double chi_square_sf(double x, double df);

// Regularized incomplete gamma functions P(a,x) (lower) and Q(a,x) (upper).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

double poisson_pmf(std::uint64_t k, double mean);
double binomial_pmf(std::uint64_t k, std::uint64_t n, double p);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
};

LineFit ols(std::span<const double> x, std::span<const double> y);

// Mann-Whitney AUC of two weighted one-dimensional samples, with the 1/2 tie
// convention. Returns Pr[X_a > X_b] + Pr[X_a = X_b]/2.
double weighted_auc(std::vector<std::pair<double, double>> a,
                    std::vector<std::pair<double, double>> b);

// One-sided probability that all k pooled successes land in group A under the
// hypergeometric null: C(nA,k)/C(nA+nB,k). Exact, computed in log space.
// This is the Fisher exact p-value for a pattern observed k times on one side
// and never on the other.
double all_in_one_side_pvalue(std::uint64_t k, std::uint64_t n_a, std::uint64_t n_b);

// Two-proportion z statistic with pooled variance.
double two_proportion_z(std::uint64_t k1, std::uint64_t n1,
                        std::uint64_t k2, std::uint64_t n2);

// Clopper-Pearson lower confidence bound for a binomial proportion.
double binomial_lower_bound(std::uint64_t k, std::uint64_t n, double confidence);

}  // namespace randset::stats
