// Independent reference computations used only by the test suites. Nothing
// here calls into the library's estimator code paths.
#ifndef DSELINK_TESTS_ORACLES_HPP
#define DSELINK_TESTS_ORACLES_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

/// Calls `visit` with every size-k subset of {0, ..., n-1}.
inline void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    visit(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

struct DesignMoments {
  double mean;
  double variance;  // population variance over all equally likely samples
};

/// Exact design distribution of (N/n) * sum_{k in s} y_k over all SRSWOR
/// samples of size n from the frame `y`.
inline DesignMoments ht_total_design(const std::vector<int>& y, int n) {
  const int frame = static_cast<int>(y.size());
  std::vector<double> values;
  for_each_subset(frame, n, [&](const std::vector<int>& s) {
    int total = 0;
    for (int k : s) total += y[static_cast<std::size_t>(k)];
    values.push_back(static_cast<double>(frame) / n * total);
  });
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  var /= static_cast<double>(values.size());
  return {mean, var};
}

/// Solves N = n / (p1 + p2 - (a - b) p1 p2 - b p1), p1 = n1/N, p2 = n2/N, by
/// repeated substitution starting from the classical estimate.
inline double ding_fienberg_fixed_point(double n1, double n2, double m, double alpha, double beta) {
  const double n = n1 + n2 - m;
  double estimate = n1 * n2 / m;
  for (int iter = 0; iter < 1000000; ++iter) {
    const double p1 = n1 / estimate;
    const double p2 = n2 / estimate;
    const double next = n / (p1 + p2 - (alpha - beta) * p1 * p2 - beta * p1);
    if (std::abs(next - estimate) <= 1e-15 * std::abs(estimate)) return next;
    estimate = next;
  }
  return estimate;
}

/// Exhaustive planner: smallest n_r whose linearized RSE meets the target, or
/// -1 when none does. Written from the variance formula directly.
inline long long plan_scan(long long n1, double p1, double p2, double N, double fnr, double fpr,
                           double target) {
  const double pi = fnr * p1 * p2 * N;
  const double eta = fpr * p1 * (1 - p2) * N;
  const double s2 = (pi + eta) / n1 - ((pi - eta) / n1) * ((pi - eta) / n1);
  const double base = N * (1 - p1) * (1 - p2) / (p1 * p2);
  for (long long nr = 2; nr <= n1; ++nr) {
    const double sigma2 = double(n1) * n1 * s2 * (1.0 / nr - 1.0 / n1);
    const double v = base + sigma2 / (p1 * p2 * p1 * p2);
    if (std::sqrt(v) / N <= target) return nr;
  }
  return -1;
}

struct CellCounts {
  long long n11, n10, n01;
};

/// Multinomial draw of N individuals over the independent-capture cells via
/// sequential conditional binomials.
inline CellCounts draw_cells(std::mt19937_64& rng, long long N, double p1, double p2) {
  const double q11 = p1 * p2;
  const double q10 = p1 * (1 - p2);
  const double q01 = (1 - p1) * p2;
  std::binomial_distribution<long long> b11(N, q11);
  const long long n11 = b11(rng);
  std::binomial_distribution<long long> b10(N - n11, q10 / (1 - q11));
  const long long n10 = b10(rng);
  const double rest = 1 - q11 - q10;
  std::binomial_distribution<long long> b01(N - n11 - n10, rest > 0 ? std::min(1.0, q01 / rest) : 0.0);
  const long long n01 = b01(rng);
  return {n11, n10, n01};
}

}  // namespace oracle

#endif  // DSELINK_TESTS_ORACLES_HPP
