#include "dselink/rematch.hpp"

#include <cmath>
#include <string>

#include "dselink/error.hpp"
#include "dselink/variance.hpp"

namespace dselink {

RematchOutcome outcome_from_code(int y) {
  switch (y) {
    case -1: return RematchOutcome::FalsePositive;
    case 0: return RematchOutcome::Correct;
    case 1: return RematchOutcome::FalseNegative;
    default:
      throw Error(ErrorKind::InvalidArgument,
                  "rematch code must be -1, 0 or +1, got " + std::to_string(y));
  }
}

RematchSample::RematchSample(std::vector<RematchOutcome> outcomes, Count n1plus)
    : outcomes_(std::move(outcomes)), n1plus_(n1plus) {
  if (outcomes_.size() < 2) {
    throw Error(ErrorKind::SampleTooSmall,
                "a rematch sample needs at least 2 records, got " +
                    std::to_string(outcomes_.size()));
  }
  if (n_r() > n1plus_) {
    throw Error(ErrorKind::SampleExceedsFrame,
                "rematch sample of " + std::to_string(n_r()) + " exceeds source-1 size " +
                    std::to_string(n1plus_));
  }
}

double RematchSample::mean() const noexcept {
  long long total = 0;
  for (auto o : outcomes_) total += code(o);
  return static_cast<double>(total) / static_cast<double>(n_r());
}

double RematchSample::variance() const noexcept {
  // Codes are in {-1, 0, 1}, so both sums are exact integers.
  long long sum = 0;
  long long sum_sq = 0;
  for (auto o : outcomes_) {
    sum += code(o);
    sum_sq += code(o) * code(o);
  }
  const double n = static_cast<double>(n_r());
  const double s = static_cast<double>(sum);
  return (static_cast<double>(sum_sq) - s * s / n) / (n - 1.0);
}

NuEstimate ht_nu(const RematchSample& sample) {
  long long sum = 0;
  for (auto o : sample.outcomes()) sum += code(o);
  const double n1 = static_cast<double>(sample.n1plus());
  const double nr = static_cast<double>(sample.n_r());
  NuEstimate out;
  out.nu_hat = n1 / nr * static_cast<double>(sum);
  if (sample.n_r() == sample.n1plus()) {
    out.sigma2_eps = 0.0;
  } else {
    const double fpc = 1.0 - sample.sampling_fraction();
    out.sigma2_eps = n1 * n1 * fpc / nr * sample.variance();
  }
  return out;
}

namespace {

double anticipated_code_variance(Count n1plus, const ErrorRates& rates,
                                 const CaptureProbabilities& capture, double population) {
  const double n1 = static_cast<double>(n1plus);
  const double pi = rates.fnr() * capture.p11() * population;
  const double eta = rates.fpr() * capture.p1plus() * capture.pplus0() * population;
  const double mean = (pi - eta) / n1;
  return std::max(0.0, (pi + eta) / n1 - mean * mean);
}

}  // namespace

double planned_rse(Count n1plus, Count n_r, const ErrorRates& anticipated,
                   const CaptureProbabilities& capture, double population_guess) {
  const double n1 = static_cast<double>(n1plus);
  const double s2 = anticipated_code_variance(n1plus, anticipated, capture, population_guess);
  const double sigma2 =
      n_r >= n1plus ? 0.0 : n1 * n1 * s2 * (1.0 / static_cast<double>(n_r) - 1.0 / n1);
  return std::sqrt(naive_variance_approx(population_guess, capture, sigma2)) / population_guess;
}

Count plan_sample_size(Count n1plus, const ErrorRates& anticipated,
                       const CaptureProbabilities& capture, double population_guess,
                       double target_rse) {
  if (n1plus < 2) {
    throw Error(ErrorKind::SampleTooSmall, "source 1 must hold at least 2 records");
  }
  if (!(population_guess > 0.0) || !(target_rse > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "population guess and target RSE must be positive");
  }
  const double best = planned_rse(n1plus, n1plus, anticipated, capture, population_guess);
  if (best > target_rse) {
    throw Error(ErrorKind::Infeasible, "minimum achievable RSE is " + std::to_string(best));
  }
  // The predicted RSE is non-increasing in n_r, so the first hit is minimal.
  for (Count n_r = 2; n_r < n1plus; ++n_r) {
    if (planned_rse(n1plus, n_r, anticipated, capture, population_guess) <= target_rse) {
      return n_r;
    }
  }
  return n1plus;
}

}  // namespace dselink
