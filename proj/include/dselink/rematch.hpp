#ifndef DSELINK_REMATCH_HPP
#define DSELINK_REMATCH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "dselink/types.hpp"

namespace dselink {

/// Outcome of re-examining one sampled source-1 record in a rematch study.
/// The underlying value is the record's contribution y_k to the net
/// correction total.
enum class RematchOutcome : std::int8_t {
  FalsePositive = -1,
  Correct = 0,
  FalseNegative = 1,
};

constexpr int code(RematchOutcome o) noexcept { return static_cast<int>(o); }

/// Throws Error(InvalidArgument) for anything other than -1, 0, +1.
RematchOutcome outcome_from_code(int y);

/// Simple random sample without replacement of source-1 records.
class RematchSample {
 public:
  /// Throws Error(SampleTooSmall) if fewer than two outcomes are given and
  /// Error(SampleExceedsFrame) if there are more outcomes than n1plus.
  RematchSample(std::vector<RematchOutcome> outcomes, Count n1plus);

  std::span<const RematchOutcome> outcomes() const noexcept { return outcomes_; }
  Count n1plus() const noexcept { return n1plus_; }
  Count n_r() const noexcept { return static_cast<Count>(outcomes_.size()); }
  double sampling_fraction() const noexcept {
    return static_cast<double>(n_r()) / static_cast<double>(n1plus_);
  }
  double mean() const noexcept;
  /// Sample variance of the codes with divisor n_r - 1.
  double variance() const noexcept;

 private:
  std::vector<RematchOutcome> outcomes_;
  Count n1plus_;
};

struct NuEstimate {
  double nu_hat = 0.0;      // estimate of false negatives minus false positives
  double sigma2_eps = 0.0;  // estimated design variance of nu_hat
};

/// Horvitz-Thompson estimate of the net correction under SRSWOR:
///   nu_hat     = (n1+ / n_r) * sum(y_k)
///   sigma2_eps = n1+^2 * (1 - f) / n_r * s_y^2
NuEstimate ht_nu(const RematchSample& sample);

/// Smallest rematch sample size n_r in [2, n1plus] for which the linearized
/// variance of the corrected estimator, with the anticipated error rates,
/// gives a relative standard error of at most `target_rse`.
///
/// The anticipated population variance of the codes is
///   S^2 = (pi + eta) / n1+ - ((pi - eta) / n1+)^2
/// with pi = fnr p1+ p+1 N and eta = fpr p1+ (1 - p+1) N.
///
/// Throws Error(Infeasible) when not even a full rematch reaches the target.
Count plan_sample_size(Count n1plus, const ErrorRates& anticipated,
                       const CaptureProbabilities& capture, double population_guess,
                       double target_rse);

/// Relative standard error the planner predicts for a given n_r; exposed
/// so callers can report the best achievable value.
double planned_rse(Count n1plus, Count n_r, const ErrorRates& anticipated,
                   const CaptureProbabilities& capture, double population_guess);

}  // namespace dselink

#endif  // DSELINK_REMATCH_HPP
