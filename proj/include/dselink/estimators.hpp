#ifndef DSELINK_ESTIMATORS_HPP
#define DSELINK_ESTIMATORS_HPP

#include "dselink/types.hpp"

namespace dselink {

/// Floor variant of the estimator is opt-in.
enum class Rounding { None, Floor };

/// Classical dual system (Lincoln-Petersen) estimate n1+ * n+1 / n11.
///
/// Assumes a closed population, independent lists, homogeneous capture
/// probabilities on at least one list, no spurious records, and perfect
/// linkage. Throws Error(ZeroMatches) when n11 == 0.
EstimateReport dse(const ContingencyCounts& counts, Rounding rounding = Rounding::None);

/// Linkage-error corrected estimate n1+ * n+1 / (n11* + nu_hat), where
/// `counts_star.n11()` is the observed link count and `nu_hat` an unbiased
/// estimate of (false negatives - false positives). Never floored.
/// Throws Error(NonPositiveCorrectedMatches) when n11* + nu_hat <= 0.
EstimateReport naive_corrected(const ContingencyCounts& counts_star, double nu_hat);

/// Ding-Fienberg estimate with known correct-link probability `alpha` and
/// false-link probability `beta`:
///
///   N = (alpha - beta) * n1+ * n+1 / (n11* - beta * n1+)
///
/// which is the fixed point of N = n / (p1+ + p+1 - (alpha - beta) p1+ p+1
/// - beta p1+) with p1+ = n1+/N and p+1 = n+1/N.
///
/// Requires alpha in (0, 1], beta in [0, 1) and alpha > beta.
/// Throws Error(DegenerateDenominator) when n11* <= beta * n1+.
EstimateReport ding_fienberg(const ContingencyCounts& counts_star, double alpha, double beta);

}  // namespace dselink

#endif  // DSELINK_ESTIMATORS_HPP
