#ifndef DSELINK_VARIANCE_HPP
#define DSELINK_VARIANCE_HPP

#include "dselink/rematch.hpp"
#include "dselink/types.hpp"

namespace dselink {

/// First and second moments of the observable two-list counts when N
/// individuals fall independently into the four capture cells.
struct MultinomialMoments {
  double var_n1plus = 0.0;
  double var_nplus1 = 0.0;
  double var_n11 = 0.0;
  double cov_n1plus_nplus1 = 0.0;
  double cov_n1plus_n11 = 0.0;
  double cov_nplus1_n11 = 0.0;
};

MultinomialMoments multinomial_moments(double population, const CaptureProbabilities& capture);

/// Linearized variance of the classical dual system estimator,
/// N * p0+ * p+0 / (p1+ * p+1).
///
/// Expanding n1+ n+1 / n11 to first order about (N p1+, N p+1, N p1+ p+1)
/// gives N + (n1+ - N p1+)/p1+ + (n+1 - N p+1)/p+1 - (n11 - N p11)/p11;
/// the result follows from the multinomial moments above.
double dse_variance_approx(double population, const CaptureProbabilities& capture);

/// Linearized variance of the corrected estimator: the DSE term plus
/// sigma2_eps / (p1+ p+1)^2 from the noise of the rematch correction.
double naive_variance_approx(double population, const CaptureProbabilities& capture,
                             double sigma2_eps);

/// Plug-in estimate of `naive_variance_approx` with p1+ = n1+ / n_tilde,
/// p+1 = n+1 / n_tilde, and the leading multiplier taken as n_tilde.
///
/// Throws Error(EstimateBelowMargin) if n_tilde <= n1+ or n_tilde <= n+1.
double naive_variance_estimate(double n_tilde, const ContingencyCounts& counts_star,
                               const NuEstimate& nu);

}  // namespace dselink

#endif  // DSELINK_VARIANCE_HPP
