#include "dselink/variance.hpp"

#include <string>

#include "dselink/error.hpp"

namespace dselink {

namespace {

void require_positive_population(double population) {
  if (!(population > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "population size must be positive");
  }
}

}  // namespace

MultinomialMoments multinomial_moments(double population, const CaptureProbabilities& capture) {
  require_positive_population(population);
  const double n = population;
  const double p1 = capture.p1plus();
  const double p2 = capture.pplus1();
  const double p11 = capture.p11();

  MultinomialMoments m;
  m.var_n1plus = n * p1 * (1.0 - p1);
  m.var_nplus1 = n * p2 * (1.0 - p2);
  m.var_n11 = n * p11 * (1.0 - p11);
  m.cov_n1plus_nplus1 = 0.0;
  m.cov_n1plus_n11 = n * p11 * (1.0 - p11) - n * p1 * p1 * p2 * capture.pplus0();
  m.cov_nplus1_n11 = n * p11 * (1.0 - p11) - n * p1 * p2 * capture.p0plus() * p2;
  return m;
}

double dse_variance_approx(double population, const CaptureProbabilities& capture) {
  require_positive_population(population);
  return population * capture.p0plus() * capture.pplus0() / capture.p11();
}

double naive_variance_approx(double population, const CaptureProbabilities& capture,
                             double sigma2_eps) {
  if (!(sigma2_eps >= 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "sigma2_eps must be non-negative");
  }
  const double p11 = capture.p11();
  return dse_variance_approx(population, capture) + sigma2_eps / (p11 * p11);
}

double naive_variance_estimate(double n_tilde, const ContingencyCounts& counts_star,
                               const NuEstimate& nu) {
  if (!(nu.sigma2_eps >= 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "sigma2_eps must be non-negative");
  }
  const double n1 = static_cast<double>(counts_star.n1plus());
  const double n2 = static_cast<double>(counts_star.nplus1());
  if (!(n_tilde > n1) || !(n_tilde > n2)) {
    throw Error(ErrorKind::EstimateBelowMargin,
                "estimate " + std::to_string(n_tilde) + " does not exceed the list sizes (" +
                    std::to_string(counts_star.n1plus()) + ", " +
                    std::to_string(counts_star.nplus1()) + ")");
  }
  const double p1 = n1 / n_tilde;
  const double p2 = n2 / n_tilde;
  const double p11 = p1 * p2;
  return n_tilde * (1.0 - p1) * (1.0 - p2) / p11 + nu.sigma2_eps / (p11 * p11);
}

}  // namespace dselink
