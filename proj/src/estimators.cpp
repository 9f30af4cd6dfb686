#include "dselink/estimators.hpp"

#include <cmath>
#include <string>

#include "dselink/error.hpp"

namespace dselink {

namespace {

double margin_product(const ContingencyCounts& c) {
  return static_cast<double>(c.n1plus()) * static_cast<double>(c.nplus1());
}

}  // namespace

EstimateReport dse(const ContingencyCounts& counts, Rounding rounding) {
  if (counts.n11() == 0) {
    throw Error(ErrorKind::ZeroMatches, "no matched records; the lists appear disjoint");
  }
  double n_hat = margin_product(counts) / static_cast<double>(counts.n11());
  if (rounding == Rounding::Floor) {
    n_hat = std::floor(n_hat);
  }
  return {n_hat, std::nullopt, std::nullopt};
}

EstimateReport naive_corrected(const ContingencyCounts& counts_star, double nu_hat) {
  const double corrected = static_cast<double>(counts_star.n11()) + nu_hat;
  if (!(corrected > 0.0)) {
    throw Error(ErrorKind::NonPositiveCorrectedMatches,
                "corrected match count " + std::to_string(corrected) + " is not positive");
  }
  return {margin_product(counts_star) / corrected, std::nullopt, std::nullopt};
}

EstimateReport ding_fienberg(const ContingencyCounts& counts_star, double alpha, double beta) {
  if (!(alpha > 0.0 && alpha <= 1.0) || !(beta >= 0.0 && beta < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "alpha must lie in (0, 1] and beta in [0, 1)");
  }
  if (!(alpha > beta)) {
    throw Error(ErrorKind::InvalidArgument, "alpha must exceed beta");
  }
  const double denominator =
      static_cast<double>(counts_star.n11()) - beta * static_cast<double>(counts_star.n1plus());
  if (!(denominator > 0.0)) {
    throw Error(ErrorKind::DegenerateDenominator,
                "observed matches do not exceed beta * n1+; error rates are inconsistent "
                "with the counts");
  }
  return {(alpha - beta) * margin_product(counts_star) / denominator, std::nullopt, std::nullopt};
}

}  // namespace dselink
