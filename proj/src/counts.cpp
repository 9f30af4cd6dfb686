#include <cmath>
#include <string>

#include "dselink/error.hpp"
#include "dselink/types.hpp"

namespace dselink {

ContingencyCounts::ContingencyCounts(Count n1plus, Count nplus1, Count n11)
    : n1plus_(n1plus), nplus1_(nplus1), n11_(n11) {
  if (n1plus < 0 || nplus1 < 0 || n11 < 0) {
    throw Error(ErrorKind::InvalidArgument, "counts must be non-negative");
  }
  if (n11 > n1plus || n11 > nplus1) {
    throw Error(ErrorKind::InvalidArgument,
                "matched count " + std::to_string(n11) + " exceeds a list size (" +
                    std::to_string(n1plus) + ", " + std::to_string(nplus1) + ")");
  }
}

namespace {

bool in_open_unit(double p) { return p > 0.0 && p < 1.0; }
bool in_closed_unit(double p) { return p >= 0.0 && p <= 1.0; }

}  // namespace

CaptureProbabilities CaptureProbabilities::make(double p1plus, double pplus1) {
  if (!in_open_unit(p1plus) || !in_open_unit(pplus1)) {
    throw Error(ErrorKind::InvalidArgument, "capture probabilities must lie in (0, 1)");
  }
  return {p1plus, pplus1};
}

CaptureProbabilities CaptureProbabilities::make_closed(double p1plus, double pplus1) {
  if (!in_closed_unit(p1plus) || !in_closed_unit(pplus1)) {
    throw Error(ErrorKind::InvalidArgument, "capture probabilities must lie in [0, 1]");
  }
  return {p1plus, pplus1};
}

ErrorRates::ErrorRates(double fnr, double fpr) : fnr_(fnr), fpr_(fpr) {
  if (!in_closed_unit(fnr) || !in_closed_unit(fpr)) {
    throw Error(ErrorKind::InvalidArgument, "error rates must lie in [0, 1]");
  }
}

EstimateReport EstimateReport::with_variance(double v) const {
  EstimateReport out = *this;
  out.variance = v;
  out.rse = std::sqrt(v) / n_hat;
  return out;
}

}  // namespace dselink
