#ifndef DSELINK_TYPES_HPP
#define DSELINK_TYPES_HPP

#include <cstdint>
#include <optional>

namespace dselink {

using Count = std::int64_t;

/// Observed two-list counts. When the counts come from an error-afflicted
/// linkage, `n11` holds the observed (linked) match count rather than the
/// true overlap; the margins are unaffected by linkage error either way.
class ContingencyCounts {
 public:
  /// Throws Error(InvalidArgument) unless 0 <= n11 <= min(n1plus, nplus1).
  ContingencyCounts(Count n1plus, Count nplus1, Count n11);

  Count n1plus() const noexcept { return n1plus_; }
  Count nplus1() const noexcept { return nplus1_; }
  Count n11() const noexcept { return n11_; }
  Count n10() const noexcept { return n1plus_ - n11_; }
  Count n01() const noexcept { return nplus1_ - n11_; }
  /// Records present in at least one list.
  Count n() const noexcept { return n1plus_ + nplus1_ - n11_; }

  friend bool operator==(const ContingencyCounts&, const ContingencyCounts&) = default;

 private:
  Count n1plus_;
  Count nplus1_;
  Count n11_;
};

/// Inclusion probabilities of the two lists. The open interval is enforced
/// by `make`; the simulator also needs the closed endpoints (full coverage),
/// so `make_closed` accepts [0, 1].
class CaptureProbabilities {
 public:
  static CaptureProbabilities make(double p1plus, double pplus1);
  static CaptureProbabilities make_closed(double p1plus, double pplus1);

  double p1plus() const noexcept { return p1plus_; }
  double pplus1() const noexcept { return pplus1_; }
  double p0plus() const noexcept { return 1.0 - p1plus_; }
  double pplus0() const noexcept { return 1.0 - pplus1_; }
  double p11() const noexcept { return p1plus_ * pplus1_; }

  friend bool operator==(const CaptureProbabilities&, const CaptureProbabilities&) = default;

 private:
  CaptureProbabilities(double p1plus, double pplus1) : p1plus_(p1plus), pplus1_(pplus1) {}

  double p1plus_;
  double pplus1_;
};

/// Linkage error rates. `fnr` is the probability that a record of a true
/// match is left unlinked (one minus the correct-link probability);
/// `fpr` is the probability that a source-1-only record is wrongly linked.
class ErrorRates {
 public:
  ErrorRates() = default;
  ErrorRates(double fnr, double fpr);

  double fnr() const noexcept { return fnr_; }
  double fpr() const noexcept { return fpr_; }
  double alpha() const noexcept { return 1.0 - fnr_; }
  double beta() const noexcept { return fpr_; }

  friend bool operator==(const ErrorRates&, const ErrorRates&) = default;

 private:
  double fnr_ = 0.0;
  double fpr_ = 0.0;
};

struct EstimateReport {
  double n_hat = 0.0;
  std::optional<double> variance;
  std::optional<double> rse;

  /// Copy of this report carrying `v` and the matching relative standard error.
  EstimateReport with_variance(double v) const;
};

}  // namespace dselink

#endif  // DSELINK_TYPES_HPP
