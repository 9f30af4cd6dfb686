#ifndef DSELINK_ERROR_HPP
#define DSELINK_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace dselink {

enum class ErrorKind {
  InvalidArgument,
  ZeroMatches,
  NonPositiveCorrectedMatches,
  DegenerateDenominator,
  SampleTooSmall,
  SampleExceedsFrame,
  EstimateBelowMargin,
  Infeasible,
};

std::string_view to_string(ErrorKind kind);

/// Raised when an estimator or sampler precondition does not hold. The
/// message always starts with the kind name so that command-line
/// diagnostics can be grepped for it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dselink

#endif  // DSELINK_ERROR_HPP
