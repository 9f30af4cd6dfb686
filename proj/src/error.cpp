#include "dselink/error.hpp"

namespace dselink {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ZeroMatches: return "ZeroMatches";
    case ErrorKind::NonPositiveCorrectedMatches: return "NonPositiveCorrectedMatches";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::SampleTooSmall: return "SampleTooSmall";
    case ErrorKind::SampleExceedsFrame: return "SampleExceedsFrame";
    case ErrorKind::EstimateBelowMargin: return "EstimateBelowMargin";
    case ErrorKind::Infeasible: return "Infeasible";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace dselink
