#ifndef DSELINK_CLI_SCENARIO_FILE_HPP
#define DSELINK_CLI_SCENARIO_FILE_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "dselink/rematch.hpp"
#include "dselink/simulation.hpp"

namespace dselink::cli {

/// One row of a scenario CSV. Optional columns that are absent or empty
/// fall back to the global defaults when the file is resolved.
struct ScenarioRow {
  double p1 = 0.0;
  double p2 = 0.0;
  double fnr = 0.0;
  double fpr = 0.0;
  double f = 0.0;
  std::optional<Count> population;
  std::optional<Count> iterations;
  std::optional<std::uint64_t> seed;
  std::size_t line = 0;
};

struct ScenarioDefaults {
  Count population = 1000;
  Count iterations = 10000;
  std::uint64_t seed = 0;
};

/// Parses `p1,p2,fnr,fpr,f[,iterations,seed]` CSV (an `N` column is also
/// accepted). Columns are matched by header name; lines starting with `#`
/// and blank lines are skipped. Throws Error(InvalidArgument) naming the
/// line on malformed input.
std::vector<ScenarioRow> parse_scenarios(std::istream& in);
std::vector<ScenarioRow> read_scenarios(const std::filesystem::path& path);

/// Row values win over the defaults. Validates each resulting config.
std::vector<ScenarioConfig> resolve(const std::vector<ScenarioRow>& rows,
                                    const ScenarioDefaults& defaults);

/// Single-column CSV of rematch codes (+1, -1, 0); an optional non-numeric
/// header line is skipped.
std::vector<RematchOutcome> parse_rematch_codes(std::istream& in);
std::vector<RematchOutcome> read_rematch_codes(const std::filesystem::path& path);

}  // namespace dselink::cli

#endif  // DSELINK_CLI_SCENARIO_FILE_HPP
