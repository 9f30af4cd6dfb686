#ifndef DSELINK_CLI_OUTPUT_TABLE_HPP
#define DSELINK_CLI_OUTPUT_TABLE_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dselink/simulation.hpp"

namespace dselink::cli {

/// One result row, keyed by the scenario parameters. Column order in every
/// rendering is:
///
///   p1, p2, fnr, fpr, f,
///   erb_dse, erb_dse_err, erb_naive,
///   erse_dse, erse_dse_err, erse_naive,
///   arse_naive, exclusions
///
/// where `dse` is the classical estimator on the true counts, `dse_err` the
/// same estimator on the error-afflicted counts and `naive` the corrected
/// estimator. All metric columns are percentages of the true N. Verbose
/// output appends N, iterations, seed, the three mean estimates and the
/// pooled ARSE, 100 sqrt(mean V) / N.
struct OutputRow {
  double p1 = 0.0;
  double p2 = 0.0;
  double fnr = 0.0;
  double fpr = 0.0;
  double f = 0.0;
  double erb_dse = 0.0;
  double erb_dse_err = 0.0;
  double erb_naive = 0.0;
  double erse_dse = 0.0;
  double erse_dse_err = 0.0;
  double erse_naive = 0.0;
  double arse_naive = 0.0;
  Count exclusions = 0;

  struct Extra {
    Count population = 0;
    Count iterations = 0;
    std::uint64_t seed = 0;
    double mean_dse = 0.0;
    double mean_dse_err = 0.0;
    double mean_naive = 0.0;
    double arse_pooled_naive = 0.0;
  };
  std::optional<Extra> extra;
};

OutputRow make_row(const ScenarioConfig& config, const SimulationSummary& summary, bool verbose);

/// How metric columns are printed: a fixed number of decimals, or the
/// shortest text that parses back to the identical double.
struct Precision {
  int decimals = 2;
  bool exact = false;
};

enum class Format { Csv, Markdown };

/// `seed_note` is written as a leading `# ...` comment line (CSV) or a
/// paragraph (Markdown) when non-empty. NaN metrics render as "NA".
void write_table(std::ostream& out, const std::vector<OutputRow>& rows, Format format,
                 Precision precision, const std::string& seed_note = {});

/// Inverse of write_table(Format::Csv). "NA" parses to NaN.
std::vector<OutputRow> parse_table_csv(std::istream& in);

}  // namespace dselink::cli

#endif  // DSELINK_CLI_OUTPUT_TABLE_HPP
