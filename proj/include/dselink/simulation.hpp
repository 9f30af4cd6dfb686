#ifndef DSELINK_SIMULATION_HPP
#define DSELINK_SIMULATION_HPP

#include <cstdint>
#include <vector>

#include "dselink/random.hpp"
#include "dselink/rematch.hpp"
#include "dselink/types.hpp"

namespace dselink {

struct ScenarioConfig {
  Count population = 1000;
  double p1plus = 0.9;
  double pplus1 = 0.8;
  ErrorRates errors;
  double sampling_fraction = 0.2;
  Count iterations = 10000;
  std::uint64_t seed = 0;

  /// Throws Error(InvalidArgument) on out-of-range fields.
  void validate() const;
};

/// Ground truth of one simulated two-list capture plus the linkage actually
/// observed. Per-record error flags for source 1 are kept so the rematch
/// sampler can read them back.
struct TrueLinkageState {
  ContingencyCounts counts_true{0, 0, 0};
  ContingencyCounts counts_star{0, 0, 0};
  Count false_negatives = 0;  // true matches left unlinked
  Count false_positives = 0;  // source-1-only records wrongly linked
  /// One entry per source-1 record: whether it is also in source 2.
  std::vector<bool> source1_matched;
  /// One entry per source-1 record: the error it carries, if any.
  std::vector<RematchOutcome> source1_flags;
};

/// Independent Bernoulli(p1+) and Bernoulli(p+1) inclusion for each of the
/// config's N individuals. Linkage starts out perfect.
TrueLinkageState generate_population(const ScenarioConfig& config, random::Stream& rng);

/// Breaks each true match with probability `fnr` and falsely links each
/// source-1-only record with probability `fpr`; updates counts_star.
void inject_linkage_errors(TrueLinkageState& state, const ErrorRates& rates, random::Stream& rng);

/// round(f * n1+), half up, never below 2.
Count rematch_size(Count n1plus, double sampling_fraction);

/// SRSWOR of rematch_size(n1+, f) source-1 records, coded by their flags.
RematchSample draw_rematch(const TrueLinkageState& state, double sampling_fraction,
                           random::Stream& rng);

struct EstimatorSummary {
  double mean = 0.0;
  double erb_pct = 0.0;   // 100 |mean - N| / N
  double erse_pct = 0.0;  // 100 sd / N, sd with divisor R - 1; NaN when R < 2
};

struct SimulationSummary {
  EstimatorSummary dse;               // classical DSE on the true counts
  EstimatorSummary dse_linkage_error; // classical DSE on the observed counts
  EstimatorSummary naive;             // corrected estimator
  double arse_pct = 0.0;              // 100 mean(sqrt(V)) / N
  double arse_pooled_pct = 0.0;       // 100 sqrt(mean(V)) / N
  Count iterations_completed = 0;
  Count exclusions = 0;
};

/// Result of a single Monte Carlo replicate.
struct IterationResult {
  bool ok = false;
  double dse = 0.0;
  double dse_linkage_error = 0.0;
  double naive = 0.0;
  double naive_variance = 0.0;
};

/// Replicate `iteration` of `config`; a pure function of (config, iteration).
IterationResult run_iteration(const ScenarioConfig& config, std::uint64_t iteration);

/// Runs every replicate and aggregates. Replicates whose estimators hit an
/// error condition are excluded and counted. `threads` only affects speed;
/// the summary is bit-identical for any value.
SimulationSummary run_scenario(const ScenarioConfig& config, unsigned threads = 1);

/// Aggregation step of run_scenario, in replicate order.
SimulationSummary summarize(const std::vector<IterationResult>& results, Count population);

}  // namespace dselink

#endif  // DSELINK_SIMULATION_HPP
