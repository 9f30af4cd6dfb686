#include "dselink/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "dselink/error.hpp"
#include "dselink/estimators.hpp"
#include "dselink/variance.hpp"

namespace dselink {

void ScenarioConfig::validate() const {
  auto unit = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (population < 0) throw Error(ErrorKind::InvalidArgument, "population must be >= 0");
  if (!unit(p1plus) || !unit(pplus1)) {
    throw Error(ErrorKind::InvalidArgument, "capture probabilities must lie in [0, 1]");
  }
  if (!(sampling_fraction > 0.0 && sampling_fraction <= 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "sampling fraction must lie in (0, 1]");
  }
  if (iterations < 1) throw Error(ErrorKind::InvalidArgument, "iterations must be >= 1");
}

TrueLinkageState generate_population(const ScenarioConfig& config, random::Stream& rng) {
  TrueLinkageState state;
  Count n11 = 0;
  Count n10 = 0;
  Count n01 = 0;
  state.source1_matched.reserve(static_cast<std::size_t>(config.population));
  for (Count i = 0; i < config.population; ++i) {
    const bool in1 = rng.bernoulli(config.p1plus);
    const bool in2 = rng.bernoulli(config.pplus1);
    if (in1) state.source1_matched.push_back(in2);
    n11 += in1 && in2;
    n10 += in1 && !in2;
    n01 += !in1 && in2;
  }
  state.counts_true = ContingencyCounts(n11 + n10, n11 + n01, n11);
  state.counts_star = state.counts_true;
  state.source1_flags.assign(state.source1_matched.size(), RematchOutcome::Correct);
  return state;
}

void inject_linkage_errors(TrueLinkageState& state, const ErrorRates& rates,
                           random::Stream& rng) {
  Count fn = 0;
  Count fp = 0;
  for (std::size_t k = 0; k < state.source1_matched.size(); ++k) {
    if (state.source1_matched[k]) {
      if (rng.bernoulli(rates.fnr())) {
        state.source1_flags[k] = RematchOutcome::FalseNegative;
        ++fn;
      }
    } else if (rng.bernoulli(rates.fpr())) {
      state.source1_flags[k] = RematchOutcome::FalsePositive;
      ++fp;
    }
  }
  state.false_negatives = fn;
  state.false_positives = fp;
  const auto& t = state.counts_true;
  // A false positive is counted at record level only: it raises the linked
  // count without consuming a source-2-only record.
  state.counts_star = ContingencyCounts(t.n1plus(), t.nplus1(), t.n11() - fn + fp);
}

Count rematch_size(Count n1plus, double sampling_fraction) {
  const auto rounded = static_cast<Count>(std::floor(sampling_fraction * static_cast<double>(n1plus) + 0.5));
  return std::max<Count>(2, std::min(rounded, n1plus));
}

RematchSample draw_rematch(const TrueLinkageState& state, double sampling_fraction,
                           random::Stream& rng) {
  const Count n1 = state.counts_true.n1plus();
  if (n1 < 2) {
    throw Error(ErrorKind::SampleTooSmall, "source 1 holds fewer than 2 records");
  }
  const Count n_r = rematch_size(n1, sampling_fraction);
  std::vector<std::uint32_t> index(static_cast<std::size_t>(n1));
  std::iota(index.begin(), index.end(), 0u);
  std::vector<RematchOutcome> outcomes;
  outcomes.reserve(static_cast<std::size_t>(n_r));
  // Partial Fisher-Yates: the first n_r slots form a uniform SRSWOR.
  for (Count i = 0; i < n_r; ++i) {
    const auto j = static_cast<std::size_t>(i) +
                   static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n1 - i)));
    std::swap(index[static_cast<std::size_t>(i)], index[j]);
    outcomes.push_back(state.source1_flags[index[static_cast<std::size_t>(i)]]);
  }
  return RematchSample(std::move(outcomes), n1);
}

IterationResult run_iteration(const ScenarioConfig& config, std::uint64_t iteration) {
  random::Stream rng(config.seed, iteration);
  TrueLinkageState state = generate_population(config, rng);

  IterationResult r;
  try {
    // Throws if false links push n11* past n+1, which the record-level
    // ContingencyCounts cannot represent; the replicate is then excluded.
    inject_linkage_errors(state, config.errors, rng);
    if (state.counts_star.n1plus() != state.counts_true.n1plus() ||
        state.counts_star.nplus1() != state.counts_true.nplus1()) {
      throw std::logic_error("linkage errors altered a list margin");
    }
    const RematchSample sample = draw_rematch(state, config.sampling_fraction, rng);
    const NuEstimate nu = ht_nu(sample);
    r.dse = dse(state.counts_true).n_hat;
    r.dse_linkage_error = dse(state.counts_star).n_hat;
    r.naive = naive_corrected(state.counts_star, nu.nu_hat).n_hat;
    r.naive_variance = naive_variance_estimate(r.naive, state.counts_star, nu);
    r.ok = true;
  } catch (const Error&) {
    r.ok = false;
  }
  return r;
}

namespace {

struct Moments {
  double mean;
  double sd;
};

Moments two_pass(const std::vector<double>& xs) {
  const double n = static_cast<double>(xs.size());
  double sum = 0.0;
  for (double x : xs) sum += x;
  const double mean = sum / n;
  if (xs.size() < 2) return {mean, std::numeric_limits<double>::quiet_NaN()};
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / (n - 1.0))};
}

EstimatorSummary describe(const std::vector<double>& xs, double population) {
  EstimatorSummary s;
  if (xs.empty()) {
    s.mean = s.erb_pct = s.erse_pct = std::numeric_limits<double>::quiet_NaN();
    return s;
  }
  const Moments m = two_pass(xs);
  s.mean = m.mean;
  s.erb_pct = 100.0 * std::abs(m.mean - population) / population;
  s.erse_pct = 100.0 * m.sd / population;
  return s;
}

}  // namespace

SimulationSummary summarize(const std::vector<IterationResult>& results, Count population) {
  std::vector<double> dse_values;
  std::vector<double> err_values;
  std::vector<double> naive_values;
  dse_values.reserve(results.size());
  err_values.reserve(results.size());
  naive_values.reserve(results.size());
  double se_sum = 0.0;
  double var_sum = 0.0;
  SimulationSummary out;
  for (const auto& r : results) {
    if (!r.ok) {
      ++out.exclusions;
      continue;
    }
    dse_values.push_back(r.dse);
    err_values.push_back(r.dse_linkage_error);
    naive_values.push_back(r.naive);
    se_sum += std::sqrt(r.naive_variance);
    var_sum += r.naive_variance;
  }
  const double n = static_cast<double>(population);
  out.iterations_completed = static_cast<Count>(naive_values.size());
  out.dse = describe(dse_values, n);
  out.dse_linkage_error = describe(err_values, n);
  out.naive = describe(naive_values, n);
  const double completed = static_cast<double>(out.iterations_completed);
  out.arse_pct = 100.0 * (se_sum / completed) / n;
  out.arse_pooled_pct = 100.0 * std::sqrt(var_sum / completed) / n;
  return out;
}

SimulationSummary run_scenario(const ScenarioConfig& config, unsigned threads) {
  config.validate();
  const auto total = static_cast<std::size_t>(config.iterations);
  std::vector<IterationResult> results(total);
  threads = std::clamp<unsigned>(threads, 1u, static_cast<unsigned>(std::max<std::size_t>(total, 1)));

  constexpr std::size_t kChunk = 64;
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> failures(threads);
  auto worker = [&](unsigned id) {
    try {
      for (;;) {
        const std::size_t begin = next.fetch_add(kChunk);
        if (begin >= total) return;
        const std::size_t end = std::min(total, begin + kChunk);
        for (std::size_t i = begin; i < end; ++i) results[i] = run_iteration(config, i);
      }
    } catch (...) {
      failures[id] = std::current_exception();
      next.store(total);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return summarize(results, config.population);
}

}  // namespace dselink
