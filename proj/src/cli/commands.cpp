#include "dselink/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "dselink/cli/output_table.hpp"
#include "dselink/cli/scenario_file.hpp"
#include "dselink/error.hpp"
#include "dselink/estimators.hpp"
#include "dselink/rematch.hpp"
#include "dselink/simulation.hpp"
#include "dselink/variance.hpp"

namespace dselink::cli {

namespace {

struct EstimateOptions {
  Count n1 = 0;
  Count n2 = 0;
  Count m = 0;
  bool floor = false;
  std::string rematch;
  std::optional<double> alpha;
  std::optional<double> beta;
  bool json = false;
};

struct SimulateOptions {
  std::string scenario_file;
  std::optional<Count> iterations;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  std::string format = "csv";
  std::string output;
  std::string precision = "2";
  bool verbose = false;
};

struct PlanOptions {
  Count n1 = 0;
  double p1 = 0.0;
  double p2 = 0.0;
  double population = 0.0;
  double fnr = 0.0;
  double fpr = 0.0;
  double target_rse = 0.0;
};

nlohmann::json to_json(const EstimateReport& r) {
  nlohmann::json j = {{"n_hat", r.n_hat}};
  if (r.variance) j["variance"] = *r.variance;
  if (r.rse) j["rse"] = *r.rse;
  return j;
}

void print_report(std::ostream& out, const char* label, const EstimateReport& r) {
  out << std::left << std::setw(15) << label << "N = " << std::setprecision(10) << r.n_hat;
  if (r.variance) out << "  V = " << *r.variance << "  RSE = " << *r.rse;
  out << '\n';
}

int cmd_estimate(const EstimateOptions& o, std::ostream& out) {
  const ContingencyCounts counts(o.n1, o.n2, o.m);
  nlohmann::json doc;
  doc["counts"] = {{"n1plus", o.n1}, {"nplus1", o.n2}, {"n11", o.m}};

  const EstimateReport classical = dse(counts, o.floor ? Rounding::Floor : Rounding::None);
  doc["dse"] = to_json(classical);
  std::ostringstream text;
  print_report(text, "dse", classical);

  if (!o.rematch.empty()) {
    const RematchSample sample(read_rematch_codes(o.rematch), o.n1);
    const NuEstimate nu = ht_nu(sample);
    const EstimateReport naive = naive_corrected(counts, nu.nu_hat);
    const EstimateReport with_var =
        naive.with_variance(naive_variance_estimate(naive.n_hat, counts, nu));
    doc["rematch"] = {{"n_r", sample.n_r()},
                      {"f", sample.sampling_fraction()},
                      {"nu_hat", nu.nu_hat},
                      {"sigma2_eps", nu.sigma2_eps}};
    doc["naive_corrected"] = to_json(with_var);
    text << std::left << std::setw(15) << "rematch" << "n_r = " << sample.n_r()
         << "  f = " << sample.sampling_fraction() << "  nu_hat = " << nu.nu_hat
         << "  sigma2_eps = " << nu.sigma2_eps << '\n';
    print_report(text, "naive", with_var);
  }
  if (o.alpha && o.beta) {
    const EstimateReport df = ding_fienberg(counts, *o.alpha, *o.beta);
    doc["ding_fienberg"] = to_json(df);
    print_report(text, "ding_fienberg", df);
  }
  if (o.json) {
    out << doc.dump(2) << '\n';
  } else {
    out << text.str();
  }
  return 0;
}

Precision parse_precision(const std::string& s) {
  if (s == "full") return {0, true};
  int d = 0;
  try {
    std::size_t used = 0;
    d = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, "--precision expects an integer or 'full'");
  }
  if (d < 0 || d > 17) throw Error(ErrorKind::InvalidArgument, "--precision out of range");
  return {d, false};
}

void write_atomically(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".partial";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
    file << content;
    file.close();
    if (!file) {
      std::filesystem::remove(tmp);
      throw Error(ErrorKind::InvalidArgument, "failed writing " + path.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

int cmd_simulate(const SimulateOptions& o, std::ostream& out) {
  const Format format = o.format == "markdown" ? Format::Markdown : Format::Csv;
  const Precision precision = parse_precision(o.precision);
  ScenarioDefaults defaults;
  if (o.iterations) defaults.iterations = *o.iterations;
  if (o.seed) {
    defaults.seed = *o.seed;
  } else {
    std::random_device device;
    defaults.seed = (static_cast<std::uint64_t>(device()) << 32) | device();
  }
  const auto configs = resolve(read_scenarios(o.scenario_file), defaults);
  const unsigned threads = o.threads > 0 ? o.threads : std::max(1u, std::thread::hardware_concurrency());

  std::vector<OutputRow> rows;
  rows.reserve(configs.size());
  for (const auto& config : configs) {
    rows.push_back(make_row(config, run_scenario(config, threads), o.verbose));
  }
  std::ostringstream table;
  write_table(table, rows, format, precision, "seed=" + std::to_string(defaults.seed));
  if (o.output.empty()) {
    out << table.str();
  } else {
    write_atomically(o.output, table.str());
  }
  return 0;
}

int cmd_plan(const PlanOptions& o, std::ostream& out, std::ostream& err) {
  const auto capture = CaptureProbabilities::make(o.p1, o.p2);
  const ErrorRates rates(o.fnr, o.fpr);
  try {
    const Count n_r = plan_sample_size(o.n1, rates, capture, o.population, o.target_rse);
    out << "n_r = " << n_r << "\n"
        << "f = " << static_cast<double>(n_r) / static_cast<double>(o.n1) << "\n"
        << "predicted_rse = " << planned_rse(o.n1, n_r, rates, capture, o.population) << "\n";
    return 0;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Infeasible) throw;
    err << "error: " << e.what() << '\n';
    out << "minimum_rse = " << planned_rse(o.n1, o.n1, rates, capture, o.population) << "\n";
    return 3;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linkage-error corrected dual system estimation"};
  app.require_subcommand(1);

  EstimateOptions est;
  auto* estimate = app.add_subcommand("estimate", "Estimate N from one set of two-list counts");
  estimate->add_option("--n1", est.n1, "Records in source 1")->required();
  estimate->add_option("--n2", est.n2, "Records in source 2")->required();
  estimate->add_option("--m", est.m, "Linked records")->required();
  estimate->add_flag("--floor", est.floor, "Apply the greatest-integer function to the DSE");
  estimate->add_option("--rematch", est.rematch, "CSV of rematch codes (+1, -1, 0)");
  auto* alpha = estimate->add_option("--alpha", est.alpha, "Correct-link probability");
  auto* beta = estimate->add_option("--beta", est.beta, "False-link probability");
  alpha->needs(beta);
  beta->needs(alpha);
  estimate->add_flag("--json", est.json, "Machine-readable output");

  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "Run Monte Carlo scenarios from a CSV file");
  simulate->add_option("scenario-file", sim.scenario_file, "Scenario CSV")->required();
  simulate->add_option("--iterations", sim.iterations, "Replicates per scenario (default 10000)")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", sim.seed, "Random seed (random when omitted)");
  simulate->add_option("--threads", sim.threads, "Worker threads")
      ->envname("DSE_LINK_THREADS")
      ->check(CLI::NonNegativeNumber);
  simulate->add_option("--format", sim.format, "csv or markdown")
      ->check(CLI::IsMember({"csv", "markdown"}));
  simulate->add_option("--output", sim.output, "Output path (stdout when omitted)");
  simulate->add_option("--precision", sim.precision, "Decimals for percentages, or 'full'");
  simulate->add_flag("--verbose", sim.verbose, "Append means and pooled ARSE columns");

  PlanOptions plan;
  auto* planner = app.add_subcommand("plan", "Choose a rematch sample size");
  planner->add_option("--n1", plan.n1, "Records in source 1")->required();
  planner->add_option("--p1", plan.p1, "Anticipated capture probability, source 1")->required();
  planner->add_option("--p2", plan.p2, "Anticipated capture probability, source 2")->required();
  planner->add_option("--N", plan.population, "Anticipated population size")->required();
  planner->add_option("--fnr", plan.fnr, "Anticipated false-negative rate")->required();
  planner->add_option("--fpr", plan.fpr, "Anticipated false-positive rate")->required();
  planner->add_option("--target-rse", plan.target_rse, "Target relative standard error")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (estimate->parsed()) return cmd_estimate(est, out);
    if (simulate->parsed()) return cmd_simulate(sim, out);
    return cmd_plan(plan, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace dselink::cli
