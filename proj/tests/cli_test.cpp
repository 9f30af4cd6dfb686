#include "dselink/cli/commands.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "dselink/cli/output_table.hpp"
#include "dselink/cli/scenario_file.hpp"
#include "dselink/error.hpp"

namespace fs = std::filesystem;
using namespace dselink;
using namespace dselink::cli;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("dselink_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path file(const std::string& name, const std::string& content) const {
    std::ofstream(path_ / name) << content;
    return path_ / name;
  }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

std::string codes_csv(int plus, int minus, int zero) {
  std::string s = "code\n";
  for (int i = 0; i < plus; ++i) s += "+1\n";
  for (int i = 0; i < minus; ++i) s += "-1\n";
  for (int i = 0; i < zero; ++i) s += "0\n";
  return s;
}

}  // namespace

TEST(EstimateCommand, ClassicalOnly) {
  const auto r = invoke({"estimate", "--n1", "900", "--n2", "800", "--m", "720", "--json"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["dse"]["n_hat"].get<double>(), 1000.0);
  EXPECT_FALSE(j.contains("naive_corrected"));
}

TEST(EstimateCommand, WithRematchCodes) {
  TempDir dir;
  const auto codes = dir.file("codes.csv", codes_csv(1, 0, 89));
  const auto r = invoke({"estimate", "--n1", "900", "--n2", "800", "--m", "710", "--rematch",
                         codes.string(), "--json"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["rematch"]["nu_hat"].get<double>(), 10.0);
  EXPECT_EQ(j["rematch"]["n_r"].get<int>(), 90);
  EXPECT_DOUBLE_EQ(j["naive_corrected"]["n_hat"].get<double>(), 1000.0);
  // s^2 = (1 - 1/90)/89 = 1/90; sigma^2 = 900^2 * 0.9/90 * (1/90) = 90.
  const double expected = 1000 * 0.1 * 0.2 / 0.72 + 90.0 / (0.72 * 0.72);
  EXPECT_NEAR(j["naive_corrected"]["variance"].get<double>(), expected, 1e-9);
  EXPECT_NEAR(j["naive_corrected"]["rse"].get<double>(), std::sqrt(expected) / 1000, 1e-12);
}

TEST(EstimateCommand, DingFienberg) {
  const auto r = invoke({"estimate", "--n1", "900", "--n2", "800", "--m", "720", "--alpha", "1",
                         "--beta", "0", "--json"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_DOUBLE_EQ(nlohmann::json::parse(r.out)["ding_fienberg"]["n_hat"].get<double>(), 1000.0);
}

TEST(EstimateCommand, TextOutput) {
  const auto r = invoke({"estimate", "--n1", "5", "--n2", "3", "--m", "2", "--floor"});
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("N = 7"), std::string::npos) << r.out;
}

TEST(EstimateCommand, ZeroMatchesFails) {
  const auto r = invoke({"estimate", "--n1", "900", "--n2", "800", "--m", "0"});
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.err.find("ZeroMatches"), std::string::npos);
}

TEST(EstimateCommand, BadCodesFile) {
  TempDir dir;
  const auto codes = dir.file("codes.csv", "1\n0\n2\n");
  const auto r = invoke({"estimate", "--n1", "900", "--n2", "800", "--m", "720", "--rematch",
                         codes.string()});
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST(PlanCommand, NoErrors) {
  const auto r = invoke({"plan", "--n1", "900", "--p1", "0.9", "--p2", "0.8", "--N", "1000",
                         "--fnr", "0", "--fpr", "0", "--target-rse", "0.01"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("n_r = 2\n"), std::string::npos) << r.out;
}

TEST(PlanCommand, RowOneTarget) {
  const auto r = invoke({"plan", "--n1", "900", "--p1", "0.9", "--p2", "0.8", "--N", "1000",
                         "--fnr", "0.02", "--fpr", "0.05", "--target-rse", "0.0133"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("n_r = 209\n"), std::string::npos) << r.out;
}

TEST(PlanCommand, Infeasible) {
  const auto r = invoke({"plan", "--n1", "900", "--p1", "0.9", "--p2", "0.8", "--N", "1000",
                         "--fnr", "0.02", "--fpr", "0.05", "--target-rse", "0.001"});
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.err.find("Infeasible"), std::string::npos);
  EXPECT_NE(r.out.find("minimum_rse = "), std::string::npos);
}

TEST(ScenarioFile, ParsesBundledGrid) {
  const auto rows = read_scenarios(fs::path(DSELINK_SCENARIO_DIR) / "table1.csv");
  ASSERT_EQ(rows.size(), 12u);
  EXPECT_EQ(rows[0].p1, 0.9);
  EXPECT_EQ(rows[11].f, 0.1);
  EXPECT_FALSE(rows[0].iterations.has_value());
}

TEST(ScenarioFile, RowOverridesWin) {
  std::istringstream in("p1,p2,fnr,fpr,f,iterations,seed\n0.9,0.8,0,0,0.2,50,\n0.8,0.7,0,0,0.1,,9\n");
  const auto configs = resolve(parse_scenarios(in), {1000, 300, 4});
  EXPECT_EQ(configs[0].iterations, 50);
  EXPECT_EQ(configs[0].seed, 4u);
  EXPECT_EQ(configs[1].iterations, 300);
  EXPECT_EQ(configs[1].seed, 9u);
}

TEST(ScenarioFile, MalformedRowNamesLine) {
  std::istringstream in("p1,p2,fnr,fpr,f\n0.9,0.8,0,0,0.2\n0.9,abc,0,0,0.2\n");
  try {
    parse_scenarios(in);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  std::istringstream missing("p1,p2,fnr,f\n0.9,0.8,0,0.2\n");
  EXPECT_THROW(parse_scenarios(missing), Error);
  std::istringstream range("p1,p2,fnr,fpr,f\n0.9,0.8,0,0,1.5\n");
  EXPECT_THROW(resolve(parse_scenarios(range), {}), Error);
}

TEST(SimulateCommand, MalformedFileLeavesNoOutput) {
  TempDir dir;
  const auto bad = dir.file("bad.csv", "p1,p2,fnr,fpr,f\n0.9,0.8,0,0,0.2\n0.9,0.8,0,0\n");
  const auto out = dir / "out.csv";
  const auto r = invoke({"simulate", bad.string(), "--seed", "1", "--iterations", "10",
                         "--output", out.string()});
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
  EXPECT_FALSE(fs::exists(out));
}

TEST(SimulateCommand, SingleIterationRendersNA) {
  TempDir dir;
  const auto file = dir.file("one.csv", "p1,p2,fnr,fpr,f\n0.9,0.8,0.02,0.05,0.2\n");
  const auto r = invoke({"simulate", file.string(), "--seed", "5", "--iterations", "1",
                         "--threads", "1"});
  ASSERT_EQ(r.status, 0) << r.err;
  std::istringstream in(r.out);
  const auto rows = parse_table_csv(in);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_TRUE(std::isnan(rows[0].erse_naive));
  EXPECT_FALSE(std::isnan(rows[0].arse_naive));
  EXPECT_NE(r.out.find(",NA,"), std::string::npos);
}

TEST(SimulateCommand, SeedPrintedInHeader) {
  TempDir dir;
  const auto file = dir.file("one.csv", "p1,p2,fnr,fpr,f\n0.9,0.8,0.02,0.05,0.2\n");
  const auto fixed = invoke({"simulate", file.string(), "--seed", "77", "--iterations", "5"});
  EXPECT_EQ(fixed.out.rfind("# seed=77\n", 0), 0u) << fixed.out;
  const auto random = invoke({"simulate", file.string(), "--iterations", "5"});
  ASSERT_EQ(random.status, 0);
  EXPECT_EQ(random.out.rfind("# seed=", 0), 0u);
}

TEST(SimulateCommand, MarkdownLayout) {
  TempDir dir;
  const auto file = dir.file("one.csv", "p1,p2,fnr,fpr,f\n0.9,0.8,0.02,0.05,0.2\n");
  const auto r = invoke({"simulate", file.string(), "--seed", "3", "--iterations", "20",
                         "--format", "markdown"});
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("| p1 | p2 | fnr | fpr | f | erb_dse |"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("| 0.9 | 0.8 | 0.02 | 0.05 | 0.2 |"), std::string::npos);
}

TEST(SimulateCommand, ThreadsFromEnvironmentDoesNotChangeOutput) {
  TempDir dir;
  const auto file = dir.file("two.csv", "p1,p2,fnr,fpr,f\n0.9,0.8,0.02,0.05,0.2\n0.8,0.7,0.05,0.08,0.1\n");
  const auto one = invoke({"simulate", file.string(), "--seed", "8", "--iterations", "300",
                           "--threads", "1", "--precision", "full"});
  ::setenv("DSE_LINK_THREADS", "4", 1);
  const auto env = invoke({"simulate", file.string(), "--seed", "8", "--iterations", "300",
                           "--precision", "full"});
  ::unsetenv("DSE_LINK_THREADS");
  ASSERT_EQ(one.status, 0);
  EXPECT_EQ(one.out, env.out);
}

TEST(OutputTable, CsvRoundTrip) {
  std::vector<OutputRow> rows;
  for (int i = 0; i < 5; ++i) {
    OutputRow r;
    r.p1 = 0.9 - 0.01 * i;
    r.p2 = 0.7;
    r.fnr = 0.02;
    r.fpr = 0.05 + i;
    r.f = 0.1;
    r.erb_dse = 0.0123456789 * i;
    r.erb_dse_err = 1.0 / 3.0;
    r.erb_naive = std::sqrt(2.0);
    r.erse_dse = i == 2 ? std::nan("") : 0.53;
    r.erse_dse_err = 1e-7;
    r.erse_naive = 2.54;
    r.arse_naive = 2.49 + i;
    r.exclusions = i;
    if (i % 2) r.extra = OutputRow::Extra{1000, 10000, 42, 1000.5, 1007.3, 1000.01, 2.5};
    rows.push_back(r);
  }
  // Verbose and plain rows cannot share a table.
  for (auto& r : rows) r.extra.reset();
  for (const bool verbose : {false, true}) {
    if (verbose) {
      for (auto& r : rows) r.extra = OutputRow::Extra{1000, 10000, 42, 1000.5, 1007.3, 1000.01, 2.5};
    }
    std::ostringstream out;
    write_table(out, rows, Format::Csv, {0, true}, "seed=42");
    std::istringstream in(out.str());
    const auto back = parse_table_csv(in);
    ASSERT_EQ(back.size(), rows.size());
    std::ostringstream again;
    write_table(again, back, Format::Csv, {0, true}, "seed=42");
    EXPECT_EQ(again.str(), out.str());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      EXPECT_EQ(back[i].erb_dse, rows[i].erb_dse);
      EXPECT_EQ(back[i].erb_naive, rows[i].erb_naive);
      EXPECT_EQ(back[i].exclusions, rows[i].exclusions);
      EXPECT_EQ(std::isnan(back[i].erse_dse), std::isnan(rows[i].erse_dse));
    }
  }
}

TEST(OutputTable, TwoDecimalRendering) {
  OutputRow r;
  r.erb_naive = 0.034999;
  r.erse_naive = 1.335;
  std::ostringstream out;
  write_table(out, {r}, Format::Csv, {2, false});
  std::istringstream in(out.str());
  const auto back = parse_table_csv(in);
  EXPECT_DOUBLE_EQ(back[0].erb_naive, 0.03);
  std::ostringstream again;
  write_table(again, back, Format::Csv, {2, false});
  EXPECT_EQ(again.str(), out.str());
}

TEST(Cli, HelpAndUnknownCommand) {
  EXPECT_EQ(invoke({"simulate", "--help"}).status, 0);
  EXPECT_NE(invoke({"bogus"}).status, 0);
  EXPECT_NE(invoke({}).status, 0);
}
