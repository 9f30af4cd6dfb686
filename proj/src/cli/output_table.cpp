#include "dselink/cli/output_table.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <istream>

#include "dselink/error.hpp"

namespace dselink::cli {

namespace {

constexpr std::array<const char*, 13> kColumns = {
    "p1",       "p2",       "fnr",          "fpr",        "f",          "erb_dse",   "erb_dse_err",
    "erb_naive", "erse_dse", "erse_dse_err", "erse_naive", "arse_naive", "exclusions"};

constexpr std::array<const char*, 7> kExtraColumns = {
    "N", "iterations", "seed", "mean_dse", "mean_dse_err", "mean_naive", "arse_pooled_naive"};

std::string shortest(double v) {
  if (std::isnan(v)) return "NA";
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  (void)ec;
  return std::string(buf.data(), ptr);
}

std::string metric(double v, Precision p) {
  if (std::isnan(v)) return "NA";
  if (p.exact) return shortest(v);
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                       std::chars_format::fixed, p.decimals);
  (void)ec;
  return std::string(buf.data(), ptr);
}

std::vector<std::string> cells_of(const OutputRow& r, Precision p) {
  std::vector<std::string> c = {
      shortest(r.p1),           shortest(r.p2),
      shortest(r.fnr),          shortest(r.fpr),
      shortest(r.f),            metric(r.erb_dse, p),
      metric(r.erb_dse_err, p), metric(r.erb_naive, p),
      metric(r.erse_dse, p),    metric(r.erse_dse_err, p),
      metric(r.erse_naive, p),  metric(r.arse_naive, p),
      std::to_string(r.exclusions)};
  if (r.extra) {
    const auto& e = *r.extra;
    c.push_back(std::to_string(e.population));
    c.push_back(std::to_string(e.iterations));
    c.push_back(std::to_string(e.seed));
    c.push_back(shortest(e.mean_dse));
    c.push_back(shortest(e.mean_dse_err));
    c.push_back(shortest(e.mean_naive));
    c.push_back(metric(e.arse_pooled_naive, p));
  }
  return c;
}

std::vector<std::string> header_of(bool verbose) {
  std::vector<std::string> h(kColumns.begin(), kColumns.end());
  if (verbose) h.insert(h.end(), kExtraColumns.begin(), kExtraColumns.end());
  return h;
}

void join(std::ostream& out, const std::vector<std::string>& cells, const char* sep,
          const char* open, const char* close) {
  out << open;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << sep;
    out << cells[i];
  }
  out << close << '\n';
}

double parse_double(const std::string& s, std::size_t line) {
  if (s == "NA") return std::numeric_limits<double>::quiet_NaN();
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "line " + std::to_string(line) + ": bad number '" + s + "'");
  }
  return v;
}

template <typename T>
T parse_integer(const std::string& s, std::size_t line) {
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "line " + std::to_string(line) + ": bad integer '" + s + "'");
  }
  return v;
}

}  // namespace

OutputRow make_row(const ScenarioConfig& config, const SimulationSummary& s, bool verbose) {
  OutputRow r;
  r.p1 = config.p1plus;
  r.p2 = config.pplus1;
  r.fnr = config.errors.fnr();
  r.fpr = config.errors.fpr();
  r.f = config.sampling_fraction;
  r.erb_dse = s.dse.erb_pct;
  r.erb_dse_err = s.dse_linkage_error.erb_pct;
  r.erb_naive = s.naive.erb_pct;
  r.erse_dse = s.dse.erse_pct;
  r.erse_dse_err = s.dse_linkage_error.erse_pct;
  r.erse_naive = s.naive.erse_pct;
  r.arse_naive = s.arse_pct;
  r.exclusions = s.exclusions;
  if (verbose) {
    r.extra = OutputRow::Extra{config.population, config.iterations, config.seed,
                               s.dse.mean,        s.dse_linkage_error.mean,
                               s.naive.mean,      s.arse_pooled_pct};
  }
  return r;
}

void write_table(std::ostream& out, const std::vector<OutputRow>& rows, Format format,
                 Precision precision, const std::string& seed_note) {
  const bool verbose = !rows.empty() && rows.front().extra.has_value();
  const auto header = header_of(verbose);
  if (format == Format::Csv) {
    if (!seed_note.empty()) out << "# " << seed_note << '\n';
    join(out, header, ",", "", "");
    for (const auto& r : rows) join(out, cells_of(r, precision), ",", "", "");
    return;
  }
  if (!seed_note.empty()) out << seed_note << "\n\n";
  join(out, header, " | ", "| ", " |");
  std::vector<std::string> rule(header.size(), "---:");
  join(out, rule, " | ", "| ", " |");
  for (const auto& r : rows) join(out, cells_of(r, precision), " | ", "| ", " |");
}

std::vector<OutputRow> parse_table_csv(std::istream& in) {
  std::vector<OutputRow> rows;
  std::string line;
  std::size_t line_no = 0;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (width == 0) {
      if (cells != header_of(false) && cells != header_of(true)) {
        throw Error(ErrorKind::InvalidArgument, "unrecognised table header");
      }
      width = cells.size();
      continue;
    }
    if (cells.size() != width) {
      throw Error(ErrorKind::InvalidArgument,
                  "line " + std::to_string(line_no) + ": wrong field count");
    }
    OutputRow r;
    double* metrics[] = {&r.p1,           &r.p2,       &r.fnr,         &r.fpr,
                         &r.f,            &r.erb_dse,  &r.erb_dse_err, &r.erb_naive,
                         &r.erse_dse,     &r.erse_dse_err, &r.erse_naive, &r.arse_naive};
    for (std::size_t i = 0; i < 12; ++i) *metrics[i] = parse_double(cells[i], line_no);
    r.exclusions = parse_integer<Count>(cells[12], line_no);
    if (width > kColumns.size()) {
      OutputRow::Extra e;
      e.population = parse_integer<Count>(cells[13], line_no);
      e.iterations = parse_integer<Count>(cells[14], line_no);
      e.seed = parse_integer<std::uint64_t>(cells[15], line_no);
      e.mean_dse = parse_double(cells[16], line_no);
      e.mean_dse_err = parse_double(cells[17], line_no);
      e.mean_naive = parse_double(cells[18], line_no);
      e.arse_pooled_naive = parse_double(cells[19], line_no);
      r.extra = e;
    }
    rows.push_back(r);
  }
  return rows;
}

}  // namespace dselink::cli
