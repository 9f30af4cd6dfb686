#include "dselink/cli/scenario_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>

#include "dselink/error.hpp"

namespace dselink::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::InvalidArgument, "line " + std::to_string(line) + ": " + what);
}

template <typename T>
T parse_number(const std::string& text, std::size_t line, const std::string& column) {
  T value{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    fail(line, "cannot parse " + column + " value '" + text + "'");
  }
  return value;
}

bool is_blank_or_comment(const std::string& line) {
  const std::string t = trim(line);
  return t.empty() || t.front() == '#';
}

}  // namespace

std::vector<ScenarioRow> parse_scenarios(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::map<std::string, std::size_t> column;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    const auto header = split(line);
    width = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (!column.emplace(header[i], i).second) fail(line_no, "duplicate column " + header[i]);
    }
    break;
  }
  if (column.empty()) throw Error(ErrorKind::InvalidArgument, "scenario file has no header");
  for (const char* required : {"p1", "p2", "fnr", "fpr", "f"}) {
    if (!column.count(required)) {
      fail(line_no, std::string("missing required column ") + required);
    }
  }
  for (const auto& [name, index] : column) {
    (void)index;
    if (name != "p1" && name != "p2" && name != "fnr" && name != "fpr" && name != "f" &&
        name != "iterations" && name != "seed" && name != "N") {
      fail(line_no, "unknown column " + name);
    }
  }

  std::vector<ScenarioRow> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    const auto cells = split(line);
    if (cells.size() != width) {
      fail(line_no, "expected " + std::to_string(width) + " fields, got " +
                        std::to_string(cells.size()));
    }
    ScenarioRow row;
    row.line = line_no;
    auto cell = [&](const char* name) -> const std::string* {
      auto it = column.find(name);
      if (it == column.end() || cells[it->second].empty()) return nullptr;
      return &cells[it->second];
    };
    auto required = [&](const char* name) {
      const std::string* c = cell(name);
      if (c == nullptr) fail(line_no, std::string("empty ") + name);
      return parse_number<double>(*c, line_no, name);
    };
    row.p1 = required("p1");
    row.p2 = required("p2");
    row.fnr = required("fnr");
    row.fpr = required("fpr");
    row.f = required("f");
    if (const auto* c = cell("N")) row.population = parse_number<Count>(*c, line_no, "N");
    if (const auto* c = cell("iterations")) {
      row.iterations = parse_number<Count>(*c, line_no, "iterations");
    }
    if (const auto* c = cell("seed")) row.seed = parse_number<std::uint64_t>(*c, line_no, "seed");
    rows.push_back(row);
  }
  if (rows.empty()) throw Error(ErrorKind::InvalidArgument, "scenario file has no rows");
  return rows;
}

std::vector<ScenarioRow> read_scenarios(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path.string());
  return parse_scenarios(in);
}

std::vector<ScenarioConfig> resolve(const std::vector<ScenarioRow>& rows,
                                    const ScenarioDefaults& defaults) {
  std::vector<ScenarioConfig> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    try {
      ScenarioConfig c;
      c.population = row.population.value_or(defaults.population);
      c.p1plus = row.p1;
      c.pplus1 = row.p2;
      c.errors = ErrorRates(row.fnr, row.fpr);
      c.sampling_fraction = row.f;
      c.iterations = row.iterations.value_or(defaults.iterations);
      c.seed = row.seed.value_or(defaults.seed);
      c.validate();
      out.push_back(c);
    } catch (const Error& e) {
      fail(row.line, e.what());
    }
  }
  return out;
}

std::vector<RematchOutcome> parse_rematch_codes(std::istream& in) {
  std::vector<RematchOutcome> codes;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty()) continue;
    const bool numeric = t.find_first_not_of("+-0123456789") == std::string::npos;
    if (first && !numeric) {
      first = false;
      continue;
    }
    first = false;
    const int y = parse_number<int>(t, line_no, "code");
    try {
      codes.push_back(outcome_from_code(y));
    } catch (const Error& e) {
      fail(line_no, e.what());
    }
  }
  return codes;
}

std::vector<RematchOutcome> read_rematch_codes(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path.string());
  return parse_rematch_codes(in);
}

}  // namespace dselink::cli
