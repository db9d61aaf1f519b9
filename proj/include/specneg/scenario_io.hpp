#pragma once

// File formats: scenario JSON in, trace JSON Lines and CSV tables out.
// All writers are byte-stable; reals are always printed with three
// fractional digits.

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "specneg/engine.hpp"
#include "specneg/scenario.hpp"

namespace specneg {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { kSyntax, kSemantic };

  ParseError(Kind kind, const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(what), kind_(kind), line_(line), column_(column) {}

  Kind kind() const { return kind_; }
  // 1-based; zero for semantic errors.
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

/// Scenario document:
///   {"pus": [[free_channels, unit_price], ...], "nbc": int,
///    "latency": {"transit": real, "pu_proc": real, "su_proc": real}?,
///    "payment_mode": "unit" | "total"?, "seed": uint?}
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);
/// Inverse of parse_scenario; every field is written explicitly.
std::string serialize_scenario(const Scenario& s);

/// "%.3f" with a fixed C locale.
std::string format_fixed3(double v);

/// One JSON object per record with keys t, from, to, perf, body in that
/// order, each line terminated by '\n'. Returns bytes written.
std::size_t write_trace(const std::vector<TraceRecord>& records, std::ostream& sink);

using CsvCell = std::variant<std::int64_t, double>;
using CsvRow = std::vector<CsvCell>;

class ArityMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integers unpadded, reals with three fractional digits, '\n' after every
/// row including the last.
std::string write_csv(const std::vector<std::string>& header, const std::vector<CsvRow>& rows);

}  // namespace specneg
