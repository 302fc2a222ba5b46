#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zhuforge/rational.hpp"
#include "zhuforge/report.hpp"
#include "zhuforge/suites.hpp"
#include "zhuforge/zhu.hpp"

namespace zhuforge {

/// Bad flags or config values; reported before any computation (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kSuiteNames[] = {"axioms", "zhu", "appendix", "iso", "dims", "omega"};

struct RunConfig {
  std::string voa = "heisenberg";
  Rational central_charge = Rational(1, 2);  // ignored by heisenberg (c = 1)
  int level = 0;
  int cutoff = 6;
  std::uint64_t seed = 12345;
  std::vector<std::string> suites;
  std::string out;
  std::string golden;
  bool timings = false;

  int pair_weight = 4;
  int index_radius = 3;
  AppendixPlan appendix;
  int words = 20;            // iso: seeded words for the reduction checks
  std::string dims_kind = "an";

  /// Throws ConfigError.
  void validate() const;
  json echo() const;
};

/// "a..b", or a single integer "a" meaning a..a. Throws ConfigError.
IntRange parse_range(std::string_view text);

struct RunOutput {
  ReportDocument report;
  std::optional<DimensionTable> table;  // set by the dims suite

  /// CSV when the dims table goes to a .csv path (the golden path if there is
  /// no output path), canonical JSON otherwise.
  std::string render(const RunConfig& cfg) const;
  bool passed() const { return report.all_passed(); }
};

/// Validates, then runs the selected suites in order on one VOA instance.
RunOutput run_suite(const RunConfig& cfg);

struct GoldenResult {
  bool missing = false;
  bool match = false;
  std::string message;  // diff or instructions
};

/// Byte comparison of actual against the file at path. A mismatch message shows
/// the first differing line; a missing file message says how to create it.
GoldenResult golden_compare(const std::string& actual, const std::string& path, const std::string& regenerate_hint);

}  // namespace zhuforge
