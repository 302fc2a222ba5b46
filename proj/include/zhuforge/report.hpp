#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace zhuforge {

using json = nlohmann::json;

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr std::string_view kReportSchema = "zhu-forge-report/1";

enum class CheckStatus { pass, fail, skipped };

std::string_view to_string(CheckStatus s);

/// One verified identity family. Failures carry the witnesses needed to
/// replay them; large families keep only the first few witnesses.
struct CheckRecord {
  std::string name;
  json parameters = json::object();
  CheckStatus status = CheckStatus::pass;
  std::size_t instances = 0;
  std::size_t failures = 0;
  json witness = json::array();
  json data = json::object();  // check-specific payload (tables, bases, ...)
  double wall_ms = 0.0;

  static constexpr std::size_t kMaxWitnesses = 16;

  /// Counts one instance; records the witness if it failed.
  void record(bool ok, const json& w);
  /// As record(), but only builds the witness when the instance failed.
  template <class MakeWitness>
  void check(bool ok, MakeWitness&& make) {
    ++instances;
    if (ok) return;
    ++failures;
    if (witness.size() < kMaxWitnesses) witness.push_back(make());
  }
  void finish();
};

struct ReportDocument {
  json config = json::object();
  std::vector<CheckRecord> checks;

  void add(CheckRecord rec) { checks.push_back(std::move(rec)); }
  void merge(const ReportDocument& other);

  std::size_t count(CheckStatus s) const;
  bool all_passed() const { return count(CheckStatus::fail) == 0; }
  const CheckRecord* find(std::string_view name) const;

  /// Checks sorted by (name, parameters). Wall times are omitted unless asked
  /// for, so reports are byte-stable across runs.
  json to_json(bool include_timings = false) const;
  std::string serialize(bool include_timings = false) const;
};

/// Runs body(rec) on a fresh record, timing it and settling its status.
template <class Body>
CheckRecord run_check(std::string name, json parameters, Body&& body);

/// RAII wall-clock stopwatch that writes elapsed milliseconds on destruction.
class ScopedTimer {
 public:
  explicit ScopedTimer(double& out);
  ~ScopedTimer();
  ScopedTimer(const ScopedTimer&) = delete;
  ScopedTimer& operator=(const ScopedTimer&) = delete;

 private:
  double& out_;
  long long start_ns_;
};

template <class Body>
CheckRecord run_check(std::string name, json parameters, Body&& body) {
  CheckRecord rec;
  rec.name = std::move(name);
  rec.parameters = std::move(parameters);
  {
    ScopedTimer timer(rec.wall_ms);
    body(rec);
  }
  rec.finish();
  return rec;
}

}  // namespace zhuforge
