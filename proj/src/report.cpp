#include "zhuforge/report.hpp"

#include <algorithm>
#include <chrono>

namespace zhuforge {

namespace {

long long now_ns() {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

}  // namespace

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "unknown";
}

void CheckRecord::record(bool ok, const json& w) {
  ++instances;
  if (ok) return;
  ++failures;
  if (witness.size() < kMaxWitnesses) witness.push_back(w);
}

void CheckRecord::finish() {
  if (failures > 0) {
    status = CheckStatus::fail;
  } else if (instances == 0 && status != CheckStatus::fail) {
    status = CheckStatus::skipped;
  } else {
    status = CheckStatus::pass;
  }
}

void ReportDocument::merge(const ReportDocument& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::size_t ReportDocument::count(CheckStatus s) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const auto& c) { return c.status == s; }));
}

const CheckRecord* ReportDocument::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

json ReportDocument::to_json(bool include_timings) const {
  std::vector<const CheckRecord*> order;
  for (const auto& c : checks) order.push_back(&c);
  std::stable_sort(order.begin(), order.end(), [](const CheckRecord* a, const CheckRecord* b) {
    if (a->name != b->name) return a->name < b->name;
    return a->parameters.dump() < b->parameters.dump();
  });
  json checks_json = json::array();
  for (const auto* c : order) {
    json j = {{"name", c->name},
              {"parameters", c->parameters},
              {"status", to_string(c->status)},
              {"instances", c->instances},
              {"failures", c->failures},
              {"witness", c->witness}};
    if (!c->data.empty()) j["data"] = c->data;
    if (include_timings) j["wall_ms"] = c->wall_ms;
    checks_json.push_back(std::move(j));
  }
  return json{{"schema", kReportSchema},
              {"tool_version", kToolVersion},
              {"config", config},
              {"checks", checks_json},
              {"summary",
               {{"pass", count(CheckStatus::pass)},
                {"fail", count(CheckStatus::fail)},
                {"skipped", count(CheckStatus::skipped)}}}};
}

std::string ReportDocument::serialize(bool include_timings) const { return to_json(include_timings).dump(2) + "\n"; }

ScopedTimer::ScopedTimer(double& out) : out_(out), start_ns_(now_ns()) {}

ScopedTimer::~ScopedTimer() { out_ = static_cast<double>(now_ns() - start_ns_) / 1e6; }

}  // namespace zhuforge
