#include "zhuforge/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "zhuforge/axioms.hpp"
#include "zhuforge/presentation.hpp"
#include "zhuforge/reduction.hpp"

namespace zhuforge {

namespace {

int to_int(std::string_view text, std::string_view what) {
  int v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty())
    throw ConfigError("bad " + std::string(what) + " '" + std::string(text) + "'");
  return v;
}

bool ends_with_csv(const std::string& path) { return path.size() >= 4 && path.ends_with(".csv"); }

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

ReportDocument dims_report(const DimensionTable& table) {
  ReportDocument r;
  r.add(run_check("dims." + table.kind, table.parameters, [&](CheckRecord& rec) {
    for (const auto& [w, d] : table.rows) rec.check(d >= 0, [&] { return json{{"index", w}, {"dim", d}}; });
    rec.data = table.to_json();
  }));
  return r;
}

}  // namespace

IntRange parse_range(std::string_view text) {
  auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    int v = to_int(text, "range");
    return {v, v};
  }
  IntRange r{to_int(text.substr(0, dots), "range start"), to_int(text.substr(dots + 2), "range end")};
  if (r.lo > r.hi) throw ConfigError("empty range '" + std::string(text) + "'");
  return r;
}

void RunConfig::validate() const {
  if (voa != "heisenberg" && voa != "virasoro")
    throw ConfigError("unknown VOA '" + voa + "' (expected heisenberg or virasoro)");
  if (level < 0) throw ConfigError("level must be >= 0");
  if (cutoff < 0) throw ConfigError("cutoff must be >= 0");
  if (pair_weight < 0 || index_radius < 0) throw ConfigError("sampling bounds must be >= 0");
  if (words < 0 || appendix.samples < 0) throw ConfigError("sample counts must be >= 0");
  if (appendix.word_bound < 0) throw ConfigError("word bound must be >= 0");
  if (appendix.s.lo > appendix.s.hi || appendix.t.lo > appendix.t.hi || appendix.N.lo > appendix.N.hi)
    throw ConfigError("empty appendix range");
  if (appendix.N.hi < 0) throw ConfigError("N range must reach 0 or above");
  if (dims_kind != "an" && dims_kind != "c2") throw ConfigError("dims kind must be an or c2");
  if (suites.empty()) throw ConfigError("no suite selected");
  for (const auto& s : suites)
    if (std::find(std::begin(kSuiteNames), std::end(kSuiteNames), s) == std::end(kSuiteNames))
      throw ConfigError("unknown suite '" + s + "'");
  auto selected = [&](std::string_view s) { return std::find(suites.begin(), suites.end(), s) != suites.end(); };
  if (selected("zhu") && cutoff < 1) throw ConfigError("the zhu suite needs cutoff >= 1");
}

json RunConfig::echo() const {
  return {{"voa", voa},
            {"central_charge", central_charge.to_string()},
            {"level", level},
            {"cutoff", cutoff},
            {"seed", seed},
            {"suites", suites}};
}

std::string RunOutput::render(const RunConfig& cfg) const {
  const bool csv = cfg.out.empty() ? ends_with_csv(cfg.golden) : ends_with_csv(cfg.out);
  if (table && csv) return table->to_csv();
  return report.serialize(cfg.timings);
}

RunOutput run_suite(const RunConfig& cfg) {
  cfg.validate();
  const Voa voa(builtin_presentation(cfg.voa, cfg.central_charge));
  RunOutput out;
  out.report.config = cfg.echo();
  out.report.config["central_charge"] = voa.central_charge().to_string();
  for (const std::string& suite : cfg.suites) {
    if (suite == "axioms") {
      out.report.merge(axiom_suite(voa, cfg.cutoff, SamplingPlan{cfg.pair_weight, cfg.index_radius}));
    } else if (suite == "zhu") {
      out.report.merge(zhu_structure_suite(voa, cfg.level, cfg.cutoff));
      out.report.merge(zhu_zero_identities(voa, cfg.cutoff));
      if (cfg.level >= 1) out.report.merge(inverse_system_check(voa, cfg.level, cfg.cutoff));
    } else if (suite == "appendix") {
      AppendixPlan plan = cfg.appendix;
      plan.seed = cfg.seed;
      plan.cutoff = cfg.cutoff;
      out.report.merge(appendix_suite(voa, plan));
    } else if (suite == "iso") {
      out.report.merge(homomorphism_check(voa, cfg.level, cfg.pair_weight, cfg.cutoff));
      out.report.merge(ideal_direction_suite(voa, cfg.level, cfg.pair_weight));
      if (cfg.words > 0) {
        WordPlan plan;
        plan.count = cfg.words;
        plan.seed = cfg.seed;
        plan.omega_cutoff = cfg.cutoff;
        out.report.merge(word_reduction_suite(voa, plan));
      }
    } else if (suite == "dims") {
      DimensionTable t = cfg.dims_kind == "an" ? an_dims(voa, cfg.level, cfg.cutoff) : c2_dims(voa, cfg.cutoff);
      out.report.merge(dims_report(t));
      out.table = std::move(t);
    } else if (suite == "omega") {
      out.report.merge(omega_subspace(voa, cfg.level, cfg.cutoff).second);
    }
  }
  return out;
}

GoldenResult golden_compare(const std::string& actual, const std::string& path, const std::string& regenerate_hint) {
  GoldenResult r;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    r.missing = true;
    r.message = "golden file " + path + " does not exist; create it with\n  " + regenerate_hint;
    return r;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string expected = buf.str();
  if (expected == actual) {
    r.match = true;
    r.message = "matches " + path;
    return r;
  }
  const auto a = split_lines(expected), b = split_lines(actual);
  std::size_t first = 0;
  while (first < a.size() && first < b.size() && a[first] == b[first]) ++first;
  std::size_t differing = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i)
    if (i >= a.size() || i >= b.size() || a[i] != b[i]) ++differing;
  std::ostringstream msg;
  msg << "mismatch against " << path << " (" << differing << " differing line" << (differing == 1 ? "" : "s")
      << "), first at line " << first + 1 << ":\n";
  msg << "- " << (first < a.size() ? a[first] : "<end of file>") << "\n";
  msg << "+ " << (first < b.size() ? b[first] : "<end of file>");
  if (differing == 0) msg << "\n(line endings or trailing newline differ)";
  r.message = msg.str();
  return r;
}

}  // namespace zhuforge
