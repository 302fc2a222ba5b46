// zhu-forge: exact checks for vertex operator algebras and their level-n Zhu algebras.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zhuforge/cli.hpp"
#include "zhuforge/parse.hpp"
#include "zhuforge/presentation.hpp"
#include "zhuforge/reduction.hpp"

using namespace zhuforge;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

// The same command line with --golden X replaced by --out X.
std::string regenerate_command(int argc, char** argv, const std::string& golden) {
  std::string cmd = "zhu-forge";
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--golden" || a == "--out") {
      ++i;
      continue;
    }
    if (a.starts_with("--golden=") || a.starts_with("--out=")) continue;
    cmd += " " + a;
  }
  return cmd + " --out " + golden;
}

void print_summary(const ReportDocument& r) {
  std::cerr << r.checks.size() << " checks: " << r.count(CheckStatus::pass) << " pass, " << r.count(CheckStatus::fail)
            << " fail, " << r.count(CheckStatus::skipped) << " skipped\n";
  for (const auto& c : r.checks)
    if (c.status == CheckStatus::fail) std::cerr << "FAIL " << c.name << " " << c.parameters.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for vertex operator algebras and their level-n Zhu algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file; command-line flags take precedence");

  RunConfig cfg;
  std::string central = "1/2";
  app.add_option("--voa", cfg.voa, "heisenberg or virasoro")->capture_default_str();
  app.add_option("--central-charge", central, "central charge p/q (virasoro only)")->capture_default_str();
  app.add_option("--level", cfg.level, "Zhu level n")->capture_default_str();
  app.add_option("--cutoff", cfg.cutoff, "weight cutoff W")->capture_default_str();
  app.add_option("--seed", cfg.seed, "sampling seed")->capture_default_str();
  app.add_option("--pair-weight", cfg.pair_weight, "largest weight of sampled basis pairs")->capture_default_str();
  app.add_option("--out", cfg.out, "write the report (or a .csv table) here instead of stdout");
  app.add_option("--golden", cfg.golden, "compare the output byte for byte with this file");
  app.add_flag("--timings", cfg.timings, "include wall times (the report is then not byte-stable)");

  auto* axioms = app.add_subcommand("axioms", "vertex algebra axioms on V_{<=W}");
  axioms->add_option("--index-radius", cfg.index_radius, "largest |m|, |n|, |l|")->capture_default_str();
  app.add_subcommand("zhu", "level-n product, span and ideal checks");

  auto* appendix = app.add_subcommand("appendix", "appendix identities for enveloping-algebra words");
  std::string s_range = "-2..2", t_range = "-2..2", n_range = "0..4";
  appendix->add_option("--s", s_range, "range a..b")->capture_default_str();
  appendix->add_option("--t", t_range, "range a..b")->capture_default_str();
  appendix->add_option("--N", n_range, "range a..b")->capture_default_str();
  appendix->add_option("--word-bound", cfg.appendix.word_bound, "shift window of the residual")->capture_default_str();
  appendix->add_option("--samples", cfg.appendix.samples, "seeded operator-identity tuples")->capture_default_str();

  auto* iso = app.add_subcommand("iso", "reduction of degree-zero words and the homomorphism onto A_n(V)");
  iso->add_option("--words", cfg.words, "seeded words for the general reduction checks")->capture_default_str();

  auto* dims = app.add_subcommand("dims", "dimension tables");
  dims->add_option("--kind", cfg.dims_kind, "an or c2")->capture_default_str();
  app.add_subcommand("omega", "the subspace Omega_n inside V_{<=W}");

  auto* reduce = app.add_subcommand("reduce", "reduce a degree-zero expression to a single J_0 mode");
  std::string expr, trace_path, order = "rightmost";
  int mod_level = 1;
  reduce->add_option("--expr", expr, "expression, e.g. J[0](a[-1]vac)J[0](a[-1]vac)")->required();
  reduce->add_option("--mod-level", mod_level, "work modulo U(V)_0^{-l}")->capture_default_str();
  reduce->add_option("--trace", trace_path, "write the reduction trace as JSON");
  reduce->add_option("--order", order, "rightmost or leftmost pair first")->capture_default_str();

  auto* parse = app.add_subcommand("parse", "parse and print an element or expression in canonical form");
  std::string text;
  bool as_uea = false;
  parse->add_option("text", text, "the literal")->required();
  parse->add_flag("--uea", as_uea, "parse an enveloping-algebra expression");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    cfg.central_charge = Rational::parse(central);
    cfg.appendix.s = parse_range(s_range);
    cfg.appendix.t = parse_range(t_range);
    cfg.appendix.N = parse_range(n_range);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (reduce->parsed() || parse->parsed()) {
    try {
      const Voa voa(builtin_presentation(cfg.voa, cfg.central_charge));
      if (parse->parsed()) {
        if (as_uea) std::cout << to_string(voa, parse_uea(voa, text)) << "\n";
        else std::cout << voa.to_string(parse_element(voa, text)) << "\n";
        return 0;
      }
      if (order != "rightmost" && order != "leftmost") throw ConfigError("order must be rightmost or leftmost");
      const UEAExpression e = parse_uea(voa, expr);
      const ReductionResult r =
          reduce_expression(voa, e, mod_level, order == "leftmost" ? PairOrder::leftmost : PairOrder::rightmost);
      std::cout << voa.to_string(r.value) << "\n";
      if (!trace_path.empty()) {
        json j = r.trace.to_json(voa);
        j["result"] = voa.to_string(r.value);
        if (!write_file(trace_path, j.dump(2) + "\n")) {
          std::cerr << "error: cannot write " << trace_path << "\n";
          return kExitUsage;
        }
      }
      return 0;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }

  for (auto* sub : app.get_subcommands()) cfg.suites.push_back(sub->get_name());
  RunOutput result;
  try {
    cfg.validate();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    result = run_suite(cfg);
  } catch (const WeightOverflow& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string rendered = result.render(cfg);
  if (cfg.out.empty()) {
    std::cout << rendered;
  } else if (!write_file(cfg.out, rendered)) {
    std::cerr << "error: cannot write " << cfg.out << "\n";
    return kExitUsage;
  }
  print_summary(result.report);

  int code = result.passed() ? 0 : kExitFail;
  if (!cfg.golden.empty()) {
    GoldenResult g = golden_compare(rendered, cfg.golden, regenerate_command(argc, argv, cfg.golden));
    std::cerr << g.message << "\n";
    if (g.missing) return kExitUsage;
    if (!g.match) code = kExitFail;
  }
  return code;
}
