#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "zhuforge/cli.hpp"

using namespace zhuforge;

namespace {

std::string golden(const std::string& name) { return std::string(ZHUFORGE_GOLDEN_DIR) + "/" + name; }

RunConfig dims_config(const std::string& voa, int level, int cutoff, const std::string& kind = "an") {
  RunConfig cfg;
  cfg.voa = voa;
  cfg.level = level;
  cfg.cutoff = cutoff;
  cfg.dims_kind = kind;
  cfg.suites = {"dims"};
  cfg.out = "table.csv";
  return cfg;
}

}  // namespace

TEST_CASE("ranges") {
  CHECK(parse_range("-2..2").lo == -2);
  CHECK(parse_range("-2..2").hi == 2);
  CHECK(parse_range("3").lo == 3);
  CHECK(parse_range("3").hi == 3);
  CHECK_THROWS_AS(parse_range("2..-1"), ConfigError);
  CHECK_THROWS_AS(parse_range("a..b"), ConfigError);
  CHECK_THROWS_AS(parse_range(""), ConfigError);
}

TEST_CASE("configuration errors come before computation") {
  RunConfig cfg;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);  // no suite
  cfg.suites = {"zhu"};
  cfg.validate();
  cfg.level = -1;
  CHECK_THROWS_AS(run_suite(cfg), ConfigError);
  cfg.level = 0;
  cfg.voa = "lattice";
  CHECK_THROWS_AS(run_suite(cfg), ConfigError);
  cfg.voa = "virasoro";
  cfg.suites = {"everything"};
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.suites = {"dims"};
  cfg.dims_kind = "c3";
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("golden comparison") {
  const std::string text = "index,dim\n0,1\n1,2\n";
  const auto dir = std::filesystem::temp_directory_path();
  const std::string path = (dir / "zhuforge_golden_test.csv").string();
  {
    std::ofstream out(path, std::ios::binary);
    out << text;
  }
  GoldenResult same = golden_compare(text, path, "regen");
  CHECK(same.match);
  GoldenResult off = golden_compare("index,dim\n0,1\n1,3\n", path, "regen");
  CHECK_FALSE(off.match);
  CHECK_FALSE(off.missing);
  CHECK(off.message.find("line 3") != std::string::npos);
  CHECK(off.message.find("- 1,2") != std::string::npos);
  CHECK(off.message.find("+ 1,3") != std::string::npos);
  CHECK(off.message.find("1 differing line") != std::string::npos);
  GoldenResult gone = golden_compare(text, (dir / "zhuforge_no_such_file.csv").string(), "zhu-forge dims --out x");
  CHECK(gone.missing);
  CHECK(gone.message.find("zhu-forge dims --out x") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("dimension tables match the committed golden files") {
  struct Case {
    RunConfig cfg;
    const char* file;
  };
  RunConfig vir1 = dims_config("virasoro", 1, 6);
  RunConfig vir0 = dims_config("virasoro", 0, 6);
  RunConfig virc2 = dims_config("virasoro", 0, 6, "c2");
  const Case cases[] = {{dims_config("heisenberg", 0, 4), "an_heisenberg_n0_w4.csv"},
                        {vir1, "an_virasoro_c1-2_n1_w6.csv"},
                        {vir0, "an_virasoro_c1-2_n0_w6.csv"},
                        {dims_config("heisenberg", 0, 6, "c2"), "c2_heisenberg_w6.csv"},
                        {virc2, "c2_virasoro_c1-2_w6.csv"}};
  for (const Case& c : cases) {
    RunOutput out = run_suite(c.cfg);
    CHECK(out.passed());
    GoldenResult g = golden_compare(out.render(c.cfg), golden(c.file), "");
    INFO(g.message);
    CHECK(g.match);
  }
}

TEST_CASE("JSON reports are canonical and repeatable") {
  RunConfig cfg;
  cfg.voa = "heisenberg";
  cfg.level = 2;
  cfg.cutoff = 6;
  cfg.suites = {"omega"};
  const std::string first = run_suite(cfg).render(cfg);
  CHECK(first == run_suite(cfg).render(cfg));
  GoldenResult g = golden_compare(first, golden("omega_heisenberg_n2_w6.json"), "");
  INFO(g.message);
  CHECK(g.match);
  json j = json::parse(first);
  CHECK(j["schema"] == std::string(kReportSchema));
  CHECK(j["config"]["central_charge"] == "1");
  CHECK(j["checks"][0].count("wall_ms") == 0);
  cfg.timings = true;
  CHECK(json::parse(run_suite(cfg).render(cfg))["checks"][0].count("wall_ms") == 1);
}

TEST_CASE("appendix and iso suites through the runner") {
  RunConfig cfg;
  cfg.voa = "heisenberg";
  cfg.suites = {"appendix"};
  cfg.appendix.samples = 5;
  RunOutput out = run_suite(cfg);
  CHECK(out.passed());
  REQUIRE(out.report.find("appendix.lemma_residual") != nullptr);
  CHECK(out.report.find("appendix.lemma_residual")->instances == 220);

  cfg.suites = {"iso"};
  cfg.level = 0;
  cfg.pair_weight = 2;
  cfg.cutoff = 5;
  cfg.words = 6;
  out = run_suite(cfg);
  CHECK(out.passed());
  CHECK(out.report.find("reduction.order_agreement") != nullptr);
}
