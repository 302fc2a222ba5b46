#include <doctest.h>

#include "zhuforge/parse.hpp"
#include "zhuforge/presentation.hpp"
#include "zhuforge/zhu.hpp"

using namespace zhuforge;

TEST_CASE("level-zero products of the free boson") {
  Voa heis(builtin_presentation("heisenberg"));
  FockVector a = heis.generator_state(0);
  CHECK(circ_n(heis, a, a, 0) == parse_element(heis, "a[-2]a[-1]vac + a[-1]a[-1]vac"));
  CHECK(star_n(heis, a, a, 0) == parse_element(heis, "a[-1]a[-1]vac"));
  for (MonoId x : heis.basis_up_to(4)) {
    FockVector v(x);
    FockVector translate = heis.virasoro_mode(-1, v) + heis.virasoro_mode(0, v);
    CHECK(circ_n(heis, v, FockVector::vacuum(), 0) == translate);
    for (int n = 0; n <= 2; ++n) CHECK(star_n(heis, FockVector::vacuum(), v, n) == v);
  }
}

TEST_CASE("star of the conformal vector") {
  Voa vir(builtin_presentation("virasoro", Rational(1, 2)));
  const FockVector& w = vir.omega();
  CHECK(star_n(vir, w, w, 0) == parse_element(vir, "L[-2]L[-2]vac + 2 L[-3]vac + 2 L[-2]vac"));
  CHECK(zhu_star(vir, w, w) == star_n(vir, w, w, 0));
}

TEST_CASE("products are linear in both arguments") {
  Voa vir(builtin_presentation("virasoro", Rational(-2)));
  FockVector u = parse_element(vir, "L[-2]vac - 3 L[-3]vac");
  FockVector v = parse_element(vir, "1/2 L[-4]vac + L[-2]L[-2]vac");
  for (int n = 0; n <= 2; ++n) {
    FockVector split = star_n(vir, parse_element(vir, "L[-2]vac"), v, n) -
                       Rational(3) * star_n(vir, parse_element(vir, "L[-3]vac"), v, n);
    CHECK(star_n(vir, u, v, n) == split);
  }
}

TEST_CASE("truncated span at small cutoffs") {
  Voa heis(builtin_presentation("heisenberg"));
  ZhuContext c0 = ZhuContext::build(heis, 0, 0);
  CHECK(c0.rank() == 0);
  DimensionTable t0 = an_dims(heis, 0, 0);
  CHECK(t0.rows == std::vector<std::pair<int, long>>{{0, 1}});

  ZhuContext c4 = ZhuContext::build(heis, 0, 4);
  CHECK(c4.reduce(parse_element(heis, "a[-2]a[-1]vac")) == c4.reduce(parse_element(heis, "-a[-1]a[-1]vac")));
  CHECK(c4.reduce(FockVector::vacuum()) == FockVector::vacuum());

  Voa vir(builtin_presentation("virasoro", Rational(7)));
  ZhuContext v3 = ZhuContext::build(vir, 0, 3);
  CHECK(v3.in_span(parse_element(vir, "L[-3]vac + 2 L[-2]vac")));
  CHECK_FALSE(v3.in_span(parse_element(vir, "L[-2]vac")));
}

TEST_CASE("reduction is a well-defined projection") {
  Voa heis(builtin_presentation("heisenberg"));
  ZhuContext ctx = ZhuContext::build(heis, 1, 5);
  for (const FockVector& row : ctx.span_basis()) CHECK(ctx.reduce(row).is_zero());
  for (MonoId x : heis.basis_up_to(5)) {
    FockVector r = ctx.reduce(FockVector(x));
    CHECK(ctx.reduce(r) == r);
    for (const FockVector& row : ctx.span_basis()) CHECK(ctx.reduce(FockVector(x) + row) == r);
    CHECK(ctx.multiply(FockVector::vacuum(), FockVector(x)) == r);
  }
}

TEST_CASE("reduction above the cutoff names the component") {
  Voa heis(builtin_presentation("heisenberg"));
  ZhuContext ctx = ZhuContext::build(heis, 0, 3);
  FockVector high = parse_element(heis, "a[-4]vac + a[-1]vac");
  try {
    (void)ctx.reduce(high);
    FAIL("expected WeightOverflow");
  } catch (const WeightOverflow& e) {
    CHECK(e.component().weight() == 4);
    CHECK(std::string(e.what()).find("a[-4]vac") != std::string::npos);
  }
}

TEST_CASE("left-restricted spans lie inside the full span") {
  Voa vir(builtin_presentation("virasoro", Rational(1, 2)));
  for (int n = 0; n <= 1; ++n) {
    ZhuContext full = ZhuContext::build(vir, n, 8);
    ZhuContext part = ZhuContext::build(vir, n, 8, 2 * n + 2);
    for (const FockVector& row : part.span_basis()) CHECK(full.in_span(row));
    CHECK(part.rank() == full.rank());
  }
}

TEST_CASE("structure checks at small cutoff") {
  Voa heis(builtin_presentation("heisenberg"));
  for (int n = 0; n <= 1; ++n) CHECK(zhu_structure_suite(heis, n, 4).all_passed());
  CHECK(zhu_zero_identities(heis, 4).all_passed());
  CHECK(inverse_system_check(heis, 1, 6).all_passed());
  CHECK_THROWS_AS(inverse_system_check(heis, 0, 4), std::invalid_argument);
  Voa vir(builtin_presentation("virasoro", Rational(1, 2)));
  CHECK(inverse_system_check(vir, 1, 6).all_passed());
}

TEST_CASE("dimension tables") {
  Voa heis(builtin_presentation("heisenberg"));
  CHECK(an_dims(heis, 0, 4).rows == std::vector<std::pair<int, long>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  DimensionTable c2 = c2_dims(heis, 2);
  CHECK(c2.rows == std::vector<std::pair<int, long>>{{0, 1}, {1, 1}, {2, 1}});
  CHECK(c2.to_csv() == "index,dim\n0,1\n1,1\n2,1\n");
}

TEST_CASE("Omega subspaces of the free boson") {
  Voa heis(builtin_presentation("heisenberg"));
  auto [o0, r0] = omega_subspace(heis, 0, 6);
  CHECK(o0.basis.size() == 1);
  CHECK(o0.contains(FockVector::vacuum()));
  CHECK(o0.equals_low_weights);
  auto [o2, r2] = omega_subspace(heis, 2, 6);
  CHECK(o2.basis.size() == 1 + 1 + 2);
  CHECK(o2.equals_low_weights);
  CHECK_FALSE(o2.contains(parse_element(heis, "a[-3]vac")));
  CHECK(r2.all_passed());
  // The same answer one weight further out.
  CHECK(omega_subspace(heis, 2, 7).first.basis.size() == 4);
}

TEST_CASE("Omega_1 of the c = 1/2 Virasoro vacuum module") {
  // Observed: beyond the ground state only the weight-6 singular vector survives.
  Voa vir(builtin_presentation("virasoro", Rational(1, 2)));
  auto [om, report] = omega_subspace(vir, 1, 6);
  REQUIRE(om.basis.size() == 2);
  CHECK(om.contains(FockVector::vacuum()));
  FockVector singular =
      parse_element(vir, "-27/16 L[-6]vac - 33/8 L[-4]L[-2]vac + 93/64 L[-3]L[-3]vac + L[-2]L[-2]L[-2]vac");
  CHECK(om.contains(singular));
  for (int m = 1; m <= 3; ++m) CHECK(vir.virasoro_mode(m, singular).is_zero());
}
