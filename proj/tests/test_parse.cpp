#include <doctest.h>

#include "zhuforge/parse.hpp"
#include "zhuforge/presentation.hpp"

using namespace zhuforge;

TEST_CASE("elements") {
  Voa heis(builtin_presentation("heisenberg"));
  CHECK(parse_element(heis, "vac") == FockVector::vacuum());
  CHECK(parse_element(heis, "1/2 a[-1]a[-1]vac") == heis.omega());
  CHECK(parse_element(heis, " - a[-2]vac+ 2 a[-1]vac - a[-1]vac") ==
        heis.generator_state(0) - heis.apply_generator_mode(0, -2, FockVector::vacuum()));
  // Out-of-order modes are normal ordered.
  CHECK(parse_element(heis, "a[-1]a[-2]vac") == parse_element(heis, "a[-2]a[-1]vac"));
  CHECK(parse_element(heis, "a[1]a[-1]vac") == FockVector::vacuum());
}

TEST_CASE("element errors carry a position") {
  Voa heis(builtin_presentation("heisenberg"));
  try {
    (void)parse_element(heis, "a[-1]L[-2]vac");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
    CHECK(std::string(e.what()).find("unknown generator L") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_element(heis, "a[-1]"), ParseError);
  CHECK_THROWS_AS(parse_element(heis, "a[x]vac"), ParseError);
  CHECK_THROWS_AS(parse_element(heis, "vac vac"), ParseError);
  CHECK_THROWS_AS(parse_element(heis, "1/0 vac"), ParseError);
}

TEST_CASE("enveloping-algebra expressions") {
  Voa heis(builtin_presentation("heisenberg"));
  MonoId a = heis.generator_state(0).begin()->first;
  UEAExpression two = parse_uea(heis, "J[0](a[-1]vac)J[0](a[-1]vac)");
  CHECK(two == UEAExpression::word(Word{Factor{a, 0}, Factor{a, 0}}));
  UEAExpression shifted = parse_uea(heis, "J[-2](a[-1]vac)J[2](a[-1]vac)");
  REQUIRE(shifted.size() == 1);
  CHECK(shifted.terms().begin()->first == Word{Factor{a, -2}, Factor{a, 2}});
  CHECK(shifted.homogeneous_of_degree(0));
  CHECK(parse_uea(heis, "J[0](vac)") == UEAExpression::word({}));
  CHECK(parse_uea(heis, "J[3](vac)").is_zero());
  CHECK_THROWS_AS(parse_uea(heis, "J[0](a[-1]vac) +"), ParseError);
  CHECK_THROWS_AS(parse_uea(heis, "K[0](vac)"), ParseError);
}

TEST_CASE("printing and parsing round trip") {
  Voa vir(builtin_presentation("virasoro", Rational(1, 2)));
  for (const char* text : {"L[-2]vac", "-3/4 L[-4]vac + L[-2]L[-2]vac", "vac - L[-3]vac"}) {
    FockVector v = parse_element(vir, text);
    CHECK(parse_element(vir, vir.to_string(v)) == v);
  }
  UEAExpression e = parse_uea(vir, "2 J[-1](L[-2]vac)J[1](L[-3]vac) - J[0](L[-2]vac + 1/2 vac)");
  CHECK(parse_uea(vir, to_string(vir, e)) == e);
}
