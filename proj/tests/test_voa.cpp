#include <doctest.h>

#include <vector>

#include "zhuforge/axioms.hpp"
#include "zhuforge/combinatorics.hpp"
#include "zhuforge/parse.hpp"
#include "zhuforge/presentation.hpp"
#include "zhuforge/voa.hpp"

using namespace zhuforge;

namespace {

// Partitions of w into parts >= least, counted by recursion on the largest part.
long partitions(int w, int least, int largest) {
  if (w == 0) return 1;
  long n = 0;
  for (int p = least; p <= std::min(w, largest); ++p) n += partitions(w - p, least, p);
  return n;
}

}  // namespace

TEST_CASE("central element of the built-in presentations") {
  Voa heis(builtin_presentation("heisenberg"));
  CHECK(heis.mode_action(heis.omega(), 3, heis.omega()) == Rational(1, 2) * FockVector::vacuum());
  Voa vir(builtin_presentation("virasoro", Rational(1, 2)));
  CHECK(vir.mode_action(vir.omega(), 3, vir.omega()) == Rational(1, 4) * FockVector::vacuum());
  Voa vir0(builtin_presentation("virasoro", Rational(0)));
  CHECK(vir0.mode_action(vir0.omega(), 3, vir0.omega()).is_zero());
  CHECK_THROWS_AS(builtin_presentation("lattice"), std::invalid_argument);
}

TEST_CASE("graded dimensions are partition counts") {
  Voa heis(builtin_presentation("heisenberg"));
  Voa vir(builtin_presentation("virasoro", Rational(1, 2)));
  CHECK(heis.registry().dim(3) == 3);
  CHECK(vir.registry().dim(1) == 0);
  CHECK(heis.basis_up_to(0) == std::vector<MonoId>{MonoId{}});
  for (int w = 0; w <= 12; ++w) {
    CHECK(heis.registry().dim(w) == static_cast<std::size_t>(partitions(w, 1, w)));
    CHECK(vir.registry().dim(w) == static_cast<std::size_t>(partitions(w, 2, w)));
  }
}

TEST_CASE("generator modes") {
  Voa heis(builtin_presentation("heisenberg"));
  FockVector a = heis.generator_state(0);
  CHECK(heis.apply_generator_mode(0, 1, a) == FockVector::vacuum());
  for (MonoId x : heis.basis_up_to(4)) CHECK(heis.apply_generator_mode(0, 0, FockVector(x)).is_zero());
  Voa vir(builtin_presentation("virasoro", Rational(1, 2)));
  FockVector w = vir.generator_state(0);
  CHECK(vir.apply_generator_mode(0, 2, w) == Rational(1, 4) * FockVector::vacuum());
  // L[-1] kills the vacuum and L[-3] L[-2] reorders to L[-3]L[-2]vac as is.
  CHECK(vir.apply_generator_mode(0, -1, FockVector::vacuum()).is_zero());
  CHECK(vir.apply_generator_mode(0, -1, w) == parse_element(vir, "L[-3]vac"));
}

TEST_CASE("vertex operator modes") {
  Voa heis(builtin_presentation("heisenberg"));
  FockVector a = heis.generator_state(0);
  for (MonoId x : heis.basis_up_to(4)) {
    FockVector v(x);
    CHECK(heis.mode_action(FockVector::vacuum(), -1, v) == v);
    CHECK(heis.mode_action(heis.omega(), 1, v) == Rational(x.weight()) * v);
  }
  CHECK(heis.mode_action(a, 1, a) == FockVector::vacuum());
  CHECK(heis.mode_action(a, 0, a).is_zero());
  CHECK(heis.mode_action(a, -1, a) == parse_element(heis, "a[-1]a[-1]vac"));

  Voa vir(builtin_presentation("virasoro", Rational(-2)));
  for (MonoId x : vir.basis_up_to(6))
    CHECK(vir.mode_action(vir.omega(), 1, FockVector(x)) == Rational(x.weight()) * FockVector(x));
}

TEST_CASE("commutator formula on composite states") {
  // [u_m, v_n] = Σ_i C(m,i) (u_i v)_{m+n-i} with u, v composite.
  Voa vir(builtin_presentation("virasoro", Rational(26)));
  FockVector u = parse_element(vir, "L[-3]vac");
  FockVector v = parse_element(vir, "L[-2]L[-2]vac");
  for (MonoId xi : vir.basis_up_to(5)) {
    FockVector x(xi);
    for (int m = -2; m <= 3; ++m)
      for (int n = -2; n <= 3; ++n) {
        FockVector lhs = vir.mode_action(u, m, vir.mode_action(v, n, x)) - vir.mode_action(v, n, vir.mode_action(u, m, x));
        FockVector rhs;
        for (int i = 0; i <= 12; ++i)
          rhs.add_scaled(vir.mode_action(vir.mode_action(u, i, v), m + n - i, x), binomial(m, i));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("truncation index") {
  Voa heis(builtin_presentation("heisenberg"));
  FockVector a = heis.generator_state(0);
  CHECK(heis.truncation_index(a, a) == 2);
  CHECK(heis.truncation_index(FockVector::vacuum(), a) == 0);
}

TEST_CASE("axiom suite passes on the built-in presentations") {
  Voa heis(builtin_presentation("heisenberg"));
  ReportDocument r = axiom_suite(heis, 4, SamplingPlan{3, 2});
  CHECK(r.all_passed());
  CHECK(r.count(CheckStatus::pass) == r.checks.size());
  Voa vir(builtin_presentation("virasoro", Rational(1, 2)));
  CHECK(axiom_suite(vir, 4, SamplingPlan{3, 2}).all_passed());
}

TEST_CASE("dropping the central term is caught by the bracket check") {
  Voa bad(drop_central_terms(builtin_presentation("virasoro", Rational(1, 2))));
  ReportDocument r = axiom_suite(bad, 4, SamplingPlan{2, 3});
  const CheckRecord* rec = r.find("virasoro_bracket");
  REQUIRE(rec != nullptr);
  CHECK(rec->status == CheckStatus::fail);
  bool found = false;
  for (const auto& w : rec->witness) found = found || (w["m"] == 2 && w["n"] == -2);
  CHECK(found);
}
