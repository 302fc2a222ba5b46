#include <doctest.h>

#include "zhuforge/parse.hpp"
#include "zhuforge/presentation.hpp"
#include "zhuforge/reduction.hpp"
#include "zhuforge/sampling.hpp"

using namespace zhuforge;

TEST_CASE("single factors and pairs") {
  Voa heis(builtin_presentation("heisenberg"));
  const auto basis = heis.basis_up_to(3);
  for (MonoId u : basis) CHECK(reduce_word(heis, Word{Factor{u, 0}}, 2).value == FockVector(u));
  MonoId a = heis.generator_state(0).begin()->first;
  ReductionResult r = reduce_word(heis, Word{Factor{a, 0}, Factor{a, 0}}, 1);
  CHECK(r.value == parse_element(heis, "a[-1]a[-1]vac"));
  REQUIRE(r.trace.steps.size() == 1);
  CHECK(r.trace.steps[0].N == 0);
  for (MonoId u : basis)
    for (MonoId v : basis)
      for (int n = 0; n <= 2; ++n)
        CHECK(reduce_word(heis, Word{Factor{u, 0}, Factor{v, 0}}, n + 1).value ==
              star_n(heis, FockVector(u), FockVector(v), n));
}

TEST_CASE("bad reduction input") {
  Voa heis(builtin_presentation("heisenberg"));
  MonoId a = heis.generator_state(0).begin()->first;
  CHECK_THROWS_AS(reduce_word(heis, Word{Factor{a, 1}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(reduce_word(heis, Word{Factor{a, 0}}, 0), std::invalid_argument);
  CHECK_THROWS_AS(reduce_expression(heis, parse_uea(heis, "J[1](a[-1]vac) + J[0](a[-1]vac)"), 1),
                  std::invalid_argument);
}

TEST_CASE("traces replay and every discarded word is witnessed") {
  Voa vir(builtin_presentation("virasoro", Rational(1, 2)));
  Sampler rng(99);
  const auto args = vir.basis_up_to(3);
  for (int k = 0; k < 30; ++k) {
    Word w{Factor{rng.pick(args), rng.uniform(-2, 2)}, Factor{rng.pick(args), rng.uniform(-2, 2)}};
    w.push_back(Factor{rng.pick(args), -(w[0].shift + w[1].shift)});
    const int level = rng.uniform(1, 3);
    for (PairOrder order : {PairOrder::rightmost, PairOrder::leftmost}) {
      ReductionResult r = reduce_word(vir, w, level, order);
      CHECK(replay(r.trace) == r.value);
      for (const ReductionStep& step : r.trace.steps) {
        CHECK(step.discarded_checked == step.discarded.size());
        for (const FiltrationWitness& fw : step.discarded) {
          CHECK(fw.suffix_degree <= -level);
          CHECK(word_degree(fw.word, fw.position) == fw.suffix_degree);
        }
      }
    }
  }
}

TEST_CASE("a tampered trace replays to a different value") {
  Voa heis(builtin_presentation("heisenberg"));
  ReductionResult r = reduce_expression(heis, parse_uea(heis, "J[1](a[-1]vac)J[-1](a[-2]vac)"), 1);
  REQUIRE_FALSE(r.trace.steps.empty());
  ReductionTrace t = r.trace;
  t.steps[0].emitted.begin()->second += Rational(1);
  CHECK(replay(t) != r.value);
}

TEST_CASE("reduced words act like their single mode on Omega") {
  Voa heis(builtin_presentation("heisenberg"));
  auto [omega, report] = omega_subspace(heis, 1, 5);
  UEAExpression e = parse_uea(heis, "J[-1](a[-1]vac)J[2](a[-2]vac)J[-1](a[-1]a[-1]vac)");
  FockVector r = reduce_expression(heis, e, 2).value;
  for (const FockVector& x : omega.basis)
    CHECK(evaluate_on(heis, e, x, 5) == evaluate_on(heis, UEAExpression::mode(r, 0), x, 5));
}

TEST_CASE("ideal witness report") {
  Voa heis(builtin_presentation("heisenberg"));
  CHECK(ideal_witness(heis, parse_uea(heis, "J[-2](a[-1]vac)J[2](a[-1]vac)"), -2).all_passed());
  CHECK_FALSE(ideal_witness(heis, parse_uea(heis, "J[0](a[-1]vac)"), -1).all_passed());
}

TEST_CASE("homomorphism checks at small weight") {
  Voa heis(builtin_presentation("heisenberg"));
  CHECK(homomorphism_check(heis, 0, 2, 5).all_passed());
  CHECK(homomorphism_check(heis, 1, 2, 5).all_passed());
  Voa vir(builtin_presentation("virasoro", Rational(1, 2)));
  CHECK(homomorphism_check(vir, 0, 2, 6).all_passed());
}
