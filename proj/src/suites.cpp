#include "zhuforge/suites.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "zhuforge/reduction.hpp"
#include "zhuforge/sampling.hpp"
#include "zhuforge/uea.hpp"
#include "zhuforge/zhu.hpp"

namespace zhuforge {

namespace {

json range_json(IntRange r) { return json::array({r.lo, r.hi}); }

json voa_params(const Voa& voa) {
  return {{"voa", voa.name()}, {"central_charge", voa.central_charge().to_string()}};
}

MonoId generator_id(const Voa& voa) {
  FockVector g = voa.generator_state(0);
  return g.begin()->first;
}

}  // namespace

ReportDocument appendix_suite(const Voa& voa, const AppendixPlan& plan) {
  ReportDocument report;
  report.config = voa_params(voa);

  // The residual is symbolic in u and v; two distinct basis elements suffice.
  const MonoId u = generator_id(voa);
  const MonoId v = voa.registry().basis(u.weight() + 1).front();
  json grid = voa_params(voa);
  grid["s"] = range_json(plan.s);
  grid["t"] = range_json(plan.t);
  grid["N"] = range_json(plan.N);
  grid["word_bound"] = plan.word_bound;
  report.add(run_check("appendix.lemma_residual", grid, [&](CheckRecord& rec) {
    for (int s = plan.s.lo; s <= plan.s.hi; ++s)
      for (int t = plan.t.lo; t <= plan.t.hi; ++t)
        for (int N = std::max(plan.N.lo, 0); N <= plan.N.hi; ++N) {
          if (N + s < 0) continue;
          for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
            UEAExpression r = lemma_a1_residual(voa, s, t, N, a, b, plan.word_bound);
            rec.check(r.is_zero(), [&] {
              return json{{"s", s}, {"t", t}, {"N", N}, {"u", voa.registry().to_string(a)},
                          {"v", voa.registry().to_string(b)}, {"residual", to_string(voa, r)}};
            });
          }
        }
  }));

  json sampled = voa_params(voa);
  sampled["seed"] = plan.seed;
  sampled["samples"] = plan.samples;
  sampled["cutoff"] = plan.cutoff;
  sampled["arg_weight"] = plan.arg_weight;
  report.add(run_check("appendix.corollary_operator", sampled, [&](CheckRecord& rec) {
    Sampler rng(plan.seed);
    const std::vector<MonoId> args = voa.basis_up_to(plan.arg_weight);
    const std::vector<MonoId> xs = voa.basis_up_to(plan.cutoff);
    json tuples = json::array();
    for (int k = 0; k < plan.samples; ++k) {
      const int s = rng.uniform(plan.s.lo, plan.s.hi);
      const int t = rng.uniform(plan.t.lo, plan.t.hi);
      const int N = rng.uniform(std::max(0, -s), std::max(0, -s) + plan.N.hi - std::max(plan.N.lo, 0));
      const MonoId a = rng.pick(args);
      const MonoId b = rng.pick(args);
      json tuple = {{"s", s}, {"t", t}, {"N", N}, {"u", voa.registry().to_string(a)}, {"v", voa.registry().to_string(b)}};
      const UEAExpression lhs = UEAExpression::word(Word{Factor{a, -s}, Factor{b, t}});
      const UEAExpression rhs = corollary_a2(voa, s, t, N, a, b, plan.cutoff).rhs();
      for (MonoId x : xs) {
        FockVector l = evaluate_on(voa, lhs, FockVector(x), plan.cutoff);
        FockVector r = evaluate_on(voa, rhs, FockVector(x), plan.cutoff);
        rec.check(l == r, [&] {
          json w = tuple;
          w["x"] = voa.registry().to_string(x);
          w["lhs"] = voa.to_string(l);
          w["rhs"] = voa.to_string(r);
          return w;
        });
      }
      tuples.push_back(std::move(tuple));
    }
    rec.data = {{"tuples", std::move(tuples)}};
  }));
  return report;
}

ReportDocument ideal_direction_suite(const Voa& voa, int level, int pair_weight, int right_bound) {
  const int n = level;
  if (n < 0) throw std::invalid_argument("level must be >= 0");
  if (right_bound < n + 1) throw std::invalid_argument("right bound must be at least level + 1");
  ReportDocument report;
  report.config = voa_params(voa);
  report.config["level"] = n;
  report.config["pair_weight"] = pair_weight;
  report.config["right_bound"] = right_bound;
  report.add(run_check("filtration.ideal_direction", report.config, [&](CheckRecord& rec) {
    std::size_t words = 0;
    const std::vector<MonoId> basis = voa.basis_up_to(pair_weight);
    for (MonoId u : basis)
      for (MonoId v : basis) {
        UEAExpression e = j2_expand(voa, FockVector(u), FockVector(v), n + 1, n + 1, -2 * n - 2, right_bound);
        std::optional<Word> missing;
        for (const auto& [w, c] : e.terms()) {
          ++words;
          if (!missing && !find_witness(w, -(n + 1))) missing = w;
        }
        const bool ok = e.homogeneous_of_degree(0) && e.tail_bound() == right_bound && !missing;
        rec.check(ok, [&] {
          json w = {{"u", voa.registry().to_string(u)}, {"v", voa.registry().to_string(v)}};
          if (missing) w["word"] = to_string(voa, *missing);
          return w;
        });
      }
    rec.data = {{"words", words}};
  }));
  return report;
}

ReportDocument word_reduction_suite(const Voa& voa, const WordPlan& plan) {
  struct Sample {
    Word word;
    int level;
    ReductionResult right;
    FockVector left;
  };

  Sampler rng(plan.seed);
  const std::vector<MonoId> args = voa.basis_up_to(plan.arg_weight);
  const int r = plan.shift_radius;
  std::vector<Sample> samples;
  for (int i = 0; i < plan.count; ++i) {
    const int len = rng.uniform(1, plan.max_length);
    Word w;
    for (;;) {
      w.clear();
      int sum = 0;
      for (int k = 0; k + 1 < len; ++k) {
        const int s = rng.uniform(-r, r);
        sum += s;
        w.push_back(Factor{rng.pick(args), s});
      }
      if (-sum < -r || -sum > r) continue;
      w.push_back(Factor{rng.pick(args), -sum});
      break;
    }
    const int level = 1 + i % 2;
    ReductionResult right = reduce_word(voa, w, level, PairOrder::rightmost);
    FockVector left = reduce_word(voa, w, level, PairOrder::leftmost).value;
    samples.push_back(Sample{std::move(w), level, std::move(right), std::move(left)});
  }

  ReportDocument report;
  report.config = voa_params(voa);
  report.config["seed"] = plan.seed;
  report.config["count"] = plan.count;
  report.config["max_length"] = plan.max_length;
  report.config["shift_radius"] = plan.shift_radius;
  report.config["arg_weight"] = plan.arg_weight;
  auto word_json = [&](const Sample& s) { return json{{"word", to_string(voa, s.word)}, {"level", s.level}}; };

  report.add(run_check("reduction.single_mode", report.config, [&](CheckRecord& rec) {
    for (const Sample& s : samples) {
      bool ok = replay(s.right.trace) == s.right.value;
      for (const ReductionStep& step : s.right.trace.steps)
        for (const FiltrationWitness& fw : step.discarded) ok = ok && fw.suffix_degree <= -s.level;
      rec.check(ok, [&] { return word_json(s); });
    }
  }));

  json omega_params = report.config;
  omega_params["omega_cutoff"] = plan.omega_cutoff;
  report.add(run_check("reduction.semantic", omega_params, [&](CheckRecord& rec) {
    std::map<int, OmegaSubspace> omegas;
    for (const Sample& s : samples) {
      auto it = omegas.find(s.level);
      if (it == omegas.end()) it = omegas.emplace(s.level, omega_subspace(voa, s.level - 1, plan.omega_cutoff).first).first;
      const UEAExpression word = UEAExpression::word(s.word);
      const UEAExpression single = UEAExpression::mode(s.right.value, 0);
      for (const FockVector& x : it->second.basis) {
        FockVector a = evaluate_on(voa, word, x, plan.omega_cutoff);
        FockVector b = evaluate_on(voa, single, x, plan.omega_cutoff);
        rec.check(a == b, [&] {
          json w = word_json(s);
          w["x"] = voa.to_string(x);
          w["word_value"] = voa.to_string(a);
          w["reduced_value"] = voa.to_string(b);
          return w;
        });
      }
    }
    json dims = json::object();
    for (const auto& [level, om] : omegas) dims[std::to_string(level - 1)] = om.basis.size();
    rec.data = {{"omega_dims", std::move(dims)}};
  }));

  report.add(run_check("reduction.order_agreement", report.config, [&](CheckRecord& rec) {
    std::map<int, int> cutoffs;
    for (const Sample& s : samples) {
      FockVector d = s.right.value - s.left;
      int& c = cutoffs[s.level];
      if (!d.is_zero()) c = std::max(c, *d.max_weight());
    }
    json spans = json::object();
    for (const auto& [level, cutoff] : cutoffs) {
      const int n = level - 1;
      std::optional<ZhuContext> ctx;
      if (cutoff > 0) ctx = ZhuContext::build(voa, n, cutoff, 2 * level);
      for (const Sample& s : samples) {
        if (s.level != level) continue;
        FockVector d = s.right.value - s.left;
        FockVector rest = ctx ? ctx->reduce(d) : d;
        rec.check(rest.is_zero(), [&] {
          json w = word_json(s);
          w["residue"] = voa.to_string(rest);
          return w;
        });
      }
      spans[std::to_string(n)] = {{"cutoff", cutoff}, {"left_weight", 2 * level}, {"rank", ctx ? ctx->rank() : 0}};
    }
    rec.data = {{"spans", std::move(spans)}};
  }));
  return report;
}

}  // namespace zhuforge
