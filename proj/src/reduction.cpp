#include "zhuforge/reduction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "zhuforge/combinatorics.hpp"

namespace zhuforge {

namespace {

/// Longest words first, so merged words are expanded once.
struct LongerFirst {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  }
};
using Worklist = std::map<Word, Rational, LongerFirst>;

void accumulate(Worklist& list, const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = list.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) list.erase(it);
  }
}

/// Value of the words of length <= 1 left in a finished worklist.
FockVector collect(const Worklist& list) {
  FockVector out;
  for (const auto& [w, c] : list) {
    if (w.size() > 1) throw std::logic_error("reduction left a word of length > 1");
    if (w.empty()) {
      out.add(MonoId{}, c);
    } else {
      if (w[0].shift != 0) throw std::logic_error("reduction left a single mode of nonzero degree");
      out.add(w[0].arg, c);
    }
  }
  return out;
}

Word splice(const Word& w, std::size_t p, std::initializer_list<Factor> middle) {
  Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
  out.insert(out.end(), middle);
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(p) + 2, w.end());
  return out;
}

ReductionStep expand(const Voa& voa, const Word& w, const Rational& c, int level, PairOrder order) {
  ReductionStep step;
  step.word = w;
  step.coeff = c;
  step.position = order == PairOrder::rightmost ? w.size() - 2 : 0;
  const std::size_t p = step.position;
  const Factor a = w[p], b = w[p + 1];
  const int R = -word_degree(w, p + 2);  // total shift to the right of the pair
  step.s = -a.shift;
  step.t = b.shift;
  step.N = std::max({0, level - 1 - R, level - 1 - step.t - R, -step.s});
  const int s = step.s, t = step.t, N = step.N;

  const FockVector head = corollary_a2_head_vector(voa, s, N, a.arg, b.arg);
  for (const auto& [id, coeff] : head) step.emitted.emplace(splice(w, p, {Factor{id, t - s}}), coeff);

  // The discarded tails are infinite; sample their first words and confirm the
  // suffix from p+1 is deep enough.
  std::vector<Word> samples;
  for (int k = N + 1; k <= N + 2; ++k) samples.push_back(splice(w, p, {Factor{a.arg, -k - s}, Factor{b.arg, k + t}}));
  for (int i = 0; i <= 1; ++i)
    samples.push_back(splice(w, p, {Factor{b.arg, t - N - s - 1 - i}, Factor{a.arg, N + 1 + i}}));
  for (Word& sw : samples) {
    const int d = word_degree(sw, p + 1);
    if (d > -level) throw std::logic_error("discarded reduction term is not in the filtration ideal");
    ++step.discarded_checked;
    step.discarded.push_back(FiltrationWitness{std::move(sw), p + 1, d});
  }
  return step;
}

Worklist list_of(const Word& w, const Rational& c) {
  Worklist list;
  accumulate(list, w, c);
  return list;
}

// Words are rewritten as they stand: vacuum factors are not normalized away
// mid-reduction, since the corollary holds for vacuum arguments too and this
// keeps J_0(u)J_0(v) -> u *_n v verbatim.
void run(const Voa& voa, Worklist list, ReductionResult& out, int level, PairOrder order) {
  while (!list.empty() && list.begin()->first.size() > 1) {
    auto node = list.extract(list.begin());
    ReductionStep step = expand(voa, node.key(), node.mapped(), level, order);
    for (const auto& [w, c] : step.emitted) accumulate(list, w, c * step.coeff);
    out.trace.steps.push_back(std::move(step));
  }
  out.value = collect(list);
}

json word_json(const Voa& voa, const Word& w) { return to_string(voa, w); }

json terms_json(const Voa& voa, const std::map<Word, Rational>& terms) {
  json out = json::array();
  for (const auto& [w, c] : terms) out.push_back({{"word", word_json(voa, w)}, {"coeff", c.to_string()}});
  return out;
}

json with_got(json base, const std::string& got) {
  base["got"] = got;
  return base;
}

json with_cutoff(json base, int cutoff) {
  base["cutoff"] = cutoff;
  return base;
}

}  // namespace

ReductionResult reduce_expression(const Voa& voa, const UEAExpression& e, int level, PairOrder order) {
  if (level < 1) throw std::invalid_argument("reduction level must be >= 1");
  if (!e.homogeneous_of_degree(0)) throw std::invalid_argument("reduction needs a degree-zero expression");
  ReductionResult out;
  out.trace.level = level;
  out.trace.order = order;
  out.trace.input = e.terms();
  Worklist list;
  for (const auto& [w, c] : e.terms()) accumulate(list, w, c);
  run(voa, std::move(list), out, level, order);
  return out;
}

ReductionResult reduce_word(const Voa& voa, const Word& w, int level, PairOrder order) {
  if (level < 1) throw std::invalid_argument("reduction level must be >= 1");
  if (word_degree(w) != 0) throw std::invalid_argument("reduction needs a degree-zero word");
  ReductionResult out;
  out.trace.input = {{w, Rational(1)}};
  out.trace.level = level;
  out.trace.order = order;
  run(voa, list_of(w, Rational(1)), out, level, order);
  return out;
}

FockVector replay(const ReductionTrace& trace) {
  Worklist list;
  for (const auto& [w, c] : trace.input) accumulate(list, w, c);
  for (const ReductionStep& step : trace.steps) {
    accumulate(list, step.word, -step.coeff);
    for (const auto& [w, c] : step.emitted) accumulate(list, w, c * step.coeff);
  }
  return collect(list);
}

json ReductionTrace::to_json(const Voa& voa) const {
  json steps_json = json::array();
  for (const ReductionStep& st : steps) {
    json disc = json::array();
    for (const auto& fw : st.discarded)
      disc.push_back({{"word", word_json(voa, fw.word)}, {"position", fw.position}, {"suffix_degree", fw.suffix_degree}});
    steps_json.push_back({{"word", word_json(voa, st.word)},
                          {"coeff", st.coeff.to_string()},
                          {"position", st.position},
                          {"s", st.s},
                          {"t", st.t},
                          {"N", st.N},
                          {"emitted", terms_json(voa, st.emitted)},
                          {"discarded", std::move(disc)}});
  }
  return {{"input", terms_json(voa, input)},
          {"level", level},
          {"order", order == PairOrder::rightmost ? "rightmost" : "leftmost"},
          {"steps", std::move(steps_json)}};
}

ReportDocument ideal_witness(const Voa& voa, const UEAExpression& e, int k) {
  ReportDocument report;
  report.config = {{"voa", voa.name()}, {"k", k}};
  report.add(run_check("filtration.witness", report.config, [&](CheckRecord& rec) {
    json found = json::array();
    for (const auto& [w, c] : e.terms()) {
      auto fw = find_witness(w, k);
      rec.check(fw.has_value(), [&] { return json{{"word", word_json(voa, w)}}; });
      if (fw) found.push_back({{"word", word_json(voa, w)}, {"position", fw->position}, {"suffix_degree", fw->suffix_degree}});
    }
    rec.data = {{"witnesses", std::move(found)}};
  }));
  return report;
}

ReportDocument homomorphism_check(const Voa& voa, int level, int pair_weight, int omega_cutoff) {
  const int n = level;
  ReportDocument report;
  report.config = {{"voa", voa.name()},
                   {"central_charge", voa.central_charge().to_string()},
                   {"level", n},
                   {"pair_weight", pair_weight},
                   {"omega_cutoff", omega_cutoff}};
  const std::vector<MonoId> basis = voa.basis_up_to(pair_weight);
  auto pair_json = [&](MonoId u, MonoId v) {
    return json{{"u", voa.registry().to_string(u)}, {"v", voa.registry().to_string(v)}};
  };

  report.add(run_check("homomorphism.star", report.config, [&](CheckRecord& rec) {
    for (MonoId u : basis)
      for (MonoId v : basis) {
        FockVector r = reduce_word(voa, Word{Factor{u, 0}, Factor{v, 0}}, n + 1).value;
        FockVector expect = star_n(voa, FockVector(u), FockVector(v), n);
        rec.check(r == expect, [&] { return with_got(pair_json(u, v), voa.to_string(r)); });
      }
  }));

  const int lie_cutoff = 2 * pair_weight + 2 * n;
  const ZhuContext ctx = ZhuContext::build(voa, n, lie_cutoff);
  report.add(run_check("homomorphism.lie", with_cutoff(report.config, lie_cutoff), [&](CheckRecord& rec) {
    for (MonoId u : basis)
      for (MonoId v : basis) {
        // Reduced word by word: building the commutator as an expression would
        // cancel it outright when u or v is the vacuum.
        FockVector d = reduce_word(voa, Word{Factor{u, 0}, Factor{v, 0}}, n + 1).value -
                       reduce_word(voa, Word{Factor{v, 0}, Factor{u, 0}}, n + 1).value;
        FockVector star_diff = star_n(voa, FockVector(u), FockVector(v), n) - star_n(voa, FockVector(v), FockVector(u), n);
        FockVector bracket;
        for (int i = 0; i < u.weight() + v.weight(); ++i)
          bracket.add_scaled(voa.mode_action_basis(u, i, v), binomial(u.weight() - 1, i));
        FockVector residue = ctx.reduce(d - bracket);
        rec.check(d == star_diff && residue.is_zero(), [&] {
          return with_got(pair_json(u, v), voa.to_string(residue));
        });
      }
  }));

  auto [omega, omega_report] = omega_subspace(voa, n, omega_cutoff);
  report.add(run_check("homomorphism.omega", report.config, [&](CheckRecord& rec) {
    for (MonoId u : basis)
      for (MonoId v : basis) {
        UEAExpression word = UEAExpression::word(Word{Factor{u, 0}, Factor{v, 0}});
        FockVector r = reduce_word(voa, Word{Factor{u, 0}, Factor{v, 0}}, n + 1).value;
        UEAExpression single = UEAExpression::mode(r, 0);
        for (const FockVector& x : omega.basis) {
          bool ok = evaluate_on(voa, word, x, omega_cutoff) == evaluate_on(voa, single, x, omega_cutoff);
          rec.check(ok, [&] { return with_got(pair_json(u, v), voa.to_string(x)); });
        }
      }
    rec.data = {{"omega_dim", omega.basis.size()}};
  }));
  return report;
}

}  // namespace zhuforge
