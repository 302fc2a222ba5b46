#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "zhuforge/report.hpp"
#include "zhuforge/uea.hpp"
#include "zhuforge/zhu.hpp"

namespace zhuforge {

enum class PairOrder { rightmost, leftmost };

/// One application of the corollary head to the adjacent pair at `position`.
struct ReductionStep {
  Word word;                   // the word that was rewritten
  Rational coeff;              // its coefficient at that moment
  std::size_t position = 0;    // factors position, position+1 were merged
  int s = 0, t = 0, N = 0;
  std::map<Word, Rational> emitted;  // head words replacing one copy of `word`
  std::vector<FiltrationWitness> discarded;  // sample tail words, all witnessed
  std::size_t discarded_checked = 0;         // tail words whose witness was verified
};

struct ReductionTrace {
  std::map<Word, Rational> input;
  int level = 1;  // discarded words lie in U(V)_0^{-level}
  PairOrder order = PairOrder::rightmost;
  std::vector<ReductionStep> steps;

  json to_json(const Voa& voa) const;
};

struct ReductionResult {
  FockVector value;  // r with J_0(r) congruent to the input word
  ReductionTrace trace;
};

/// Rewrites a degree-zero word as J_0(r) modulo U(V)_0^{-level}, merging pairs with
/// the corollary head until one factor is left. N is the least value making N+s >= 0
/// and putting every discarded word in U(V)_0^{-level}; for the rightmost pair this
/// is max(level-1, level-1-t, -s). Throws std::invalid_argument for a word of nonzero
/// degree or level < 1.
ReductionResult reduce_word(const Voa& voa, const Word& w, int level, PairOrder order = PairOrder::rightmost);
/// Same for a degree-zero expression.
ReductionResult reduce_expression(const Voa& voa, const UEAExpression& e, int level,
                                  PairOrder order = PairOrder::rightmost);

/// Recomputes the result from the trace data alone.
FockVector replay(const ReductionTrace& trace);

/// One record: every word of e has a suffix of degree <= k.
ReportDocument ideal_witness(const Voa& voa, const UEAExpression& e, int k);

/// For basis pairs of weight <= pair_weight:
///  - reduce_word(J_0(u)J_0(v), n+1) == star_n(u, v) exactly;
///  - the commutator J_0(u)J_0(v) - J_0(v)J_0(u) reduces to star_n(u,v) - star_n(v,u),
///    which is congruent to Σ_i C(Δu-1, i) u_i v modulo the truncated O_n span;
///  - the word and J_0(result) act identically on the computed Ω_n subspace.
ReportDocument homomorphism_check(const Voa& voa, int level, int pair_weight, int omega_cutoff = 6);

}  // namespace zhuforge
