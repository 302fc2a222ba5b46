#pragma once

#include <cstdint>
#include <utility>

#include "zhuforge/report.hpp"
#include "zhuforge/voa.hpp"

namespace zhuforge {

struct IntRange {
  int lo = 0;
  int hi = 0;
};

struct AppendixPlan {
  IntRange s{-2, 2};
  IntRange t{-2, 2};
  IntRange N{0, 4};
  int word_bound = 10;   // shift window of the per-word residual
  int samples = 50;      // seeded corollary tuples
  std::uint64_t seed = 12345;
  int cutoff = 6;        // corollary operators are compared on V_{<=cutoff}
  int arg_weight = 3;    // corollary arguments have weight <= arg_weight
};

/// The lemma residual over the grid (grid points with N+s < 0 are skipped) and
/// the corollary as an operator identity for seeded (s, t, N, u, v).
ReportDocument appendix_suite(const Voa& voa, const AppendixPlan& plan = {});

/// ^{(2)}J_{n+1,n+1,-2n-2}(u, v) for basis pairs of weight <= pair_weight: every
/// kept word has a suffix of degree <= -(n+1). Words are kept up to last shift
/// right_bound (at least n+1), so the dropped tail is witnessed by its last factor.
ReportDocument ideal_direction_suite(const Voa& voa, int level, int pair_weight, int right_bound = 8);

struct WordPlan {
  int count = 100;
  int max_length = 4;
  int shift_radius = 3;
  int arg_weight = 3;
  std::uint64_t seed = 12345;
  int omega_cutoff = 6;
};

/// Seeded degree-zero words reduced at level l = 1 + (i mod 2) for the i-th word:
/// trace replay, the semantic check on Ω_{l-1}, and agreement of the two pair
/// orders modulo a truncated O_{l-1} span. That span uses u of weight <= 2l and
/// a cutoff just covering every difference.
ReportDocument word_reduction_suite(const Voa& voa, const WordPlan& plan = {});

}  // namespace zhuforge
