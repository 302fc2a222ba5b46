#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zhuforge/rational.hpp"

namespace zhuforge {

/// A strong generator g with conformal weight Δ_g. Its modes g[m] are indexed
/// so that g[m] lowers L(0)-weight by m; the state of g is g[-Δ_g]·vac and
/// g[m]·vac = 0 for every m >= vacuum_threshold.
struct Generator {
  std::string label;
  int weight = 1;
  int vacuum_threshold = 0;
};

/// Σ coeff · m^m_power · n^n_power.
struct BracketPolynomial {
  struct Term {
    Rational coeff;
    int m_power = 0;
    int n_power = 0;
  };
  std::vector<Term> terms;

  Rational eval(std::int64_t m, std::int64_t n) const;
};

/// One summand of [g[m], h[n]]: either coeff(m,n)·target[m+n] or, when target
/// is empty, the central scalar coeff(m,n)·δ_{m+n,0}.
struct BracketTerm {
  BracketPolynomial coeff;
  std::optional<std::size_t> target;
};

/// A generator monomial acting on the vacuum, e.g. (1/2)·a[-1]a[-1]·vac.
struct RecipeTerm {
  Rational coeff;
  std::vector<std::pair<std::size_t, int>> modes;  // (generator index, mode), applied right to left
};

struct VOAPresentation {
  std::string name;
  std::vector<Generator> generators;  // sorted by label
  std::map<std::pair<std::size_t, std::size_t>, std::vector<BracketTerm>> brackets;
  Rational central_charge;
  std::vector<RecipeTerm> virasoro_recipe;

  std::optional<std::size_t> generator_index(std::string_view label) const;
  const std::vector<BracketTerm>& bracket(std::size_t g, std::size_t h) const;
};

/// "heisenberg" (rank-one free boson, c forced to 1) or "virasoro" (universal
/// vacuum module of central charge c). Throws std::invalid_argument otherwise.
VOAPresentation builtin_presentation(std::string_view name, const Rational& c = Rational(0));

/// Copy of a Virasoro presentation with the central term removed from [L, L].
/// Only useful as a negative control for the axiom suite.
VOAPresentation drop_central_terms(VOAPresentation p);

}  // namespace zhuforge
