#include "zhuforge/presentation.hpp"

#include <stdexcept>

namespace zhuforge {

namespace {

Rational ipow(std::int64_t base, int exp) {
  Rational r(1);
  for (int i = 0; i < exp; ++i) r *= Rational(base);
  return r;
}

}  // namespace

Rational BracketPolynomial::eval(std::int64_t m, std::int64_t n) const {
  Rational sum;
  for (const auto& t : terms) sum += t.coeff * ipow(m, t.m_power) * ipow(n, t.n_power);
  return sum;
}

std::optional<std::size_t> VOAPresentation::generator_index(std::string_view label) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].label == label) return i;
  return std::nullopt;
}

const std::vector<BracketTerm>& VOAPresentation::bracket(std::size_t g, std::size_t h) const {
  static const std::vector<BracketTerm> kEmpty;
  auto it = brackets.find({g, h});
  return it == brackets.end() ? kEmpty : it->second;
}

VOAPresentation builtin_presentation(std::string_view name, const Rational& c) {
  VOAPresentation p;
  if (name == "heisenberg") {
    p.name = "heisenberg";
    p.generators = {{"a", 1, 0}};
    // [a_m, a_n] = m δ_{m+n,0}
    p.brackets[{0, 0}] = {BracketTerm{BracketPolynomial{{{Rational(1), 1, 0}}}, std::nullopt}};
    p.central_charge = Rational(1);
    p.virasoro_recipe = {RecipeTerm{Rational(1, 2), {{0, -1}, {0, -1}}}};
    return p;
  }
  if (name == "virasoro") {
    p.name = "virasoro";
    p.generators = {{"L", 2, -1}};
    // [L_m, L_n] = (m - n) L_{m+n} + δ_{m+n,0} (m^3 - m) c / 12
    BracketTerm lie{BracketPolynomial{{{Rational(1), 1, 0}, {Rational(-1), 0, 1}}}, std::size_t{0}};
    Rational c12 = c / Rational(12);
    BracketTerm central{BracketPolynomial{{{c12, 3, 0}, {-c12, 1, 0}}}, std::nullopt};
    p.brackets[{0, 0}] = {lie, central};
    p.central_charge = c;
    p.virasoro_recipe = {RecipeTerm{Rational(1), {{0, -2}}}};
    return p;
  }
  throw std::invalid_argument("unknown VOA '" + std::string(name) + "' (expected heisenberg or virasoro)");
}

VOAPresentation drop_central_terms(VOAPresentation p) {
  for (auto& [key, terms] : p.brackets) {
    std::vector<BracketTerm> kept;
    for (auto& t : terms)
      if (t.target) kept.push_back(t);
    terms = std::move(kept);
  }
  return p;
}

}  // namespace zhuforge
