#include "zhuforge/combinatorics.hpp"

#include <vector>

namespace zhuforge {

namespace {

constexpr std::int64_t kTableUpper = 96;
constexpr std::int64_t kTableLower = 96;

Rational falling_factorial_binomial(std::int64_t upper, std::int64_t lower) {
  mpz_class num = 1, den = 1;
  for (std::int64_t j = 0; j < lower; ++j) {
    num *= mpz_class(static_cast<long>(upper - j));
    den *= mpz_class(static_cast<long>(j + 1));
  }
  return Rational(mpq_class(num, den));
}

struct BinomialTable {
  BinomialTable() {
    values.reserve((2 * kTableUpper + 1) * (kTableLower + 1));
    for (std::int64_t n = -kTableUpper; n <= kTableUpper; ++n)
      for (std::int64_t k = 0; k <= kTableLower; ++k) values.push_back(falling_factorial_binomial(n, k));
  }
  const Rational& at(std::int64_t n, std::int64_t k) const {
    return values[static_cast<std::size_t>((n + kTableUpper) * (kTableLower + 1) + k)];
  }
  std::vector<Rational> values;
};

}  // namespace

Rational binomial(std::int64_t upper, std::int64_t lower) {
  if (lower < 0) return Rational(0);
  if (upper >= 0 && lower > upper) return Rational(0);
  if (upper >= -kTableUpper && upper <= kTableUpper && lower <= kTableLower) {
    static const BinomialTable table;
    return table.at(upper, lower);
  }
  return falling_factorial_binomial(upper, lower);
}

}  // namespace zhuforge
