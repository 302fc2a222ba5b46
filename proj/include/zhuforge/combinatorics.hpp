#pragma once

#include <cstdint>

#include "zhuforge/rational.hpp"

namespace zhuforge {

/// Generalized binomial coefficient C(upper, lower) = upper(upper-1)...(upper-lower+1)/lower!
/// for any integer upper. Returns 0 when lower < 0.
Rational binomial(std::int64_t upper, std::int64_t lower);

/// (-1)^k as a small integer.
inline int sign_power(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace zhuforge
