#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace zhuforge {

/// Seeded generator with a platform-independent integer draw (the standard
/// distributions are implementation-defined).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi], by rejection.
  int uniform(int lo, int hi) {
    if (hi < lo) throw std::invalid_argument("empty sampling range");
    const std::uint64_t span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo) + 1;
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
    std::uint64_t x;
    do x = engine_(); while (x >= limit);
    return lo + static_cast<int>(x % span);
  }

  template <class Container>
  const auto& pick(const Container& c) {
    return c[static_cast<std::size_t>(uniform(0, static_cast<int>(c.size()) - 1))];
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace zhuforge
