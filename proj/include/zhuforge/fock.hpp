#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "zhuforge/presentation.hpp"
#include "zhuforge/rational.hpp"

namespace zhuforge {

/// g[index] inside a basis monomial. Canonical order: index ascending, then
/// generator (generators are stored sorted by label).
struct Mode {
  std::uint32_t gen = 0;
  std::int32_t index = 0;

  friend bool operator==(const Mode&, const Mode&) = default;
  friend std::strong_ordering operator<=>(const Mode& a, const Mode& b) {
    if (auto c = a.index <=> b.index; c != 0) return c;
    return a.gen <=> b.gen;
  }
};

/// Normally ordered creation modes applied to the vacuum (leftmost first).
using Monomial = std::vector<Mode>;

int monomial_weight(const Monomial& m);

/// Position of a basis monomial in the canonical basis: (weight, rank within the
/// lexicographically ordered weight space). Ordering ids orders the basis.
class MonoId {
 public:
  constexpr MonoId() = default;
  constexpr MonoId(std::uint32_t weight, std::uint32_t index)
      : key_((static_cast<std::uint64_t>(weight) << 32) | index) {}

  constexpr int weight() const { return static_cast<int>(key_ >> 32); }
  constexpr std::uint32_t index() const { return static_cast<std::uint32_t>(key_); }
  constexpr std::uint64_t key() const { return key_; }
  constexpr bool is_vacuum() const { return key_ == 0; }

  friend constexpr bool operator==(MonoId, MonoId) = default;
  friend constexpr auto operator<=>(MonoId a, MonoId b) { return a.key_ <=> b.key_; }

 private:
  std::uint64_t key_ = 0;
};

struct MonoIdHash {
  std::size_t operator()(MonoId id) const noexcept { return std::hash<std::uint64_t>{}(id.key()); }
};

/// Interns basis monomials. Weight spaces are enumerated lazily and completely,
/// so ids do not depend on the order in which monomials are first requested.
/// Safe for concurrent use.
class BasisRegistry {
 public:
  explicit BasisRegistry(const VOAPresentation& p);

  MonoId id(const Monomial& m) const;
  const Monomial& monomial(MonoId id) const;
  std::size_t dim(int weight) const;
  std::vector<MonoId> basis(int weight) const;

  /// "a[-2]a[-1]vac", "vac".
  std::string to_string(MonoId id) const;

 private:
  struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
  };
  struct Level {
    std::vector<Monomial> monomials;
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
  };
  const Level& level(int weight) const;

  std::vector<Generator> generators_;
  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<Level>> levels_;
};

/// Element of V: a sparse rational combination of basis monomials. Zero
/// coefficients are never stored.
class FockVector {
 public:
  using Terms = std::map<MonoId, Rational>;

  FockVector() = default;
  explicit FockVector(MonoId id, Rational coeff = Rational(1));
  explicit FockVector(Terms terms);

  static FockVector vacuum() { return FockVector(MonoId{}); }

  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(MonoId id) const;
  void add(MonoId id, const Rational& c);
  void add_scaled(const FockVector& other, const Rational& c);

  std::optional<int> max_weight() const;
  std::optional<int> min_weight() const;
  bool is_homogeneous() const;
  FockVector homogeneous_part(int weight) const;
  std::map<int, FockVector> by_weight() const;

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector& operator*=(const Rational& c);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const Rational& c, FockVector v) { return v *= c; }
  friend FockVector operator-(FockVector v) { return v *= Rational(-1); }
  friend bool operator==(const FockVector&, const FockVector&) = default;

 private:
  Terms terms_;
};

}  // namespace zhuforge
