#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zhuforge/fock.hpp"
#include "zhuforge/presentation.hpp"

namespace zhuforge {

/// A concrete vertex operator algebra: the vacuum module spanned by normally
/// ordered generator monomials, with the vertex-operator modes u_i of every
/// element computed exactly.
///
/// Mode computations are memoized inside the object. A Voa may be shared for
/// reading but its methods must not be called from several threads at once.
class Voa {
 public:
  explicit Voa(VOAPresentation p);
  Voa(const Voa&) = delete;
  Voa& operator=(const Voa&) = delete;

  const VOAPresentation& presentation() const { return pres_; }
  const BasisRegistry& registry() const { return registry_; }
  const std::string& name() const { return pres_.name; }
  const Rational& central_charge() const { return pres_.central_charge; }

  /// Canonical basis of V_w for 0 <= w <= max_weight.
  std::vector<std::pair<int, std::vector<MonoId>>> enumerate_basis(int max_weight) const;
  /// Flattened basis of V_{<=max_weight} in canonical order.
  std::vector<MonoId> basis_up_to(int max_weight) const;

  /// g[m]·x in canonical form.
  FockVector apply_generator_mode(std::size_t g, int m, const FockVector& x) const;
  /// The vertex-operator mode u_i applied to v.
  FockVector mode_action(const FockVector& u, int i, const FockVector& v) const;
  FockVector mode_action(MonoId u, int i, const FockVector& v) const;
  /// u_i x for basis elements; the reference stays valid until clear_caches().
  const FockVector& mode_action_basis(MonoId u, int i, MonoId x) const { return mode_on_basis(u, i, x); }

  /// Least I such that u_j v = 0 for all j >= I.
  int truncation_index(const FockVector& u, const FockVector& v) const;

  const FockVector& omega() const { return omega_; }
  /// L(n) = ω_{n+1}.
  FockVector virasoro_mode(int n, const FockVector& x) const { return mode_action(omega_, n + 1, x); }
  /// g[-Δ_g]·vac.
  FockVector generator_state(std::size_t g) const;
  int generator_weight(std::size_t g) const { return pres_.generators[g].weight; }

  /// Element-grammar rendering, e.g. "1/2 a[-1]a[-1]vac - a[-2]vac"; "0" for zero.
  std::string to_string(const FockVector& v) const;

  void clear_caches() const;
  std::size_t cache_size() const { return gen_memo_.size() + mode_memo_.size(); }

 private:
  struct GenKey {
    std::uint64_t mono;
    std::int32_t index;
    std::uint32_t gen;
    bool operator==(const GenKey&) const = default;
  };
  struct ModeKey {
    std::uint64_t u;
    std::uint64_t x;
    std::int32_t index;
    bool operator==(const ModeKey&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const GenKey& k) const noexcept;
    std::size_t operator()(const ModeKey& k) const noexcept;
  };

  const FockVector& generator_on_basis(std::size_t g, int m, MonoId x) const;
  const FockVector& mode_on_basis(MonoId u, int i, MonoId x) const;

  VOAPresentation pres_;
  BasisRegistry registry_;
  FockVector omega_;
  mutable std::unordered_map<GenKey, FockVector, KeyHash> gen_memo_;
  mutable std::unordered_map<ModeKey, FockVector, KeyHash> mode_memo_;
};

}  // namespace zhuforge
