#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zhuforge/linalg.hpp"
#include "zhuforge/report.hpp"
#include "zhuforge/voa.hpp"

namespace zhuforge {

/// Level-n products, split over the homogeneous parts of u.
FockVector circ_n(const Voa& voa, const FockVector& u, const FockVector& v, int n);
FockVector star_n(const Voa& voa, const FockVector& u, const FockVector& v, int n);

/// The level-zero products written out directly (not via circ_n/star_n), so the
/// two definitions can be compared.
FockVector zhu_circ(const Voa& voa, const FockVector& u, const FockVector& v);
FockVector zhu_star(const Voa& voa, const FockVector& u, const FockVector& v);

/// A vector left the truncated range of a context.
class WeightOverflow : public std::runtime_error {
 public:
  WeightOverflow(const std::string& what, MonoId component) : std::runtime_error(what), component_(component) {}
  MonoId component() const { return component_; }

 private:
  MonoId component_;
};

/// Truncated O_n(V): the span of every circ_n product of basis pairs and every
/// L(-1)u + L(0)u lying entirely in weight <= W. This is an inner approximation
/// of O_n(V) ∩ V_{<=W}, so reductions to zero are always genuine.
class ZhuContext {
 public:
  /// With left_weight set, only u of weight <= left_weight enter u∘_n v. That is
  /// far cheaper at high cutoffs and spans a subspace of the full span, so
  /// reductions to zero stay genuine.
  static ZhuContext build(const Voa& voa, int level, int cutoff, std::optional<int> left_weight = std::nullopt);

  const Voa& voa() const { return *voa_; }
  int level() const { return level_; }
  int cutoff() const { return cutoff_; }
  std::optional<int> left_weight() const { return left_weight_; }

  /// Canonical representative of x modulo the span. Throws WeightOverflow.
  FockVector reduce(const FockVector& x) const;
  /// reduce(star_n(u, v)). Throws WeightOverflow if the product leaves the range.
  FockVector multiply(const FockVector& u, const FockVector& v) const;
  bool in_span(const FockVector& x) const { return reduce(x).is_zero(); }

  std::size_t rank() const { return echelon_.rank(); }
  /// Number of pivots of weight <= w.
  std::size_t rank_up_to(int w) const;
  /// Spanning rows in pivot order.
  std::vector<FockVector> span_basis() const;
  /// {"voa", "level", "cutoff", "rank", "rows": [{"pivot", "vector"}]}.
  json to_json() const;

  /// Generating vectors that were tried and fit / were discarded for overflow.
  std::size_t generators_used() const { return used_; }
  std::size_t generators_discarded() const { return discarded_; }

 private:
  void check_range(const FockVector& x, const char* what) const;

  const Voa* voa_ = nullptr;
  int level_ = 0;
  int cutoff_ = 0;
  std::optional<int> left_weight_;
  linalg::RowEchelon<MonoId> echelon_;
  std::size_t used_ = 0;
  std::size_t discarded_ = 0;
};

struct DimensionTable {
  std::string kind;  // "an" or "c2"
  json parameters = json::object();
  std::vector<std::pair<int, long>> rows;

  std::string to_csv() const;  // "index,dim" header
  json to_json() const;
};

/// Rows (w, dim V_{<=w} - #pivots of weight <= w) for 0 <= w <= W: an upper bound
/// for the weight-filtration pieces of A_n(V).
DimensionTable an_dims(const Voa& voa, int level, int cutoff);
/// Rows (w, dim of (V/C_2V)_w), with C_2V spanned by u_{-2}v. Exact, since every
/// u_{-2}v landing in weight w comes from components of weight < w.
DimensionTable c2_dims(const Voa& voa, int cutoff);

/// Every spanning vector of the level-n context reduces to 0 at level n-1.
ReportDocument inverse_system_check(const Voa& voa, int level, int cutoff);

/// Identity, two-sided ideal, associativity, translation relation and (level 0)
/// centrality of ω, all modulo the truncated span.
ReportDocument zhu_structure_suite(const Voa& voa, int level, int cutoff);
ReportDocument zhu_structure_suite(const ZhuContext& ctx);

/// u∘_0 vac = L(-1)u + L(0)u, circ_n = zhu_circ and star_n = zhu_star at n = 0,
/// for basis u, v of weight <= W.
ReportDocument zhu_zero_identities(const Voa& voa, int cutoff);

struct OmegaSubspace {
  int level = 0;
  int cutoff = 0;
  std::vector<FockVector> basis;  // echelon basis, homogeneous vectors
  std::vector<std::pair<int, long>> dims;  // (weight, dim of the kernel in that weight)
  bool equals_low_weights = false;  // == V_0 ⊕ ... ⊕ V_n
  linalg::RowEchelon<MonoId> echelon;

  /// Membership for x inside V_{<=W}.
  bool contains(const FockVector& x) const { return echelon.contains(x.terms()); }
};

/// Joint kernel inside V_{<=W} of J_k(v) = v_{Δv-1+k} for basis v of weight <= W
/// and n < k <= W. Quantification stops at weight W; the report says so.
std::pair<OmegaSubspace, ReportDocument> omega_subspace(const Voa& voa, int level, int cutoff);

}  // namespace zhuforge
