#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "zhuforge/rational.hpp"

namespace zhuforge::linalg {

template <class Key>
using SparseVec = std::map<Key, Rational>;

template <class Key>
void axpy(SparseVec<Key>& y, const SparseVec<Key>& x, const Rational& a) {
  if (a.is_zero()) return;
  for (const auto& [k, v] : x) {
    auto [it, inserted] = y.try_emplace(k, v * a);
    if (!inserted) {
      it->second += v * a;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

/// Exact reduced row-echelon basis of a growing subspace. The pivot of a row is
/// its largest key; pivots are normalized to 1 and cleared from every other
/// row, so reduce() is a single pass and its result is unique.
template <class Key>
class RowEchelon {
 public:
  using Vec = SparseVec<Key>;

  /// Adds v to the span. Returns the new pivot, or nothing if v was dependent.
  std::optional<Key> insert(const Vec& v) {
    Vec r = reduce(v);
    if (r.empty()) return std::nullopt;
    Key pivot = r.rbegin()->first;
    Rational inv = Rational(1) / r.rbegin()->second;
    for (auto& [k, c] : r) c *= inv;
    for (auto& [p, row] : rows_) {
      auto it = row.find(pivot);
      if (it != row.end()) {
        Rational f = -it->second;
        axpy(row, r, f);
      }
    }
    rows_.emplace(pivot, std::move(r));
    return pivot;
  }

  Vec reduce(Vec v) const {
    if (rows_.empty()) return v;
    // Pivot columns never reappear once cleared, so visiting v's keys from the
    // top down finds every pivot exactly once.
    std::vector<std::pair<Key, Rational>> hits;
    for (const auto& [k, c] : v)
      if (rows_.count(k)) hits.emplace_back(k, c);
    for (const auto& [k, c] : hits) axpy(v, rows_.at(k), -c);
    return v;
  }

  bool contains(const Vec& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }
  const std::map<Key, Vec>& rows() const { return rows_; }
  bool is_pivot(const Key& k) const { return rows_.count(k) > 0; }

 private:
  std::map<Key, Vec> rows_;
};

/// Null space of the linear map sending column c to images[c]. Returns a
/// basis of coefficient vectors over the column indices, in echelon form
/// with respect to the largest column index.
template <class Key>
std::vector<std::map<std::size_t, Rational>> null_space(const std::vector<SparseVec<Key>>& images) {
  // Row-reduce images augmented with unit tags; a fully cancelled image leaves
  // its tag combination as a kernel vector.
  struct Row {
    SparseVec<Key> image;
    std::map<std::size_t, Rational> tag;
  };
  std::map<Key, Row> pivots;
  std::vector<std::map<std::size_t, Rational>> kernel;
  for (std::size_t col = 0; col < images.size(); ++col) {
    Row r{images[col], {{col, Rational(1)}}};
    while (!r.image.empty()) {
      auto it = pivots.find(r.image.rbegin()->first);
      if (it == pivots.end()) break;
      Rational f = -(r.image.rbegin()->second / it->second.image.rbegin()->second);
      axpy(r.image, it->second.image, f);
      axpy(r.tag, it->second.tag, f);
    }
    if (r.image.empty()) {
      kernel.push_back(std::move(r.tag));
    } else {
      Key p = r.image.rbegin()->first;
      pivots.emplace(p, std::move(r));
    }
  }
  return kernel;
}

}  // namespace zhuforge::linalg
