#include "zhuforge/fock.hpp"

#include <algorithm>
#include <stdexcept>

namespace zhuforge {

int monomial_weight(const Monomial& m) {
  int w = 0;
  for (const auto& mode : m) w -= mode.index;
  return w;
}

std::size_t BasisRegistry::MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& mode : m) {
    std::uint64_t x = (static_cast<std::uint64_t>(mode.gen) << 32) ^ static_cast<std::uint32_t>(mode.index);
    h ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

BasisRegistry::BasisRegistry(const VOAPresentation& p) : generators_(p.generators) {
  for (const auto& g : generators_)
    if (g.vacuum_threshold > 0)
      throw std::invalid_argument("generator " + g.label + " creates states of negative weight");
}

const BasisRegistry::Level& BasisRegistry::level(int weight) const {
  if (weight < 0) throw std::out_of_range("negative weight");
  std::lock_guard lock(mutex_);
  while (static_cast<int>(levels_.size()) <= weight) levels_.emplace_back();
  auto& slot = levels_[static_cast<std::size_t>(weight)];
  if (slot) return *slot;

  // Creation slots in canonical order; a monomial is a non-decreasing slot
  // sequence, and depth-first search in slot order yields lexicographic order.
  std::vector<Mode> slots;
  for (int m = -weight; m <= -1; ++m)
    for (std::uint32_t g = 0; g < generators_.size(); ++g)
      if (m < generators_[g].vacuum_threshold) slots.push_back(Mode{g, m});

  auto lvl = std::make_unique<Level>();
  Monomial current;
  auto dfs = [&](auto&& self, std::size_t start, int remaining) -> void {
    if (remaining == 0) {
      lvl->monomials.push_back(current);
      return;
    }
    for (std::size_t s = start; s < slots.size(); ++s) {
      int w = -slots[s].index;
      if (w > remaining) continue;
      current.push_back(slots[s]);
      self(self, s, remaining - w);
      current.pop_back();
    }
  };
  dfs(dfs, 0, weight);
  for (std::uint32_t i = 0; i < lvl->monomials.size(); ++i) lvl->index.emplace(lvl->monomials[i], i);
  slot = std::move(lvl);
  return *slot;
}

MonoId BasisRegistry::id(const Monomial& m) const {
  int w = monomial_weight(m);
  const Level& lvl = level(w);
  auto it = lvl.index.find(m);
  if (it == lvl.index.end()) throw std::invalid_argument("monomial is not a canonical basis element");
  return MonoId(static_cast<std::uint32_t>(w), it->second);
}

const Monomial& BasisRegistry::monomial(MonoId id) const {
  const Level& lvl = level(id.weight());
  if (id.index() >= lvl.monomials.size()) throw std::out_of_range("monomial id out of range");
  return lvl.monomials[id.index()];
}

std::size_t BasisRegistry::dim(int weight) const { return level(weight).monomials.size(); }

std::vector<MonoId> BasisRegistry::basis(int weight) const {
  std::vector<MonoId> out;
  std::size_t d = dim(weight);
  out.reserve(d);
  for (std::uint32_t i = 0; i < d; ++i) out.emplace_back(static_cast<std::uint32_t>(weight), i);
  return out;
}

std::string BasisRegistry::to_string(MonoId id) const {
  std::string s;
  for (const auto& mode : monomial(id)) s += generators_[mode.gen].label + "[" + std::to_string(mode.index) + "]";
  return s + "vac";
}

FockVector::FockVector(MonoId id, Rational coeff) {
  if (!coeff.is_zero()) terms_.emplace(id, std::move(coeff));
}

FockVector::FockVector(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

Rational FockVector::coeff(MonoId id) const {
  auto it = terms_.find(id);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FockVector::add(MonoId id, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(id, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void FockVector::add_scaled(const FockVector& other, const Rational& c) {
  if (c.is_zero()) return;
  if (c.is_one()) {
    for (const auto& [id, v] : other.terms_) add(id, v);
    return;
  }
  for (const auto& [id, v] : other.terms_) add(id, v * c);
}

std::optional<int> FockVector::max_weight() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.weight();
}

std::optional<int> FockVector::min_weight() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.weight();
}

bool FockVector::is_homogeneous() const { return terms_.empty() || *min_weight() == *max_weight(); }

FockVector FockVector::homogeneous_part(int weight) const {
  FockVector out;
  auto lo = terms_.lower_bound(MonoId(static_cast<std::uint32_t>(weight), 0));
  auto hi = terms_.lower_bound(MonoId(static_cast<std::uint32_t>(weight) + 1, 0));
  out.terms_.insert(lo, hi);
  return out;
}

std::map<int, FockVector> FockVector::by_weight() const {
  std::map<int, FockVector> out;
  for (const auto& [id, c] : terms_) out[id.weight()].terms_.emplace_hint(out[id.weight()].terms_.end(), id, c);
  return out;
}

FockVector& FockVector::operator+=(const FockVector& o) {
  add_scaled(o, Rational(1));
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  add_scaled(o, Rational(-1));
  return *this;
}

FockVector& FockVector::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [id, v] : terms_) v *= c;
  return *this;
}

}  // namespace zhuforge
