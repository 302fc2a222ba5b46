#include "zhuforge/voa.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "zhuforge/combinatorics.hpp"

namespace zhuforge {

namespace {

const FockVector& zero_vector() {
  static const FockVector kZero;
  return kZero;
}

std::size_t mix(std::size_t h, std::uint64_t x) {
  return h ^ (std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

std::size_t Voa::KeyHash::operator()(const GenKey& k) const noexcept {
  return mix(mix(std::hash<std::uint64_t>{}(k.mono), static_cast<std::uint32_t>(k.index)), k.gen);
}

std::size_t Voa::KeyHash::operator()(const ModeKey& k) const noexcept {
  return mix(mix(std::hash<std::uint64_t>{}(k.u), k.x), static_cast<std::uint32_t>(k.index));
}

Voa::Voa(VOAPresentation p) : pres_(std::move(p)), registry_(pres_) {
  for (const auto& term : pres_.virasoro_recipe) {
    FockVector v = FockVector::vacuum();
    for (auto it = term.modes.rbegin(); it != term.modes.rend(); ++it) v = apply_generator_mode(it->first, it->second, v);
    omega_.add_scaled(v, term.coeff);
  }
}

std::vector<std::pair<int, std::vector<MonoId>>> Voa::enumerate_basis(int max_weight) const {
  std::vector<std::pair<int, std::vector<MonoId>>> out;
  for (int w = 0; w <= max_weight; ++w) out.emplace_back(w, registry_.basis(w));
  return out;
}

std::vector<MonoId> Voa::basis_up_to(int max_weight) const {
  std::vector<MonoId> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto b = registry_.basis(w);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

FockVector Voa::generator_state(std::size_t g) const {
  return apply_generator_mode(g, -pres_.generators.at(g).weight, FockVector::vacuum());
}

const FockVector& Voa::generator_on_basis(std::size_t g, int m, MonoId x) const {
  if (x.weight() - m < 0) return zero_vector();
  GenKey key{x.key(), m, static_cast<std::uint32_t>(g)};
  if (auto it = gen_memo_.find(key); it != gen_memo_.end()) return it->second;

  const Generator& gen = pres_.generators[g];
  const Monomial& mono = registry_.monomial(x);
  Mode gm{static_cast<std::uint32_t>(g), m};
  FockVector result;
  if (mono.empty()) {
    if (m < gen.vacuum_threshold) result = FockVector(registry_.id(Monomial{gm}));
  } else if (m < gen.vacuum_threshold && gm <= mono.front()) {
    Monomial prepended;
    prepended.reserve(mono.size() + 1);
    prepended.push_back(gm);
    prepended.insert(prepended.end(), mono.begin(), mono.end());
    result = FockVector(registry_.id(prepended));
  } else {
    // g_m h_k R = h_k (g_m R) + [g_m, h_k] R
    const Mode first = mono.front();
    MonoId rest = registry_.id(Monomial(mono.begin() + 1, mono.end()));
    FockVector moved = generator_on_basis(g, m, rest);
    for (const auto& [y, c] : moved) result.add_scaled(generator_on_basis(first.gen, first.index, y), c);
    for (const auto& term : pres_.bracket(g, first.gen)) {
      Rational coeff = term.coeff.eval(m, first.index);
      if (coeff.is_zero()) continue;
      if (term.target) {
        result.add_scaled(generator_on_basis(*term.target, m + first.index, rest), coeff);
      } else if (m + first.index == 0) {
        result.add(rest, coeff);
      }
    }
  }
  return gen_memo_.emplace(key, std::move(result)).first->second;
}

const FockVector& Voa::mode_on_basis(MonoId u, int i, MonoId x) const {
  if (u.weight() + x.weight() - i - 1 < 0) return zero_vector();
  ModeKey key{u.key(), x.key(), i};
  if (auto it = mode_memo_.find(key); it != mode_memo_.end()) return it->second;

  FockVector result;
  const Monomial& mono = registry_.monomial(u);
  if (mono.empty()) {
    if (i == -1) result = FockVector(x);
  } else {
    const Mode first = mono.front();
    const int dg = pres_.generators[first.gen].weight;
    MonoId rest = registry_.id(Monomial(mono.begin() + 1, mono.end()));
    if (rest.is_vacuum() && first.index == -dg) {
      result = generator_on_basis(first.gen, i - dg + 1, x);
    } else {
      // u = s_l w with s the generator state and l = m + Δ_g - 1; iterate formula
      // (s_l w)_i = Σ_k (-1)^k C(l,k) (s_{l-k} w_{i+k} - (-1)^l w_{l+i-k} s_k).
      const int l = first.index + dg - 1;
      const int dw = rest.weight();
      const int wx = x.weight();
      int kmax = l >= 0 ? l : std::max(dw + wx - i - 1, dg + wx - 1);
      const Rational sign_l(sign_power(l));
      for (int k = 0; k <= kmax; ++k) {
        Rational c = binomial(l, k);
        if (c.is_zero()) continue;
        if (k % 2) c = -c;
        const FockVector& inner = mode_on_basis(rest, i + k, x);
        for (const auto& [y, cy] : inner) result.add_scaled(generator_on_basis(first.gen, l - k - dg + 1, y), c * cy);
        const FockVector& lowered = generator_on_basis(first.gen, k - dg + 1, x);
        if (lowered.is_zero()) continue;
        Rational c2 = -(sign_l * c);
        for (const auto& [y, cy] : lowered) result.add_scaled(mode_on_basis(rest, l + i - k, y), c2 * cy);
      }
    }
  }
  return mode_memo_.emplace(key, std::move(result)).first->second;
}

FockVector Voa::apply_generator_mode(std::size_t g, int m, const FockVector& x) const {
  if (g >= pres_.generators.size()) throw std::out_of_range("generator index out of range");
  FockVector out;
  for (const auto& [id, c] : x) out.add_scaled(generator_on_basis(g, m, id), c);
  return out;
}

FockVector Voa::mode_action(MonoId u, int i, const FockVector& v) const {
  FockVector out;
  for (const auto& [id, c] : v) out.add_scaled(mode_on_basis(u, i, id), c);
  return out;
}

FockVector Voa::mode_action(const FockVector& u, int i, const FockVector& v) const {
  FockVector out;
  for (const auto& [uid, cu] : u)
    for (const auto& [vid, cv] : v) out.add_scaled(mode_on_basis(uid, i, vid), cu * cv);
  return out;
}

int Voa::truncation_index(const FockVector& u, const FockVector& v) const {
  if (u.is_zero() || v.is_zero()) return std::numeric_limits<int>::min();
  // u_j v has weight Δ_u + Δ_v - j - 1, so j >= max Δ_u + max Δ_v kills everything.
  const int bound = *u.max_weight() + *v.max_weight();
  const int floor = -bound - 2;
  for (int j = bound - 1; j >= floor; --j)
    if (!mode_action(u, j, v).is_zero()) return j + 1;
  return floor;
}

std::string Voa::to_string(const FockVector& v) const {
  if (v.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [id, c] : v) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) s += "-";
    } else {
      s += c.sign() < 0 ? " - " : " + ";
    }
    if (!mag.is_one()) s += mag.to_string() + " ";
    s += registry_.to_string(id);
    first = false;
  }
  return s;
}

void Voa::clear_caches() const {
  gen_memo_.clear();
  mode_memo_.clear();
}

}  // namespace zhuforge
