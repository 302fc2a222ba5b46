#include "zhuforge/uea.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "zhuforge/combinatorics.hpp"

namespace zhuforge {

int word_degree(const Word& w) { return word_degree(w, 0); }

int word_degree(const Word& w, std::size_t from) {
  int d = 0;
  for (std::size_t i = from; i < w.size(); ++i) d -= w[i].shift;
  return d;
}

std::optional<FiltrationWitness> find_witness(const Word& w, int k) {
  int d = 0;
  for (std::size_t p = w.size(); p-- > 0;) {
    d -= w[p].shift;
    if (d <= k) return FiltrationWitness{w, p, d};
  }
  return std::nullopt;
}

UEAExpression UEAExpression::word(Word w, Rational c) {
  UEAExpression e;
  e.add(std::move(w), c);
  return e;
}

UEAExpression UEAExpression::mode(const FockVector& u, int shift) {
  UEAExpression e;
  for (const auto& [b, c] : u) e.add(Word{Factor{b, shift}}, c);
  return e;
}

UEAExpression UEAExpression::raw_mode(const FockVector& u, int m) {
  UEAExpression e;
  for (const auto& [b, c] : u) e.add(Word{Factor{b, m - b.weight() + 1}}, c);
  return e;
}

Rational UEAExpression::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void UEAExpression::add(Word w, const Rational& c) {
  if (c.is_zero()) return;
  for (const Factor& f : w)
    if (f.arg.is_vacuum() && f.shift != 0) return;
  std::erase_if(w, [](const Factor& f) { return f.arg.is_vacuum(); });
  auto [it, inserted] = terms_.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void UEAExpression::add_scaled(const UEAExpression& e, const Rational& c) {
  if (!c.is_zero())
    for (const auto& [w, v] : e.terms_) add(w, v * c);
  tail_bound_ = combine_bounds(tail_bound_, e.tail_bound_);
}

std::optional<int> UEAExpression::combine_bounds(std::optional<int> a, std::optional<int> b) {
  if (a && b) return std::min(*a, *b);
  return a ? a : b;
}

bool UEAExpression::homogeneous_of_degree(int d) const {
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& kv) { return word_degree(kv.first) == d; });
}

UEAExpression& UEAExpression::operator+=(const UEAExpression& o) {
  add_scaled(o, Rational(1));
  return *this;
}

UEAExpression& UEAExpression::operator-=(const UEAExpression& o) {
  add_scaled(o, Rational(-1));
  return *this;
}

UEAExpression& UEAExpression::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

UEAExpression operator*(const UEAExpression& a, const UEAExpression& b) {
  // A tail on either side is only harmless when it acts first.
  if (a.tail_bound_) throw std::invalid_argument("left factor of a product must not be truncated");
  UEAExpression out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(std::move(w), ca * cb);
    }
  out.tail_bound_ = b.tail_bound_;
  return out;
}

std::string to_string(const Voa& voa, const Word& w) {
  if (w.empty()) return "J[0](vac)";
  std::string s;
  for (const Factor& f : w) s += "J[" + std::to_string(f.shift) + "](" + voa.registry().to_string(f.arg) + ")";
  return s;
}

std::string to_string(const Voa& voa, const UEAExpression& e) {
  if (e.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first)
      s += c.sign() < 0 ? "-" : "";
    else
      s += c.sign() < 0 ? " - " : " + ";
    if (!mag.is_one()) s += mag.to_string() + " ";
    s += to_string(voa, w);
    first = false;
  }
  return s;
}

UEAExpression vhat_bracket(const Voa& voa, const FockVector& u, int m, const FockVector& v, int n) {
  UEAExpression out;
  if (u.is_zero() || v.is_zero()) return out;
  // u_i v = 0 once i >= Δu + Δv.
  int imax = *u.max_weight() + *v.max_weight() - 1;
  if (m >= 0) imax = std::min(imax, m);
  for (int i = 0; i <= imax; ++i) out.add_scaled(UEAExpression::raw_mode(voa.mode_action(u, i, v), m + n - i), binomial(m, i));
  return out;
}

UEAExpression j1_expand(const Voa& voa, const FockVector& u, const FockVector& v, int m, int n, int l) {
  UEAExpression out;
  if (v.is_zero()) return out;
  for (const auto& [du, part] : u.by_weight()) {
    const int imax = du + *v.max_weight() - l - 1;
    for (int i = 0; i <= imax; ++i)
      out.add_scaled(UEAExpression::mode(voa.mode_action(part, l + i, v), m + n + l), binomial(m + du - 1, i));
  }
  return out;
}

UEAExpression j2_expand(const Voa&, const FockVector& u, const FockVector& v, int m, int n, int l, int right_bound) {
  UEAExpression out;
  const Rational sign_l(sign_power(l));
  const int imax = l >= 0 ? l : std::max(right_bound - n, right_bound - m);
  for (int i = 0; i <= imax; ++i) {
    const Rational c = Rational(sign_power(i)) * binomial(l, i);
    if (l >= 0 || n + i <= right_bound) out.add_scaled(UEAExpression::mode(u, m + l - i) * UEAExpression::mode(v, n + i), c);
    if (l >= 0 || m + i <= right_bound)
      out.add_scaled(UEAExpression::mode(v, n + l - i) * UEAExpression::mode(u, m + i), -(sign_l * c));
  }
  if (l < 0) out.set_tail_bound(right_bound);
  return out;
}

FockVector evaluate_on(const Voa& voa, const UEAExpression& e, const FockVector& x, int max_weight) {
  if (x.is_zero()) return x;
  const int wx = *x.max_weight();
  if (wx > max_weight) throw std::invalid_argument("vector exceeds the evaluation cutoff");
  if (e.tail_bound() && *e.tail_bound() < wx)
    throw std::invalid_argument("expression was truncated at last shift " + std::to_string(*e.tail_bound()) +
                                " but is applied to weight " + std::to_string(wx));
  FockVector out;
  for (const auto& [w, c] : e.terms()) {
    FockVector cur = x;
    for (auto it = w.rbegin(); it != w.rend() && !cur.is_zero(); ++it) {
      FockVector next;
      const int index = it->arg.weight() - 1 + it->shift;
      for (const auto& [y, cy] : cur) next.add_scaled(voa.mode_action_basis(it->arg, index, y), cy);
      cur = std::move(next);
    }
    out.add_scaled(cur, c);
  }
  return out;
}

namespace {

Word pair_word(MonoId a, int sa, MonoId b, int sb) { return Word{Factor{a, sa}, Factor{b, sb}}; }

bool in_window(int a, int b, int bound) { return std::abs(a) <= bound && std::abs(b) <= bound; }

void check_hypothesis(int s, int N) {
  if (N < 0) throw std::invalid_argument("N must be nonnegative");
  if (N + s < 0) throw std::invalid_argument("hypothesis N + s >= 0 violated");
}

}  // namespace

UEAExpression lemma_a1_residual(const Voa&, int s, int t, int N, MonoId u, MonoId v, int bound) {
  check_hypothesis(s, N);
  UEAExpression lhs, rhs;
  const int imax = 2 * bound + std::abs(s) + std::abs(t) + N + 2;
  for (int j = 0; j <= N; ++j) {
    const Rational cj = binomial(-N - s - 1, j);
    const int l = -N - s - 1 - j;
    const Rational sign_l(sign_power(l));
    for (int i = 0; i <= imax; ++i) {
      const Rational c = cj * Rational(sign_power(i)) * binomial(l, i);
      if (in_window(-s - j - i, t + j + i, bound)) lhs.add(pair_word(u, -s - j - i, v, t + j + i), c);
      if (in_window(t - N - s - 1 - i, N + 1 + i, bound)) lhs.add(pair_word(v, t - N - s - 1 - i, u, N + 1 + i), -(sign_l * c));
    }
  }
  if (in_window(-s, t, bound)) rhs.add(pair_word(u, -s, v, t), Rational(1));
  for (int k = N + 1; k <= imax; ++k) {
    if (!in_window(-k - s, k + t, bound)) continue;
    Rational c;
    for (int j = 0; j <= N; ++j)
      c += Rational(sign_power(j)) * binomial(N + s + j, j) * binomial(N + s + k, k - j);
    rhs.add(pair_word(u, -k - s, v, k + t), c);
  }
  const Rational sign_d(sign_power(N + s + 1));
  for (int i = 0; i <= imax; ++i) {
    if (!in_window(t - N - s - 1 - i, N + 1 + i, bound)) continue;
    Rational c;
    for (int j = 0; j <= N; ++j) c += binomial(N + s + j, j) * binomial(N + s + j + i, i);
    rhs.add(pair_word(v, t - N - s - 1 - i, u, N + 1 + i), -(sign_d * c));
  }
  return lhs - rhs;
}

FockVector corollary_a2_head_vector(const Voa& voa, int s, int N, MonoId u, MonoId v) {
  const int du = u.weight();
  if (N + du < 0) throw std::invalid_argument("hypothesis N + weight(u) >= 0 violated");
  FockVector r;
  for (int j = 0; j <= N; ++j) {
    const Rational cj = binomial(-N - s - 1, j);
    for (int i = 0; i <= N + du; ++i) r.add_scaled(voa.mode_action_basis(u, -N - s - 1 - j + i, v), cj * binomial(N + du, i));
  }
  return r;
}

CorollaryA2 corollary_a2(const Voa& voa, int s, int t, int N, MonoId u, MonoId v, int tail_bound) {
  check_hypothesis(s, N);
  CorollaryA2 out;
  out.head = UEAExpression::mode(corollary_a2_head_vector(voa, s, N, u, v), t - s);
  for (int k = N + 1; k + t <= tail_bound; ++k) {
    Rational c;
    for (int j = 0; j <= N; ++j)
      c += Rational(sign_power(j)) * binomial(N + s + j, j) * binomial(N + s + k, k - j);
    out.tail_k.add(pair_word(u, -k - s, v, k + t), c);
  }
  const Rational sign_d(sign_power(N + s + 1));
  for (int i = 0; N + 1 + i <= tail_bound; ++i) {
    Rational c;
    for (int j = 0; j <= N; ++j) c += binomial(N + s + j, j) * binomial(N + s + j + i, i);
    out.tail_d.add(pair_word(v, t - N - s - 1 - i, u, N + 1 + i), sign_d * c);
  }
  out.tail_k.set_tail_bound(tail_bound);
  out.tail_d.set_tail_bound(tail_bound);
  return out;
}

}  // namespace zhuforge
