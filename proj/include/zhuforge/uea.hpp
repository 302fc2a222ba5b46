#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zhuforge/voa.hpp"

namespace zhuforge {

/// J_shift(arg) = arg(Δ_arg - 1 + shift) for a basis element arg. Degree -shift.
struct Factor {
  MonoId arg;
  int shift = 0;

  friend bool operator==(const Factor&, const Factor&) = default;
  friend auto operator<=>(const Factor&, const Factor&) = default;
};

/// Product of current-algebra modes, leftmost factor first.
using Word = std::vector<Factor>;

int word_degree(const Word& w);  // -(sum of shifts)
int word_degree(const Word& w, std::size_t from);  // degree of the suffix starting at `from`

/// A word lies in U(V)_0^k = Σ_{i<=k} U(V)_{-i} U(V)_i because its suffix from
/// `position` has degree `suffix_degree` <= k.
struct FiltrationWitness {
  Word word;
  std::size_t position = 0;
  int suffix_degree = 0;
};

/// First suffix (scanning from the right) of degree <= k, if any.
std::optional<FiltrationWitness> find_witness(const Word& w, int k);

/// Finite linear combination of words in U(V̂). When the expression truncates an
/// infinite sum, tail_bound records that every dropped word has a last factor of
/// shift > tail_bound; such words kill every vector of weight <= tail_bound.
class UEAExpression {
 public:
  using Terms = std::map<Word, Rational>;

  UEAExpression() = default;
  /// One word; vacuum factors are normalized on the way in.
  static UEAExpression word(Word w, Rational c = Rational(1));
  /// J_shift(u) with u split into basis components.
  static UEAExpression mode(const FockVector& u, int shift);
  /// The raw mode u(m), rewritten as J_{m-Δb+1}(b) per basis component b.
  static UEAExpression raw_mode(const FockVector& u, int m);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const Word& w) const;

  /// Adds c·w after ⟨Vac⟩ normalization: J_0(vac) is the identity and J_k(vac)
  /// vanishes for k != 0.
  void add(Word w, const Rational& c);
  void add_scaled(const UEAExpression& e, const Rational& c);

  std::optional<int> tail_bound() const { return tail_bound_; }
  void set_tail_bound(std::optional<int> b) { tail_bound_ = b; }

  /// True if every word has degree d.
  bool homogeneous_of_degree(int d) const;

  UEAExpression& operator+=(const UEAExpression& o);
  UEAExpression& operator-=(const UEAExpression& o);
  UEAExpression& operator*=(const Rational& c);
  friend UEAExpression operator+(UEAExpression a, const UEAExpression& b) { return a += b; }
  friend UEAExpression operator-(UEAExpression a, const UEAExpression& b) { return a -= b; }
  friend UEAExpression operator*(const Rational& c, UEAExpression e) { return e *= c; }
  /// Concatenation product.
  friend UEAExpression operator*(const UEAExpression& a, const UEAExpression& b);
  /// Compares terms only.
  friend bool operator==(const UEAExpression& a, const UEAExpression& b) { return a.terms_ == b.terms_; }

 private:
  static std::optional<int> combine_bounds(std::optional<int> a, std::optional<int> b);

  Terms terms_;
  std::optional<int> tail_bound_;
};

/// "J[0](a[-1]vac)", "2 J[-1](a[-1]vac)J[1](a[-1]vac) - J[0](vac)"; "0" for zero.
std::string to_string(const Voa& voa, const Word& w);
std::string to_string(const Voa& voa, const UEAExpression& e);

/// [u(m), v(n)] = Σ_i C(m,i) (u_i v)(m+n-i).
UEAExpression vhat_bracket(const Voa& voa, const FockVector& u, int m, const FockVector& v, int n);

/// ^{(1)}J_{m,n,l} = Σ_i C(m+Δu-1, i) J_{m+n+l}(u_{l+i} v), u homogeneous.
UEAExpression j1_expand(const Voa& voa, const FockVector& u, const FockVector& v, int m, int n, int l);

/// ^{(2)}J_{m,n,l} = Σ_i (-1)^i C(l,i) (J_{m+l-i}(u) J_{n+i}(v) - (-1)^l J_{n+l-i}(v) J_{m+i}(u)).
/// For l < 0 the sum is infinite; only words whose last shift is <= right_bound are kept.
UEAExpression j2_expand(const Voa& voa, const FockVector& u, const FockVector& v, int m, int n, int l,
                        int right_bound);

/// Applies e to x, words acting right to left. Throws std::invalid_argument if x
/// has components above max_weight, or if e is truncated with a tail bound below
/// the weight of x (the dropped tail would not vanish).
FockVector evaluate_on(const Voa& voa, const UEAExpression& e, const FockVector& x, int max_weight);

/// Σ_{j=0}^N C(-N-s-1, j) ^{(2)}J_{N+1, t+j, -N-s-1-j} minus the right-hand side
/// J_{-s}(u)J_t(v) + Σ_{k>N} ... - Σ_i ..., compared on every quadratic word with
/// both shifts in [-bound, bound]. Zero when the identity holds. Requires N+s >= 0.
UEAExpression lemma_a1_residual(const Voa& voa, int s, int t, int N, MonoId u, MonoId v, int bound);

/// J_{-s}(u)J_t(v) = head - tail_k + tail_d. The head is a finite sum of single
/// modes; both tails are truncated at last shift <= tail_bound.
struct CorollaryA2 {
  UEAExpression head;
  UEAExpression tail_k;  // words J_{-k-s}(u) J_{k+t}(v), k >= N+1
  UEAExpression tail_d;  // words J_{t-N-s-1-i}(v) J_{N+1+i}(u), i >= 0
  UEAExpression rhs() const { return head - tail_k + tail_d; }
};
CorollaryA2 corollary_a2(const Voa& voa, int s, int t, int N, MonoId u, MonoId v, int tail_bound);

/// The head alone, Σ_j Σ_i C(-N-s-1,j) C(N+Δu,i) J_{t-s}(u_{-N-s-1-j+i} v), as a
/// vector r with head = J_{t-s}(r).
FockVector corollary_a2_head_vector(const Voa& voa, int s, int N, MonoId u, MonoId v);

}  // namespace zhuforge
