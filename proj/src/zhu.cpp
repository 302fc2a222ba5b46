#include "zhuforge/zhu.hpp"

#include <map>
#include <sstream>
#include <tuple>

#include "zhuforge/combinatorics.hpp"

namespace zhuforge {

namespace {

json common_params(const Voa& voa, int level, int cutoff) {
  return {{"voa", voa.name()}, {"central_charge", voa.central_charge().to_string()}, {"level", level}, {"cutoff", cutoff}};
}

/// Coefficient of u_{j-n-1}v in u *_n v after collecting the double sum by j = i - m.
Rational star_coefficient(int du, int n, int j) {
  Rational c;
  for (int m = 0; m <= n; ++m) c += Rational(sign_power(m)) * binomial(m + n, n) * binomial(du + n, m + j);
  return c;
}

/// u∘_n v for basis u, v, or nothing if some component exceeds weight W. Terms
/// are visited by increasing output weight so overflow is found on the cheapest
/// mode computation.
std::optional<FockVector> circ_fitting(const Voa& voa, MonoId u, MonoId v, int n, int W) {
  const int du = u.weight(), dv = v.weight();
  FockVector out;
  for (int i = du + n; i >= 0; --i) {
    const FockVector& term = voa.mode_action_basis(u, i - 2 * n - 2, v);
    if (du + dv + 2 * n + 1 - i > W) {
      if (!term.is_zero()) return std::nullopt;
      continue;
    }
    out.add_scaled(term, binomial(du + n, i));
  }
  return out;
}

/// Same for u *_n v.
std::optional<FockVector> star_fitting(const Voa& voa, MonoId u, MonoId v, int n, int W) {
  const int du = u.weight(), dv = v.weight();
  FockVector out;
  for (int j = du + n; j >= -n; --j) {
    Rational c = star_coefficient(du, n, j);
    if (c.is_zero()) continue;
    const FockVector& term = voa.mode_action_basis(u, j - n - 1, v);
    if (du + dv + n - j > W) {
      if (!term.is_zero()) return std::nullopt;
      continue;
    }
    out.add_scaled(term, c);
  }
  return out;
}

/// Memoized star_fitting on basis pairs, extended bilinearly.
class StarTable {
 public:
  StarTable(const Voa& voa, int n, int W) : voa_(voa), n_(n), W_(W) {}

  const std::optional<FockVector>& basis(MonoId u, MonoId v) {
    auto key = std::make_pair(u, v);
    auto it = memo_.find(key);
    if (it == memo_.end()) it = memo_.emplace(key, star_fitting(voa_, u, v, n_, W_)).first;
    return it->second;
  }

  /// Nothing if any basis product involved leaves the range.
  std::optional<FockVector> product(const FockVector& x, const FockVector& y) {
    FockVector out;
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y) {
        const auto& p = basis(a, b);
        if (!p) return std::nullopt;
        out.add_scaled(*p, ca * cb);
      }
    return out;
  }

 private:
  const Voa& voa_;
  int n_;
  int W_;
  std::map<std::pair<MonoId, MonoId>, std::optional<FockVector>> memo_;
};

}  // namespace

FockVector circ_n(const Voa& voa, const FockVector& u, const FockVector& v, int n) {
  FockVector out;
  for (const auto& [du, part] : u.by_weight())
    for (int i = 0; i <= du + n; ++i) out.add_scaled(voa.mode_action(part, i - 2 * n - 2, v), binomial(du + n, i));
  return out;
}

FockVector star_n(const Voa& voa, const FockVector& u, const FockVector& v, int n) {
  FockVector out;
  for (const auto& [du, part] : u.by_weight())
    for (int m = 0; m <= n; ++m)
      for (int i = 0; i <= du + n; ++i) {
        Rational c = Rational(sign_power(m)) * binomial(m + n, n) * binomial(du + n, i);
        out.add_scaled(voa.mode_action(part, i - m - n - 1, v), c);
      }
  return out;
}

FockVector zhu_circ(const Voa& voa, const FockVector& u, const FockVector& v) {
  FockVector out;
  for (const auto& [du, part] : u.by_weight())
    for (int i = 0; i <= du; ++i) out.add_scaled(voa.mode_action(part, i - 2, v), binomial(du, i));
  return out;
}

FockVector zhu_star(const Voa& voa, const FockVector& u, const FockVector& v) {
  FockVector out;
  for (const auto& [du, part] : u.by_weight())
    for (int i = 0; i <= du; ++i) out.add_scaled(voa.mode_action(part, i - 1, v), binomial(du, i));
  return out;
}

ZhuContext ZhuContext::build(const Voa& voa, int level, int cutoff, std::optional<int> left_weight) {
  if (level < 0 || cutoff < 0) throw std::invalid_argument("level and cutoff must be nonnegative");
  ZhuContext ctx;
  ctx.voa_ = &voa;
  ctx.level_ = level;
  ctx.cutoff_ = cutoff;
  ctx.left_weight_ = left_weight;
  const std::vector<MonoId> basis = voa.basis_up_to(cutoff);
  const std::vector<MonoId> left = left_weight ? voa.basis_up_to(std::min(*left_weight, cutoff)) : basis;
  for (MonoId u : left)
    for (MonoId v : basis) {
      // The lowest component of u∘_n v has weight Δv + n + 1.
      if (v.weight() + level + 1 > cutoff) continue;
      auto p = circ_fitting(voa, u, v, level, cutoff);
      if (!p) {
        ++ctx.discarded_;
        continue;
      }
      ++ctx.used_;
      ctx.echelon_.insert(p->terms());
    }
  for (MonoId u : voa.basis_up_to(cutoff - 1)) {
    FockVector x(u);
    FockVector t = voa.virasoro_mode(-1, x) + voa.virasoro_mode(0, x);
    ++ctx.used_;
    ctx.echelon_.insert(t.terms());
  }
  if (ctx.echelon_.is_pivot(MonoId{}))
    throw std::logic_error("fatal inconsistency: the vacuum lies in the truncated O_n span");
  return ctx;
}

void ZhuContext::check_range(const FockVector& x, const char* what) const {
  if (x.is_zero() || *x.max_weight() <= cutoff_) return;
  MonoId bad = x.terms().rbegin()->first;
  std::ostringstream msg;
  msg << what << " has component " << voa_->registry().to_string(bad) << " of weight " << bad.weight()
      << " above the cutoff " << cutoff_ << "; raise the cutoff";
  throw WeightOverflow(msg.str(), bad);
}

FockVector ZhuContext::reduce(const FockVector& x) const {
  check_range(x, "vector");
  return FockVector(echelon_.reduce(x.terms()));
}

FockVector ZhuContext::multiply(const FockVector& u, const FockVector& v) const {
  FockVector p = star_n(*voa_, u, v, level_);
  check_range(p, "product");
  return FockVector(echelon_.reduce(p.terms()));
}

std::size_t ZhuContext::rank_up_to(int w) const {
  std::size_t r = 0;
  for (const auto& [pivot, row] : echelon_.rows()) {
    if (pivot.weight() > w) break;
    ++r;
  }
  return r;
}

std::vector<FockVector> ZhuContext::span_basis() const {
  std::vector<FockVector> out;
  out.reserve(echelon_.rank());
  for (const auto& [pivot, row] : echelon_.rows()) out.emplace_back(row);
  return out;
}

json ZhuContext::to_json() const {
  json rows = json::array();
  for (const auto& [pivot, row] : echelon_.rows())
    rows.push_back({{"pivot", voa_->registry().to_string(pivot)}, {"vector", voa_->to_string(FockVector(row))}});
  json out = common_params(*voa_, level_, cutoff_);
  if (left_weight_) out["left_weight"] = *left_weight_;
  out["rank"] = echelon_.rank();
  out["rows"] = std::move(rows);
  return out;
}

std::string DimensionTable::to_csv() const {
  std::string s = "index,dim\n";
  for (const auto& [i, d] : rows) s += std::to_string(i) + "," + std::to_string(d) + "\n";
  return s;
}

json DimensionTable::to_json() const {
  json r = json::array();
  for (const auto& [i, d] : rows) r.push_back({{"index", i}, {"dim", d}});
  return {{"kind", kind}, {"parameters", parameters}, {"rows", std::move(r)}};
}

DimensionTable an_dims(const Voa& voa, int level, int cutoff) {
  ZhuContext ctx = ZhuContext::build(voa, level, cutoff);
  DimensionTable t;
  t.kind = "an";
  t.parameters = common_params(voa, level, cutoff);
  long total = 0;
  for (int w = 0; w <= cutoff; ++w) {
    total += static_cast<long>(voa.registry().dim(w));
    t.rows.emplace_back(w, total - static_cast<long>(ctx.rank_up_to(w)));
  }
  return t;
}

DimensionTable c2_dims(const Voa& voa, int cutoff) {
  DimensionTable t;
  t.kind = "c2";
  t.parameters = {{"voa", voa.name()}, {"central_charge", voa.central_charge().to_string()}, {"cutoff", cutoff}};
  for (int w = 0; w <= cutoff; ++w) {
    linalg::RowEchelon<MonoId> span;
    for (int du = 0; du <= w - 1; ++du)
      for (MonoId u : voa.registry().basis(du))
        for (MonoId v : voa.registry().basis(w - 1 - du)) {
          const FockVector& p = voa.mode_action_basis(u, -2, v);
          if (!p.is_zero()) span.insert(p.terms());
        }
    t.rows.emplace_back(w, static_cast<long>(voa.registry().dim(w)) - static_cast<long>(span.rank()));
  }
  return t;
}

ReportDocument inverse_system_check(const Voa& voa, int level, int cutoff) {
  if (level < 1) throw std::invalid_argument("the inverse system check needs level >= 1");
  ReportDocument report;
  report.config = common_params(voa, level, cutoff);
  ZhuContext upper = ZhuContext::build(voa, level, cutoff);
  ZhuContext lower = ZhuContext::build(voa, level - 1, cutoff);
  report.add(run_check("zhu.inverse_system", report.config, [&](CheckRecord& rec) {
    for (const FockVector& o : upper.span_basis()) {
      FockVector r = lower.reduce(o);
      rec.check(r.is_zero(), [&] { return json{{"vector", voa.to_string(o)}, {"residue", voa.to_string(r)}}; });
    }
    rec.data = {{"rank_level", upper.rank()}, {"rank_level_minus_one", lower.rank()}};
  }));
  return report;
}

ReportDocument zhu_structure_suite(const Voa& voa, int level, int cutoff) {
  return zhu_structure_suite(ZhuContext::build(voa, level, cutoff));
}

ReportDocument zhu_structure_suite(const ZhuContext& ctx) {
  const Voa& voa = ctx.voa();
  const int n = ctx.level(), W = ctx.cutoff();
  ReportDocument report;
  report.config = common_params(voa, n, W);
  const json& params = report.config;
  const std::vector<MonoId> basis = voa.basis_up_to(W);
  const std::vector<FockVector> span = ctx.span_basis();
  StarTable table(voa, n, W);
  auto str = [&](const FockVector& x) { return voa.to_string(x); };

  report.add(run_check("zhu.span", params, [&](CheckRecord& rec) {
    FockVector vac = FockVector::vacuum();
    rec.record(ctx.reduce(vac) == vac, {{"kind", "vacuum not in span"}});
    rec.data = {{"rank", ctx.rank()}, {"generators_used", ctx.generators_used()},
                {"generators_discarded", ctx.generators_discarded()}};
  }));
  report.add(run_check("zhu.translation_relation", params, [&](CheckRecord& rec) {
    for (MonoId u : voa.basis_up_to(W - 1)) {
      FockVector x(u);
      FockVector r = ctx.reduce(voa.virasoro_mode(-1, x) + voa.virasoro_mode(0, x));
      rec.check(r.is_zero(), [&] { return json{{"u", str(x)}, {"residue", str(r)}}; });
    }
  }));
  report.add(run_check("zhu.identity", params, [&](CheckRecord& rec) {
    const FockVector vac = FockVector::vacuum();
    for (MonoId b : basis) {
      FockVector x(b);
      const FockVector rx = ctx.reduce(x);
      if (auto left = table.product(vac, x)) {
        FockVector r = ctx.reduce(*left);
        rec.check(r == rx, [&] { return json{{"side", "left"}, {"x", str(x)}, {"got", str(r)}}; });
      }
      if (auto right = table.product(x, vac)) {
        FockVector r = ctx.reduce(*right);
        rec.check(r == rx, [&] { return json{{"side", "right"}, {"x", str(x)}, {"got", str(r)}}; });
      }
    }
  }));
  report.add(run_check("zhu.ideal", params, [&](CheckRecord& rec) {
    for (const FockVector& o : span)
      for (MonoId b : basis) {
        FockVector u(b);
        if (auto p = table.product(u, o)) {
          FockVector r = ctx.reduce(*p);
          rec.check(r.is_zero(), [&] { return json{{"side", "u*o"}, {"u", str(u)}, {"o", str(o)}, {"residue", str(r)}}; });
        }
        if (auto p = table.product(o, u)) {
          FockVector r = ctx.reduce(*p);
          rec.check(r.is_zero(), [&] { return json{{"side", "o*u"}, {"u", str(u)}, {"o", str(o)}, {"residue", str(r)}}; });
        }
      }
  }));
  report.add(run_check("zhu.associativity", params, [&](CheckRecord& rec) {
    for (MonoId a : basis)
      for (MonoId b : basis) {
        const auto& ab = table.basis(a, b);
        if (!ab) continue;
        for (MonoId c : basis) {
          const auto& bc = table.basis(b, c);
          if (!bc) continue;
          auto lhs = table.product(*ab, FockVector(c));
          if (!lhs) continue;
          auto rhs = table.product(FockVector(a), *bc);
          if (!rhs) continue;
          FockVector r = ctx.reduce(*lhs - *rhs);
          rec.check(r.is_zero(), [&] {
            return json{{"u", voa.registry().to_string(a)}, {"v", voa.registry().to_string(b)},
                        {"w", voa.registry().to_string(c)}, {"residue", str(r)}};
          });
        }
      }
  }));
  if (n == 0) {
    report.add(run_check("zhu.centrality", params, [&](CheckRecord& rec) {
      const FockVector& w = voa.omega();
      for (MonoId b : voa.basis_up_to(W - 2)) {
        FockVector x(b);
        auto left = table.product(w, x);
        auto right = table.product(x, w);
        bool ok = left && right;
        FockVector r;
        if (ok) {
          r = ctx.reduce(*left - *right);
          ok = r.is_zero();
        }
        rec.check(ok, [&] { return json{{"x", str(x)}, {"residue", str(r)}, {"in_range", left && right}}; });
      }
    }));
  }
  return report;
}

ReportDocument zhu_zero_identities(const Voa& voa, int cutoff) {
  ReportDocument report;
  report.config = {{"voa", voa.name()}, {"central_charge", voa.central_charge().to_string()}, {"cutoff", cutoff}};
  const json& params = report.config;
  const std::vector<MonoId> basis = voa.basis_up_to(cutoff);
  const FockVector vac = FockVector::vacuum();
  report.add(run_check("zhu.circ_vacuum", params, [&](CheckRecord& rec) {
    for (MonoId b : basis) {
      FockVector u(b);
      FockVector got = circ_n(voa, u, vac, 0);
      FockVector expect = voa.virasoro_mode(-1, u) + voa.virasoro_mode(0, u);
      rec.check(got == expect, [&] { return json{{"u", voa.to_string(u)}, {"got", voa.to_string(got)}}; });
    }
  }));
  report.add(run_check("zhu.circ_level_zero", params, [&](CheckRecord& rec) {
    for (MonoId a : basis)
      for (MonoId b : basis) {
        FockVector u(a), v(b);
        rec.check(circ_n(voa, u, v, 0) == zhu_circ(voa, u, v),
                  [&] { return json{{"u", voa.to_string(u)}, {"v", voa.to_string(v)}}; });
      }
  }));
  report.add(run_check("zhu.star_level_zero", params, [&](CheckRecord& rec) {
    for (MonoId a : basis)
      for (MonoId b : basis) {
        FockVector u(a), v(b);
        rec.check(star_n(voa, u, v, 0) == zhu_star(voa, u, v),
                  [&] { return json{{"u", voa.to_string(u)}, {"v", voa.to_string(v)}}; });
      }
  }));
  return report;
}

std::pair<OmegaSubspace, ReportDocument> omega_subspace(const Voa& voa, int level, int cutoff) {
  OmegaSubspace omega;
  omega.level = level;
  omega.cutoff = cutoff;
  ReportDocument report;
  report.config = common_params(voa, level, cutoff);
  const std::vector<MonoId> ops = voa.basis_up_to(cutoff);

  // Images are keyed by (operator, k, output basis element).
  using Key = std::tuple<std::uint64_t, int, std::uint64_t>;
  for (int w = 0; w <= cutoff; ++w) {
    const std::vector<MonoId> cols = voa.registry().basis(w);
    std::vector<linalg::SparseVec<Key>> images(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (MonoId v : ops)
        for (int k = level + 1; k <= w; ++k)
          for (const auto& [y, cy] : voa.mode_action_basis(v, v.weight() - 1 + k, cols[c]))
            images[c].emplace(Key{v.key(), k, y.key()}, cy);
    long dim = 0;
    for (const auto& kv : linalg::null_space(images)) {
      FockVector x;
      for (const auto& [c, coeff] : kv) x.add(cols[c], coeff);
      if (omega.echelon.insert(x.terms())) ++dim;
    }
    omega.dims.emplace_back(w, dim);
  }
  for (const auto& [pivot, row] : omega.echelon.rows()) omega.basis.emplace_back(row);
  omega.equals_low_weights = true;
  for (const auto& [w, d] : omega.dims) {
    long expect = w <= level ? static_cast<long>(voa.registry().dim(w)) : 0;
    if (d != expect) omega.equals_low_weights = false;
  }

  json dims = json::array();
  for (const auto& [w, d] : omega.dims) dims.push_back({{"weight", w}, {"dim", d}});
  report.add(run_check("omega.invariance", report.config, [&](CheckRecord& rec) {
    for (const FockVector& x : omega.basis)
      for (MonoId v : ops) {
        FockVector y = voa.mode_action(FockVector(v), v.weight() - 1, x);
        rec.check(omega.contains(y), [&] { return json{{"v", voa.registry().to_string(v)}, {"x", voa.to_string(x)}}; });
      }
    rec.data = {{"dims", dims},
                {"equals_low_weights", omega.equals_low_weights},
                {"caveat", "kernel and operators restricted to weight <= cutoff"}};
  }));
  return {std::move(omega), std::move(report)};
}

}  // namespace zhuforge
