#include "zhuforge/axioms.hpp"

#include <algorithm>
#include <map>

#include "zhuforge/combinatorics.hpp"

namespace zhuforge {

namespace {

json vec_json(const Voa& voa, const FockVector& v) { return voa.to_string(v); }

json mono_json(const Voa& voa, MonoId id) { return voa.registry().to_string(id); }

json with(json base, const json& extra) {
  base.update(extra);
  return base;
}

/// Formal value of [g_m, h_n] in the bracket table: (target mode -> coeff), with
/// the central part keyed by a sentinel generator index.
std::map<std::pair<std::size_t, int>, Rational> formal_bracket(const VOAPresentation& p, std::size_t g, int m,
                                                               std::size_t h, int n) {
  constexpr std::size_t kCentral = static_cast<std::size_t>(-1);
  std::map<std::pair<std::size_t, int>, Rational> out;
  for (const auto& t : p.bracket(g, h)) {
    Rational c = t.coeff.eval(m, n);
    if (c.is_zero()) continue;
    if (t.target) {
      out[{*t.target, m + n}] += c;
    } else if (m + n == 0) {
      out[{kCentral, 0}] += c;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace

JacobiSides jacobi_sides(const Voa& voa, const FockVector& u, const FockVector& v, int m, int n, int l,
                         const FockVector& x) {
  JacobiSides out;
  const Rational sign_l(sign_power(l));
  for (const auto& [ui, cu] : u)
    for (const auto& [vi, cv] : v)
      for (const auto& [xi, cx] : x) {
        const Rational scale = cu * cv * cx;
        const int du = ui.weight(), dv = vi.weight(), wx = xi.weight();
        // LHS: Σ_k (-1)^k C(l,k) (u_{m+l-k} v_{n+k} x - (-1)^l v_{n+l-k} u_{m+k} x)
        const int kmax = l >= 0 ? l : std::max(dv + wx - n - 1, du + wx - m - 1);
        for (int k = 0; k <= kmax; ++k) {
          Rational c = binomial(l, k) * Rational(sign_power(k)) * scale;
          if (c.is_zero()) continue;
          for (const auto& [y, cy] : voa.mode_action_basis(vi, n + k, xi))
            out.lhs.add_scaled(voa.mode_action_basis(ui, m + l - k, y), c * cy);
          const Rational c2 = -(sign_l * c);
          for (const auto& [y, cy] : voa.mode_action_basis(ui, m + k, xi))
            out.lhs.add_scaled(voa.mode_action_basis(vi, n + l - k, y), c2 * cy);
        }
        // RHS: Σ_k C(m,k) (u_{l+k} v)_{m+n-k} x
        int rmax = du + dv - l - 1;
        if (m >= 0) rmax = std::min(rmax, m);
        for (int k = 0; k <= rmax; ++k) {
          Rational c = binomial(m, k) * scale;
          if (c.is_zero()) continue;
          for (const auto& [y, cy] : voa.mode_action_basis(ui, l + k, vi))
            out.rhs.add_scaled(voa.mode_action_basis(y, m + n - k, xi), c * cy);
        }
      }
  return out;
}

ReportDocument axiom_suite(const Voa& voa, int W, const SamplingPlan& plan) {
  ReportDocument report;
  const auto& pres = voa.presentation();
  const int r = plan.index_radius;
  const int pw = std::min(W, plan.pair_weight);
  const std::vector<MonoId> targets = voa.basis_up_to(W);
  const std::vector<MonoId> pairs = voa.basis_up_to(pw);
  const json common = {{"voa", voa.name()}, {"central_charge", voa.central_charge().to_string()}, {"cutoff", W}};

  report.add(run_check("presentation.antisymmetry", common, [&](CheckRecord& rec) {
    for (std::size_t g = 0; g < pres.generators.size(); ++g)
      for (std::size_t h = 0; h < pres.generators.size(); ++h)
        for (int m = -r - 2; m <= r + 2; ++m)
          for (int n = -r - 2; n <= r + 2; ++n) {
            auto a = formal_bracket(pres, g, m, h, n);
            auto b = formal_bracket(pres, h, n, g, m);
            for (auto& [k, c] : b) a[k] += c;
            bool ok = std::all_of(a.begin(), a.end(), [](const auto& kv) { return kv.second.is_zero(); });
            rec.record(ok, {{"g", pres.generators[g].label}, {"h", pres.generators[h].label}, {"m", m}, {"n", n}});
          }
  }));
  report.add(run_check("presentation.virasoro_element", common, [&](CheckRecord& rec) {
    const FockVector& w = voa.omega();
    rec.record(!w.is_zero() && w.is_homogeneous() && *w.max_weight() == 2, {{"omega", vec_json(voa, w)}});
    FockVector w3w = voa.mode_action(w, 3, w);
    FockVector expect = (voa.central_charge() / Rational(2)) * FockVector::vacuum();
    rec.record(w3w == expect, {{"omega_3_omega", vec_json(voa, w3w)}, {"expected", vec_json(voa, expect)}});
  }));
  report.add(run_check("vacuum", common, [&](CheckRecord& rec) {
    const FockVector vac = FockVector::vacuum();
    for (MonoId id : targets) {
      FockVector v(id);
      for (int i = -1; i <= id.weight() + 1; ++i) {
        FockVector got = voa.mode_action(v, i, vac);
        FockVector expect = i == -1 ? v : FockVector();
        rec.record(got == expect, {{"kind", "v_i vac"}, {"v", mono_json(voa, id)}, {"i", i}, {"got", vec_json(voa, got)}});
      }
      for (int i = -r - 1; i <= r; ++i) {
        FockVector got = voa.mode_action(vac, i, v);
        FockVector expect = i == -1 ? v : FockVector();
        rec.record(got == expect, {{"kind", "vac_i x"}, {"x", mono_json(voa, id)}, {"i", i}, {"got", vec_json(voa, got)}});
      }
    }
  }));
  report.add(run_check("grading", common, [&](CheckRecord& rec) {
    for (MonoId id : targets) {
      FockVector x(id);
      FockVector got = voa.virasoro_mode(0, x);
      rec.record(got == Rational(id.weight()) * x, {{"x", mono_json(voa, id)}, {"got", vec_json(voa, got)}});
    }
  }));
  report.add(run_check("truncation", common, [&](CheckRecord& rec) {
    for (MonoId ui : pairs)
      for (MonoId vi : pairs) {
        FockVector u(ui), v(vi);
        int bound = voa.truncation_index(u, v);
        bool ok = bound <= ui.weight() + vi.weight();
        for (int j = bound; j < bound + 4 && ok; ++j) ok = voa.mode_action(u, j, v).is_zero();
        rec.record(ok, {{"u", mono_json(voa, ui)}, {"v", mono_json(voa, vi)}, {"index", bound}});
      }
  }));
  report.add(run_check("translation", common, [&](CheckRecord& rec) {
    for (MonoId ui : pairs) {
      FockVector u(ui);
      FockVector du = voa.virasoro_mode(-1, u);
      for (int n = -r; n <= r; ++n)
        for (MonoId xi : targets) {
          FockVector x(xi);
          FockVector lhs = voa.mode_action(du, n, x);
          FockVector rhs = Rational(-n) * voa.mode_action(u, n - 1, x);
          rec.check(lhs == rhs, [&] { return json{{"u", mono_json(voa, ui)}, {"n", n}, {"x", mono_json(voa, xi)}}; });
        }
    }
  }));
  report.add(run_check("virasoro_bracket", common, [&](CheckRecord& rec) {
    const Rational c = voa.central_charge();
    for (int m = -r; m <= r; ++m)
      for (int n = -r; n <= r; ++n) {
        bool ok = true;
        json bad_x;
        for (MonoId xi : targets) {
          FockVector x(xi);
          FockVector lhs = voa.virasoro_mode(m, voa.virasoro_mode(n, x)) - voa.virasoro_mode(n, voa.virasoro_mode(m, x));
          FockVector rhs = Rational(m - n) * voa.virasoro_mode(m + n, x);
          if (m + n == 0) rhs.add_scaled(x, c * Rational(m * m * m - m, 12));
          if (lhs != rhs) {
            ok = false;
            bad_x = mono_json(voa, xi);
            break;
          }
        }
        rec.record(ok, {{"m", m}, {"n", n}, {"x", bad_x}});
      }
  }));
  report.add(run_check("jacobi", with(common, {{"pair_weight", pw}, {"index_radius", r}}), [&](CheckRecord& rec) {
    for (MonoId ui : pairs)
      for (MonoId vi : pairs) {
        FockVector u(ui), v(vi);
        for (int m = -r; m <= r; ++m)
          for (int n = -r; n <= r; ++n)
            for (int l = -r; l <= r; ++l)
              for (MonoId xi : targets) {
                auto sides = jacobi_sides(voa, u, v, m, n, l, FockVector(xi));
                rec.check(sides.lhs == sides.rhs, [&] {
                  return json{{"u", mono_json(voa, ui)}, {"v", mono_json(voa, vi)}, {"m", m},
                              {"n", n},                  {"l", l},                  {"x", mono_json(voa, xi)}};
                });
              }
      }
  }));
  report.config = common;
  return report;
}

}  // namespace zhuforge
