#pragma once

#include "zhuforge/report.hpp"
#include "zhuforge/voa.hpp"

namespace zhuforge {

/// Which instances of the quantified axioms get evaluated. Every basis vector
/// of weight <= W is always used as the vector the operators act on.
struct SamplingPlan {
  int pair_weight = 4;   // u, v range over basis vectors of weight <= min(W, pair_weight)
  int index_radius = 3;  // |m|, |n|, |l| <= index_radius
};

/// Jacobi identity, vacuum, grading, translation, Virasoro bracket and
/// presentation consistency, all with exact equality on V_{<=W}.
ReportDocument axiom_suite(const Voa& voa, int max_weight, const SamplingPlan& plan = {});

/// Both sides of the Jacobi identity for (u, v, m, n, l) applied to x.
struct JacobiSides {
  FockVector lhs;
  FockVector rhs;
};
JacobiSides jacobi_sides(const Voa& voa, const FockVector& u, const FockVector& v, int m, int n, int l,
                         const FockVector& x);

}  // namespace zhuforge
