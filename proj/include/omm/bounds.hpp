#pragma once

#include <optional>
#include <vector>

#include "omm/norms.hpp"
#include "omm/types.hpp"

namespace omm {

// kappa values live in (0, 1]; an empty optional is the infeasible case
// (the -inf branch).  Never encoded as a float sentinel.
using KappaValue = std::optional<double>;

// Closed form for the l2 norm:
//   1                   if eta < 0 <= delta
//   sqrt(1 - eta^2/delta^2)   if 0 <= eta <= min(delta^2, delta)
//   sqrt(1 + delta^2 - 2 eta) if delta^2 < eta <= delta
//   infeasible                if max(0, eta) > delta
KappaValue kappa_circ_l2(double delta, double eta);

// Grid-plus-polish maximization of min_beta ||u - beta z|| over ||u|| = 1,
// ||z|| <= delta, grad_norm(u).z >= eta, searched in d = 2 (the optimum of
// the defining program is attained in a two-dimensional section).  The final
// grid step is at most `resolution` radians.
KappaValue kappa_circ_numeric(double delta, double eta, const NormSpec& spec,
                              double resolution = 1e-3);

// kappa(r, phi) = kappa_circ(r/2, (1 - phi)/2); closed form when p = 2.
KappaValue kappa(double r, double phi, const NormSpec& spec);

struct BoundInputs {
  double r;
  double phi;  // must be < 1
  double gamma3;
  double gamma_star;
};

// Violation-count bound: 0 when phi < 1 - r (kappa infeasible), otherwise
// log(gamma3/gamma_star) / (-log kappa(r, phi)).
double m_phi_bound(const BoundInputs& in, const NormSpec& spec);

// The explicit l2 display with branches cut at r/(1-phi) = 1 and sqrt(2).
// For phi > 0 the sqrt(2) cut differs slightly from the exact kappa branch
// boundary; m_phi_bound is the authoritative value.
struct L2BoundBranch {
  int branch;  // 0: zero, 1: middle (phi + r^2/4), 2: top (1 - ((1-phi)/r)^2)
  double value;
};
L2BoundBranch m_phi_bound_l2_explicit(const BoundInputs& in);

// gamma_3 <= 2 (D + gamma_star)
double gamma3_upper_bound(double D, double gamma_star);

struct DatasetStats {
  double D_plus;
  double D_minus;
  double D;
  double D_bar;
  double gamma_star;
  double r;
};

// Exact pairwise class diameters, max point norm, offline margin and
// r = D / gamma_star.  The l2 diameters use blocked Gram products so the
// O(n^2) scan stays fast at tens of thousands of points.
DatasetStats dataset_stats(const std::vector<LabeledPoint>& points,
                           const NormSpec& spec, double tol = 1e-9);

}  // namespace omm
