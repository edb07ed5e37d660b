#include "omm/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "omm/errors.hpp"
#include "omm/geometry.hpp"

namespace omm {

KappaValue kappa_circ_l2(double delta, double eta) {
  if (std::max(0.0, eta) > delta) return std::nullopt;
  if (eta < 0.0) return 1.0;
  if (delta == 0.0) return 1.0;  // eta == 0, z = 0 only
  if (eta <= std::min(delta * delta, delta)) {
    double ratio = eta / delta;
    return std::sqrt(std::max(0.0, 1.0 - ratio * ratio));
  }
  return std::sqrt(std::max(0.0, 1.0 + delta * delta - 2.0 * eta));
}

namespace {

// unit-lp vector at angle theta
Vector lp_dir(double theta, const NormSpec& spec) {
  Vector v(2);
  v << std::cos(theta), std::sin(theta);
  return v / norm(v, spec);
}

// For fixed directions of u and z the inner minimum is non-increasing in
// ||z||, so the outer maximum puts z on the constraint grad_norm(u).z = eta
// (eta > 0 here).  That reduces the search to the two angles.
double kappa_objective(double theta_u, double psi_z, double delta, double eta,
                       const NormSpec& spec, bool* feasible) {
  Vector u = lp_dir(theta_u, spec);
  Vector zdir = lp_dir(psi_z, spec);
  double c = grad_norm(u, spec).dot(zdir);
  if (c * delta < eta) {  // even the longest z along zdir misses the threshold
    *feasible = false;
    return -1.0;
  }
  *feasible = true;
  double rho = eta > 0.0 ? eta / c : 0.0;
  return segment_beta_star(u, rho * zdir, spec).value;
}

}  // namespace

KappaValue kappa_circ_numeric(double delta, double eta, const NormSpec& spec,
                              double resolution) {
  if (eta > delta) return std::nullopt;  // Holder: grad_norm(u).z <= ||z||
  if (eta <= 0.0) return 1.0;            // z = 0 is feasible and optimal

  const double two_pi = 2.0 * M_PI;
  double step = two_pi / 128.0;
  double best = -1.0, best_tu = 0.0, best_pz = 0.0;

  for (double tu = 0.0; tu < two_pi; tu += step) {
    for (double pz = 0.0; pz < two_pi; pz += step) {
      bool ok = false;
      double v = kappa_objective(tu, pz, delta, eta, spec, &ok);
      if (ok && v > best) {
        best = v;
        best_tu = tu;
        best_pz = pz;
      }
    }
  }
  if (best < 0.0) return std::nullopt;

  // local polish around the best coarse cell
  while (step > resolution) {
    double window = 2.0 * step;
    step = std::max(resolution, step / 8.0);
    double b_tu = best_tu, b_pz = best_pz;
    for (double tu = b_tu - window; tu <= b_tu + window; tu += step) {
      for (double pz = b_pz - window; pz <= b_pz + window; pz += step) {
        bool ok = false;
        double v = kappa_objective(tu, pz, delta, eta, spec, &ok);
        if (ok && v > best) {
          best = v;
          best_tu = tu;
          best_pz = pz;
        }
      }
    }
  }
  return best;
}

KappaValue kappa(double r, double phi, const NormSpec& spec) {
  double delta = 0.5 * r;
  double eta = 0.5 * (1.0 - phi);
  if (spec.is_l2()) return kappa_circ_l2(delta, eta);
  return kappa_circ_numeric(delta, eta, spec);
}

double m_phi_bound(const BoundInputs& in, const NormSpec& spec) {
  if (!(in.phi < 1.0)) throw InvalidParam("m_phi_bound: phi must be < 1");
  if (in.gamma3 <= 0.0 || in.gamma_star <= 0.0) {
    throw InvalidParam("m_phi_bound: gamma3 and gamma_star must be positive");
  }
  KappaValue k = kappa(in.r, in.phi, spec);
  if (!k.has_value()) return 0.0;  // phi < 1 - r
  double ratio = in.gamma3 / in.gamma_star;
  if (ratio <= 1.0) return 0.0;
  // phi < 1 makes eta > 0, so kappa < 1 strictly
  return std::log(ratio) / (-std::log(*k));
}

L2BoundBranch m_phi_bound_l2_explicit(const BoundInputs& in) {
  if (!(in.phi < 1.0)) throw InvalidParam("m_phi_bound: phi must be < 1");
  double s = in.r / (1.0 - in.phi);
  double lr = std::log(std::max(1.0, in.gamma3 / in.gamma_star));
  if (s < 1.0) return {0, 0.0};
  if (s < std::sqrt(2.0)) {
    return {1, 2.0 * lr / (-std::log(in.phi + in.r * in.r / 4.0))};
  }
  double q = (1.0 - in.phi) / in.r;
  return {2, 2.0 * lr / (-std::log(1.0 - q * q))};
}

double gamma3_upper_bound(double D, double gamma_star) {
  if (D < 0.0 || gamma_star < 0.0) {
    throw InvalidParam("gamma3_upper_bound: D and gamma_star must be >= 0");
  }
  return 2.0 * (D + gamma_star);
}

namespace {

// max pairwise lp distance within one class
double diameter(const std::vector<const Vector*>& pts, const NormSpec& spec) {
  const long n = static_cast<long>(pts.size());
  if (n <= 1) return 0.0;

  if (spec.is_l2()) {
    // blocked Gram products: ||xi - xj||^2 = ni + nj - 2 xi.xj
    const long d = pts[0]->size();
    const long block = 1024;
    Matrix X(n, d);
    for (long i = 0; i < n; ++i) X.row(i) = *pts[i];
    Vector sq = X.rowwise().squaredNorm();
    double best = 0.0;
    for (long i0 = 0; i0 < n; i0 += block) {
      long ib = std::min(block, n - i0);
      for (long j0 = i0; j0 < n; j0 += block) {
        long jb = std::min(block, n - j0);
        Matrix g = X.middleRows(i0, ib) * X.middleRows(j0, jb).transpose();
        for (long i = 0; i < ib; ++i) {
          for (long j = 0; j < jb; ++j) {
            double d2 = sq[i0 + i] + sq[j0 + j] - 2.0 * g(i, j);
            if (d2 > best) best = d2;
          }
        }
      }
    }
    return std::sqrt(std::max(0.0, best));
  }

  double best = 0.0;
  for (long i = 0; i < n; ++i) {
    for (long j = i + 1; j < n; ++j) {
      best = std::max(best, norm(*pts[i] - *pts[j], spec));
    }
  }
  return best;
}

}  // namespace

DatasetStats dataset_stats(const std::vector<LabeledPoint>& points,
                           const NormSpec& spec, double tol) {
  std::vector<const Vector*> plus, minus;
  double dbar = 0.0;
  for (const auto& p : points) {
    (p.y > 0 ? plus : minus).push_back(&p.x);
    dbar = std::max(dbar, norm(p.x, spec));
  }
  MaxMarginSolution sol = max_margin_offline(points, spec, tol);
  DatasetStats st;
  st.D_plus = diameter(plus, spec);
  st.D_minus = diameter(minus, spec);
  st.D = std::max(st.D_plus, st.D_minus);
  st.D_bar = dbar;
  st.gamma_star = sol.gamma;
  st.r = st.D / st.gamma_star;
  return st;
}

}  // namespace omm
