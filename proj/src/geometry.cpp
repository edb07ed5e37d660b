#include "omm/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace omm {

namespace {

constexpr int kBisectIterations = 100;
constexpr double kBisectWidth = 1e-12;

double seg_value(const Vector& u, const Vector& z, double beta,
                 const NormSpec& spec) {
  return norm(u - beta * z, spec);
}

// d/dbeta ||u - beta z|| = -grad_norm(u - beta z) . z
double seg_derivative(const Vector& u, const Vector& z, double beta,
                      const NormSpec& spec, bool* at_zero) {
  Vector r = u - beta * z;
  if (norm(r, spec) <= kZeroVectorThreshold) {
    *at_zero = true;
    return 0.0;
  }
  *at_zero = false;
  return -grad_norm(r, spec).dot(z);
}

SegmentMin segment_beta_star_lp(const Vector& u, const Vector& z,
                                const NormSpec& spec) {
  bool at_zero = false;
  double d0 = seg_derivative(u, z, 0.0, spec, &at_zero);
  if (at_zero) return {0.0, 0.0};
  if (d0 >= 0.0) return {0.0, seg_value(u, z, 0.0, spec)};
  double d1 = seg_derivative(u, z, 1.0, spec, &at_zero);
  if (at_zero) return {1.0, 0.0};
  if (d1 <= 0.0) return {1.0, seg_value(u, z, 1.0, spec)};

  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < kBisectIterations && hi - lo > kBisectWidth; ++it) {
    double mid = 0.5 * (lo + hi);
    double dm = seg_derivative(u, z, mid, spec, &at_zero);
    if (at_zero) return {mid, 0.0};
    if (dm < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double beta = 0.5 * (lo + hi);
  return {beta, seg_value(u, z, beta, spec)};
}

}  // namespace

SegmentMin segment_beta_star(const Vector& u, const Vector& z,
                             const NormSpec& spec) {
  const double zz = spec.is_l2() ? z.squaredNorm() : 0.0;
  if (norm(z, spec) <= kZeroVectorThreshold) {
    return {0.0, norm(u, spec)};
  }
  if (!spec.is_l2()) return segment_beta_star_lp(u, z, spec);

  const double uz = u.dot(z);
  if (uz < 0.0) {
    return {0.0, u.norm()};
  }
  if (uz <= zz) {
    double beta = uz / zz;
    double v2 = u.squaredNorm() - uz * uz / zz;
    return {beta, std::sqrt(std::max(0.0, v2))};
  }
  return {1.0, (u - z).norm()};
}

ClassifierWithMargin classifier_from_certificates(const CertificatePair& cert,
                                                  const NormSpec& spec) {
  Vector diff = cert.v_plus - cert.v_minus;
  double d = norm(diff, spec);
  if (d <= kZeroVectorThreshold) {
    throw DegenerateCertificates(
        "classifier_from_certificates: certificates coincide");
  }
  LinearClassifier clf;
  clf.w = grad_norm(diff, spec);
  clf.b = -0.5 * clf.w.dot(cert.v_plus + cert.v_minus);
  return {clf, 0.5 * d};
}

double margin(const Vector& x, int y, const Vector& w, double b,
              const NormSpec& spec) {
  double dn = dual_norm(w, spec);
  if (dn <= kZeroVectorThreshold) {
    throw ZeroClassifier("margin: ||w||_* is zero");
  }
  double a = y * (w.dot(x) + b);
  return std::max(0.0, a) / dn;
}

double signed_margin(const Vector& x, int y, const LinearClassifier& clf,
                     const NormSpec& spec) {
  double dn = dual_norm(clf.w, spec);
  if (dn <= kZeroVectorThreshold) {
    throw ZeroClassifier("signed_margin: ||w||_* is zero");
  }
  return y * clf.score(x) / dn;
}

namespace {

MaxMarginSolution finish_solution(CertificatePair cert, const NormSpec& spec) {
  double tau = norm(cert.v_plus - cert.v_minus, spec);
  if (tau <= kSeparabilityFloor) {
    throw NotSeparable("hull_distance: hulls intersect or touch (distance " +
                       std::to_string(tau) + ")");
  }
  auto cm = classifier_from_certificates(cert, spec);
  return {cm.classifier, cm.gamma, std::move(cert), tau};
}

// Segment vs point: conv{a0, a1} against {c}.  plus_side says which class the
// segment belongs to.
MaxMarginSolution segment_point_case(const Vector& a0, const Vector& a1,
                                     const Vector& c, bool segment_is_plus,
                                     const NormSpec& spec) {
  // || (1-beta) a0 + beta a1 - c || = || (a0 - c) - beta (a0 - a1) ||
  SegmentMin sm = segment_beta_star(a0 - c, a0 - a1, spec);
  Vector v_seg = (1.0 - sm.beta) * a0 + sm.beta * a1;
  Vector coeff_seg(2);
  coeff_seg << 1.0 - sm.beta, sm.beta;
  Vector coeff_point = Vector::Ones(1);
  CertificatePair cert;
  if (segment_is_plus) {
    cert = {v_seg, c, coeff_seg, coeff_point};
  } else {
    cert = {c, v_seg, coeff_point, coeff_seg};
  }
  return finish_solution(std::move(cert), spec);
}

struct MdmSide {
  Matrix pts;     // one point per row
  Vector coeffs;  // convex weights
};

// Pairwise (MDM-style) descent on ||v+ - v-|| over the product of simplices.
// Each iteration moves weight within one class from its worst support vertex
// toward the best vertex under the current gradient direction, with an exact
// (l2) or bisection (lp) line search.  Stops when the duality gap
// ||w|| - (min_+ s.x - max_- s.x) drops below tol * (1 + ||w||).
CertificatePair mdm_solve(MdmSide plus, MdmSide minus, const NormSpec& spec,
                          double tol) {
  const long np = plus.pts.rows(), nn = minus.pts.rows();
  Vector vp = plus.pts.transpose() * plus.coeffs;
  Vector vn = minus.pts.transpose() * minus.coeffs;

  const long max_iterations = 5'000'000;
  long since_refresh = 0;
  int stalls = 0;
  for (long it = 0; it < max_iterations; ++it) {
    Vector w = vp - vn;
    double dist = norm(w, spec);
    if (dist <= kSeparabilityFloor) break;  // overlapping hulls
    Vector s = grad_norm(w, spec);          // ||s||_* = 1, s.w = ||w||

    Vector sp = plus.pts * s;
    Vector sn = minus.pts * s;
    long ifw = 0, jfw = 0;
    double sp_min = sp.minCoeff(&ifw);
    double sn_max = sn.maxCoeff(&jfw);
    double gap = dist - (sp_min - sn_max);
    if (gap <= tol * (1.0 + dist)) break;

    // away vertices over the current supports
    long iaw = -1, jaw = -1;
    double sp_away = -std::numeric_limits<double>::infinity();
    double sn_away = std::numeric_limits<double>::infinity();
    for (long i = 0; i < np; ++i) {
      if (plus.coeffs[i] > 0.0 && sp[i] > sp_away) {
        sp_away = sp[i];
        iaw = i;
      }
    }
    for (long j = 0; j < nn; ++j) {
      if (minus.coeffs[j] > 0.0 && sn[j] < sn_away) {
        sn_away = sn[j];
        jaw = j;
      }
    }

    double dd_plus = sp_min - sp_away;   // derivative of ||w|| for the + move
    double dd_minus = sn_away - sn_max;  // and for the - move
    bool move_plus = dd_plus <= dd_minus;

    Vector dir;  // change of w per unit step
    double cap;
    if (move_plus) {
      dir = (plus.pts.row(ifw) - plus.pts.row(iaw)).transpose();
      cap = plus.coeffs[iaw];
    } else {
      dir = (minus.pts.row(jaw) - minus.pts.row(jfw)).transpose();
      cap = minus.coeffs[jaw];
    }
    if (cap <= 0.0) {
      if (++stalls > 64) break;
      continue;
    }

    double t;
    if (spec.is_l2()) {
      double dd = dir.squaredNorm();
      if (dd <= 0.0) {
        if (++stalls > 64) break;
        continue;
      }
      t = std::clamp(-w.dot(dir) / dd, 0.0, cap);
    } else {
      // minimize ||w + t dir|| over [0, cap] by bisection on the derivative
      auto deriv = [&](double tt) {
        Vector r = w + tt * dir;
        if (norm(r, spec) <= kZeroVectorThreshold) return 0.0;
        return grad_norm(r, spec).dot(dir);
      };
      if (deriv(0.0) >= 0.0) {
        t = 0.0;
      } else if (deriv(cap) <= 0.0) {
        t = cap;
      } else {
        double lo = 0.0, hi = cap;
        for (int b = 0; b < kBisectIterations && hi - lo > kBisectWidth; ++b) {
          double mid = 0.5 * (lo + hi);
          (deriv(mid) < 0.0 ? lo : hi) = mid;
        }
        t = 0.5 * (lo + hi);
      }
    }
    if (t <= 0.0) {
      if (++stalls > 64) break;
      continue;
    }
    stalls = 0;

    if (move_plus) {
      plus.coeffs[ifw] += t;
      plus.coeffs[iaw] -= t;
      if (plus.coeffs[iaw] < 1e-15) plus.coeffs[iaw] = 0.0;
      vp += t * dir;
    } else {
      minus.coeffs[jfw] += t;
      minus.coeffs[jaw] -= t;
      if (minus.coeffs[jaw] < 1e-15) minus.coeffs[jaw] = 0.0;
      vn -= t * dir;
    }

    if (++since_refresh >= 1024) {  // control accumulated drift
      vp = plus.pts.transpose() * plus.coeffs;
      vn = minus.pts.transpose() * minus.coeffs;
      since_refresh = 0;
    }
  }

  // clean the weights and recompute the certificates from them exactly
  auto normalize = [](Vector& c) {
    for (Eigen::Index i = 0; i < c.size(); ++i) c[i] = std::max(0.0, c[i]);
    double s = c.sum();
    if (s > 0.0) c /= s;
  };
  normalize(plus.coeffs);
  normalize(minus.coeffs);
  vp = plus.pts.transpose() * plus.coeffs;
  vn = minus.pts.transpose() * minus.coeffs;
  return {vp, vn, plus.coeffs, minus.coeffs};
}

Matrix rows_from(const std::vector<Vector>& pts) {
  Matrix m(static_cast<long>(pts.size()), pts.empty() ? 0 : pts[0].size());
  for (std::size_t i = 0; i < pts.size(); ++i) m.row(static_cast<long>(i)) = pts[i];
  return m;
}

}  // namespace

MaxMarginSolution hull_distance(const std::vector<Vector>& v_plus,
                                const std::vector<Vector>& v_minus,
                                const NormSpec& spec, double tol,
                                const Vector* warm_lambda,
                                const Vector* warm_eta) {
  if (v_plus.empty() || v_minus.empty()) {
    throw EmptyClass("hull_distance: both classes must be nonempty");
  }

  if (v_plus.size() == 1 && v_minus.size() == 1) {
    CertificatePair cert{v_plus[0], v_minus[0], Vector::Ones(1),
                         Vector::Ones(1)};
    return finish_solution(std::move(cert), spec);
  }
  if (v_plus.size() == 2 && v_minus.size() == 1) {
    return segment_point_case(v_plus[0], v_plus[1], v_minus[0], true, spec);
  }
  if (v_plus.size() == 1 && v_minus.size() == 2) {
    return segment_point_case(v_minus[0], v_minus[1], v_plus[0], false, spec);
  }

  MdmSide plus{rows_from(v_plus), Vector()};
  MdmSide minus{rows_from(v_minus), Vector()};
  if (warm_lambda && warm_lambda->size() == plus.pts.rows() &&
      warm_lambda->sum() > 0.0) {
    plus.coeffs = *warm_lambda / warm_lambda->sum();
  } else {
    plus.coeffs = Vector::Constant(plus.pts.rows(), 1.0 / plus.pts.rows());
  }
  if (warm_eta && warm_eta->size() == minus.pts.rows() &&
      warm_eta->sum() > 0.0) {
    minus.coeffs = *warm_eta / warm_eta->sum();
  } else {
    minus.coeffs = Vector::Constant(minus.pts.rows(), 1.0 / minus.pts.rows());
  }

  CertificatePair cert = mdm_solve(std::move(plus), std::move(minus), spec, tol);
  return finish_solution(std::move(cert), spec);
}

MaxMarginSolution max_margin_offline(const std::vector<LabeledPoint>& points,
                                     const NormSpec& spec, double tol) {
  std::vector<Vector> vp, vn;
  for (const auto& p : points) {
    (p.y > 0 ? vp : vn).push_back(p.x);
  }
  return hull_distance(vp, vn, spec, tol);
}

}  // namespace omm
