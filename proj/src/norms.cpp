#include "omm/norms.hpp"

#include <cmath>
#include <limits>

namespace omm {

NormSpec::NormSpec(double p) : p_(p) {
  if (!(p > 1.0) || !(p < std::numeric_limits<double>::infinity()) ||
      std::isnan(p)) {
    throw InvalidParam("NormSpec: p must lie strictly in (1, inf), got " +
                       std::to_string(p));
  }
  q_ = p / (p - 1.0);
}

namespace {

// (sum |x_i/M|^p)^(1/p) * M with M = max|x_i|; rescaling keeps the powers in
// range for p far from 2.
double lp_norm(const Vector& x, double p) {
  if (x.size() == 0) return 0.0;
  const double m = x.cwiseAbs().maxCoeff();
  if (m == 0.0) return 0.0;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    sum += std::pow(std::abs(x[i]) / m, p);
  }
  return m * std::pow(sum, 1.0 / p);
}

// Gradient of the lp norm; 0-homogeneous, so evaluate on x / max|x_i|.
Vector lp_grad(const Vector& x, double p) {
  const double m = x.cwiseAbs().maxCoeff();
  Vector u = x / m;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    sum += std::pow(std::abs(u[i]), p);
  }
  const double denom = std::pow(sum, (p - 1.0) / p);
  Vector g(u.size());
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    const double a = std::pow(std::abs(u[i]), p - 1.0);
    g[i] = (u[i] < 0.0 ? -a : a) / denom;
  }
  return g;
}

}  // namespace

double norm(const Vector& x, const NormSpec& spec) {
  if (spec.is_l2()) return x.norm();
  return lp_norm(x, spec.p());
}

double dual_norm(const Vector& w, const NormSpec& spec) {
  if (spec.is_l2()) return w.norm();
  return lp_norm(w, spec.q());
}

Vector grad_norm(const Vector& x, const NormSpec& spec) {
  if (norm(x, spec) <= kZeroVectorThreshold) {
    throw ZeroVector("grad_norm: vector is numerically zero");
  }
  if (spec.is_l2()) return x / x.norm();
  return lp_grad(x, spec.p());
}

Vector grad_dual_norm(const Vector& w, const NormSpec& spec) {
  if (dual_norm(w, spec) <= kZeroVectorThreshold) {
    throw ZeroVector("grad_dual_norm: vector is numerically zero");
  }
  if (spec.is_l2()) return w / w.norm();
  return lp_grad(w, spec.q());
}

}  // namespace omm
