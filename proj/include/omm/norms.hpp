#pragma once

#include "omm/errors.hpp"
#include "omm/types.hpp"

namespace omm {

enum class NormKind { Lp };

// An lp norm with p strictly inside (1, inf).  l1 and linf are rejected:
// they are neither strictly convex nor differentiable away from 0, which the
// gradient identities below rely on.
class NormSpec {
 public:
  NormSpec() : NormSpec(2.0) {}
  explicit NormSpec(double p);

  static NormSpec lp(double p) { return NormSpec(p); }
  static NormSpec l2() { return NormSpec(2.0); }

  NormKind kind() const { return NormKind::Lp; }
  double p() const { return p_; }
  double q() const { return q_; }  // conjugate exponent, 1/p + 1/q = 1
  bool is_l2() const { return p_ == 2.0; }

 private:
  double p_;
  double q_;
};

// Vectors with norm below this are treated as zero for gradient purposes.
inline constexpr double kZeroVectorThreshold = 1e-14;

double norm(const Vector& x, const NormSpec& spec);
double dual_norm(const Vector& w, const NormSpec& spec);

// grad_norm(x) = gradient of ||.|| at x.  Satisfies ||g||_* = 1 and
// g.dot(x) = ||x||.  Throws ZeroVector when ||x|| is numerically zero.
Vector grad_norm(const Vector& x, const NormSpec& spec);

// Gradient of the dual norm; grad_dual_norm(grad_norm(x)) = x / ||x||.
Vector grad_dual_norm(const Vector& w, const NormSpec& spec);

}  // namespace omm
