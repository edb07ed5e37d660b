#pragma once

#include <vector>

#include "omm/norms.hpp"
#include "omm/types.hpp"

namespace omm {

// Computed hull distance at or below this means the hulls touch.
inline constexpr double kSeparabilityFloor = 1e-10;

// Nearest points between the two class hulls, with the convex weights that
// produce them.  coeffs_* index the point lists the pair was computed from.
struct CertificatePair {
  Vector v_plus;
  Vector v_minus;
  Vector coeffs_plus;
  Vector coeffs_minus;
};

struct ClassifierWithMargin {
  LinearClassifier classifier;
  double gamma;
};

struct MaxMarginSolution {
  LinearClassifier classifier;
  double gamma;  // = tau / 2
  CertificatePair certificates;
  double tau;  // hull distance
};

struct SegmentMin {
  double beta;   // minimizer in [0, 1]
  double value;  // min_{beta in [0,1]} ||u - beta z||
};

// min over beta in [0,1] of ||u - beta z||.  Closed form for l2; for other p
// a bisection on the derivative of the 1-D convex objective (100 iterations
// max, interval width 1e-12).  z = 0 returns beta = 0 with value ||u||.
SegmentMin segment_beta_star(const Vector& u, const Vector& z,
                             const NormSpec& spec);

// Maximum-margin classifier generated by a certificate pair:
// w = grad_norm(v+ - v-), b = -w.(v+ + v-)/2, gamma = ||v+ - v-|| / 2.
// Throws DegenerateCertificates when the certificates coincide.
ClassifierWithMargin classifier_from_certificates(const CertificatePair& cert,
                                                  const NormSpec& spec);

// Distance between conv(v_plus) and conv(v_minus) to within
// tol * (1 + distance), plus certificates and the induced classifier.
// Singleton/segment cases are solved in closed form; larger instances run an
// MDM-style pairwise descent with a duality-gap stopping rule.  Optional warm
// start coefficients must match the list sizes.
MaxMarginSolution hull_distance(const std::vector<Vector>& v_plus,
                                const std::vector<Vector>& v_minus,
                                const NormSpec& spec, double tol = 1e-9,
                                const Vector* warm_lambda = nullptr,
                                const Vector* warm_eta = nullptr);

// Splits by label and delegates to hull_distance.
MaxMarginSolution max_margin_offline(const std::vector<LabeledPoint>& points,
                                     const NormSpec& spec, double tol = 1e-9);

// max{0, y (w.x + b)} / ||w||_*.  Throws ZeroClassifier when ||w||_* = 0.
double margin(const Vector& x, int y, const Vector& w, double b,
              const NormSpec& spec);

// Signed variant (no clamping); used for dataset sweeps.
double signed_margin(const Vector& x, int y, const LinearClassifier& clf,
                     const NormSpec& spec);

}  // namespace omm
