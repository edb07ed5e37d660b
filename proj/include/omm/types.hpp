#pragma once

#include <Eigen/Core>
#include <vector>

namespace omm {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// sign(0) = +1 throughout.
inline int sign_pm(double v) { return v >= 0.0 ? +1 : -1; }

struct LabeledPoint {
  Vector x;
  int y;  // +1 or -1
};

using Stream = std::vector<LabeledPoint>;

struct LinearClassifier {
  Vector w;
  double b = 0.0;

  double score(const Vector& x) const { return w.dot(x) + b; }
  int predict(const Vector& x) const { return sign_pm(score(x)); }
};

}  // namespace omm
