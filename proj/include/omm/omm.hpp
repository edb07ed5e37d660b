#pragma once

#include <memory>
#include <vector>

#include "omm/geometry.hpp"
#include "omm/online.hpp"

namespace omm {

enum class OmmVariant { Naive, Efficient };

struct OmmConfig {
  OmmVariant variant = OmmVariant::Efficient;
  double rho = 1.0;  // aggressiveness, in [0, 1]
  NormSpec norm{};
  double tol = 1e-9;
};

// The online maximum margin learner.
//
// Initialization: the first point is predicted +1; afterwards the first
// label is predicted until the opposite class appears.  Points are retained
// only when mispredicted, so once both classes are present the retained sets
// are singletons and become the first certificates.  From then on a step
// with a_t = y (w.x + b) < rho * gamma_t re-solves the hull problem:
// the naive variant over every retained point, the efficient variant over
// {v+, v-, x} which reduces to a segment minimization.
class OmmLearner final : public OnlineLearner {
 public:
  explicit OmmLearner(OmmConfig cfg);

  int predict(const Vector& x) const override;
  StepEvent update(const Vector& x, int y) override;

  bool has_classifier() const override { return running_; }
  LinearClassifier classifier() const override;
  const NormSpec& norm_spec() const override { return cfg_.norm; }
  std::string id() const override;

  std::optional<double> gamma_t() const override;
  std::optional<double> gamma3() const override;

  bool running() const { return running_; }
  const CertificatePair& certificates() const { return cert_; }
  // Source points behind the current certificate coefficients (naive: the
  // retained sets; efficient: previous certificate plus the update point).
  const std::vector<Vector>& update_sources_plus() const { return src_plus_; }
  const std::vector<Vector>& update_sources_minus() const { return src_minus_; }
  const std::vector<Vector>& retained_plus() const { return retained_plus_; }
  const std::vector<Vector>& retained_minus() const { return retained_minus_; }

 private:
  void enter_running(const Vector& v_plus, const Vector& v_minus);
  void resolve_naive(const Vector& x, int y);
  void resolve_efficient(const Vector& x, int y);

  OmmConfig cfg_;
  bool running_ = false;
  bool has_first_ = false;
  int first_label_ = +1;
  Vector first_x_;

  std::vector<Vector> retained_plus_, retained_minus_;  // naive variant
  Vector warm_lambda_, warm_eta_;
  std::vector<Vector> src_plus_, src_minus_;

  CertificatePair cert_;
  LinearClassifier clf_;
  double gamma_ = kNaN;
  double gamma3_ = kNaN;
};

// Convenience: folds a learner over one pass of the stream, counting
// mistakes (initialization included) and recording per-step events.
RunReport run_stream(const OmmConfig& cfg,
                     const std::vector<LabeledPoint>& stream);

}  // namespace omm
