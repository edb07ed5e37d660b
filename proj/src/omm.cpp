#include "omm/omm.hpp"

#include <cmath>

#include "omm/errors.hpp"

namespace omm {

OmmLearner::OmmLearner(OmmConfig cfg) : cfg_(std::move(cfg)) {
  if (!(cfg_.rho >= 0.0 && cfg_.rho <= 1.0)) {
    throw InvalidConfig("OmmLearner: rho must lie in [0, 1], got " +
                        std::to_string(cfg_.rho));
  }
  if (!(cfg_.tol > 0.0)) {
    throw InvalidConfig("OmmLearner: tol must be positive");
  }
}

int OmmLearner::predict(const Vector& x) const {
  if (!running_) {
    return has_first_ ? first_label_ : +1;
  }
  return clf_.predict(x);
}

LinearClassifier OmmLearner::classifier() const {
  if (!running_) throw Error("OmmLearner: no classifier yet");
  return clf_;
}

std::optional<double> OmmLearner::gamma_t() const {
  if (!running_) return std::nullopt;
  return gamma_;
}

std::optional<double> OmmLearner::gamma3() const {
  if (!running_) return std::nullopt;
  return gamma3_;
}

std::string OmmLearner::id() const {
  if (cfg_.variant == OmmVariant::Naive) return "n-omm";
  if (cfg_.rho == 0.0) return "ce-omm";
  if (cfg_.rho == 1.0) return "e-omm";
  return "e-omm(rho=" + std::to_string(cfg_.rho) + ")";
}

void OmmLearner::enter_running(const Vector& v_plus, const Vector& v_minus) {
  cert_ = {v_plus, v_minus, Vector::Ones(1), Vector::Ones(1)};
  double tau = norm(v_plus - v_minus, cfg_.norm);
  if (tau <= kSeparabilityFloor) {
    throw NotSeparable(
        "OmmLearner: initialization points coincide across classes");
  }
  auto cm = classifier_from_certificates(cert_, cfg_.norm);
  clf_ = cm.classifier;
  gamma_ = cm.gamma;
  gamma3_ = cm.gamma;
  src_plus_ = {v_plus};
  src_minus_ = {v_minus};
  if (cfg_.variant == OmmVariant::Naive) {
    retained_plus_ = {v_plus};
    retained_minus_ = {v_minus};
    warm_lambda_ = Vector::Ones(1);
    warm_eta_ = Vector::Ones(1);
  }
  running_ = true;
}

void OmmLearner::resolve_naive(const Vector& x, int y) {
  Vector warm_l = warm_lambda_, warm_e = warm_eta_;
  if (y > 0) {
    retained_plus_.push_back(x);
    warm_l.conservativeResize(warm_l.size() + 1);
    warm_l[warm_l.size() - 1] = 0.0;
  } else {
    retained_minus_.push_back(x);
    warm_e.conservativeResize(warm_e.size() + 1);
    warm_e[warm_e.size() - 1] = 0.0;
  }
  MaxMarginSolution sol = hull_distance(retained_plus_, retained_minus_,
                                        cfg_.norm, cfg_.tol, &warm_l, &warm_e);
  cert_ = sol.certificates;
  clf_ = sol.classifier;
  gamma_ = sol.gamma;
  warm_lambda_ = cert_.coeffs_plus;
  warm_eta_ = cert_.coeffs_minus;
  src_plus_ = retained_plus_;
  src_minus_ = retained_minus_;
}

void OmmLearner::resolve_efficient(const Vector& x, int y) {
  const Vector u = cert_.v_plus - cert_.v_minus;
  if (y > 0) {
    // conv{v+, x} against v-
    const Vector z = cert_.v_plus - x;
    SegmentMin sm = segment_beta_star(u, z, cfg_.norm);
    if (sm.value <= kSeparabilityFloor) {
      throw NotSeparable("OmmLearner: update point collapses the margin");
    }
    src_plus_ = {cert_.v_plus, x};
    src_minus_ = {cert_.v_minus};
    Vector cp(2);
    cp << 1.0 - sm.beta, sm.beta;
    cert_.v_plus = cert_.v_plus - sm.beta * z;
    cert_.coeffs_plus = cp;
    cert_.coeffs_minus = Vector::Ones(1);
  } else {
    const Vector z = x - cert_.v_minus;
    SegmentMin sm = segment_beta_star(u, z, cfg_.norm);
    if (sm.value <= kSeparabilityFloor) {
      throw NotSeparable("OmmLearner: update point collapses the margin");
    }
    src_plus_ = {cert_.v_plus};
    src_minus_ = {cert_.v_minus, x};
    Vector cm(2);
    cm << 1.0 - sm.beta, sm.beta;
    cert_.v_minus = cert_.v_minus + sm.beta * z;
    cert_.coeffs_minus = cm;
    cert_.coeffs_plus = Vector::Ones(1);
  }
  auto cmg = classifier_from_certificates(cert_, cfg_.norm);
  clf_ = cmg.classifier;
  gamma_ = cmg.gamma;
}

StepEvent OmmLearner::update(const Vector& x, int y) {
  StepEvent ev;
  ev.y = y;

  if (!running_) {
    ev.init_phase = true;
    ev.y_hat = predict(x);
    ev.mistake = (ev.y_hat != y);
    if (!has_first_) {
      has_first_ = true;
      first_label_ = y;
      first_x_ = x;
      ev.updated = true;
    } else if (y != first_label_) {
      const Vector& vp = (y > 0) ? x : first_x_;
      const Vector& vn = (y > 0) ? first_x_ : x;
      enter_running(vp, vn);
      ev.updated = true;
      ev.gamma_after = gamma_;
    }
    return ev;
  }

  // ||w||_* = 1, so the raw score is the signed geometric margin
  const double a = y * clf_.score(x);
  ev.y_hat = sign_pm(clf_.score(x));
  ev.a = a;
  ev.mistake = (a <= 0.0);
  ev.gamma_before = gamma_;

  if (a < cfg_.rho * gamma_) {
    if (cfg_.variant == OmmVariant::Naive) {
      resolve_naive(x, y);
    } else {
      resolve_efficient(x, y);
    }
    ev.updated = true;
  }
  ev.gamma_after = gamma_;
  return ev;
}

RunReport run_stream(const OmmConfig& cfg,
                     const std::vector<LabeledPoint>& stream) {
  OmmLearner learner(cfg);
  RunReport report;
  report.algorithm = learner.id();
  long t = 0;
  for (const auto& p : stream) {
    StepEvent ev = learner.update(p.x, p.y);
    ev.step = ++t;
    if (ev.mistake) ++report.m;
    report.events.push_back(ev);
  }
  report.steps = t;
  report.gamma3 = learner.gamma3();
  return report;
}

}  // namespace omm
