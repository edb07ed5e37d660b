#include "omm/baselines.hpp"

#include <cmath>

#include "omm/errors.hpp"
#include "omm/geometry.hpp"

namespace omm {

const char* baseline_name(BaselineConfig::Algo algo) {
  switch (algo) {
    case BaselineConfig::Algo::Perceptron: return "perceptron";
    case BaselineConfig::Algo::Romma: return "romma";
    case BaselineConfig::Algo::AggressiveRomma: return "a-romma";
    case BaselineConfig::Algo::Pumma: return "pumma";
    case BaselineConfig::Algo::Alma: return "alma";
  }
  return "?";
}

namespace {

// Shared plumbing for the homogeneous-weight algorithms: input lifting per
// bias mode and the mapping back to an original-space classifier.
class LiftedLearner : public OnlineLearner {
 public:
  explicit LiftedLearner(BaselineConfig cfg) : cfg_(std::move(cfg)) {
    if (cfg_.bias_mode == BiasMode::AppendNegDbar && !(cfg_.dbar > 0.0)) {
      throw InvalidConfig("baseline: AppendNegDbar requires a positive dbar");
    }
  }

  int predict(const Vector& x) const override {
    if (w_.size() == 0) return +1;
    return sign_pm(w_.dot(lift(x)));
  }

  bool has_classifier() const override {
    if (w_.size() == 0) return false;
    return head_norm() > kZeroVectorThreshold;
  }

  LinearClassifier classifier() const override {
    if (!has_classifier()) throw Error("baseline: no classifier yet");
    LinearClassifier clf;
    switch (cfg_.bias_mode) {
      case BiasMode::Homogeneous:
        clf.w = w_;
        clf.b = 0.0;
        break;
      case BiasMode::AppendOne:
        clf.w = w_.head(w_.size() - 1);
        clf.b = w_[w_.size() - 1];
        break;
      case BiasMode::AppendNegDbar:
        clf.w = w_.head(w_.size() - 1);
        clf.b = -cfg_.dbar * w_[w_.size() - 1];
        break;
      case BiasMode::Native:
        throw InvalidConfig("baseline: Native bias in a lifted learner");
    }
    return clf;
  }

  const NormSpec& norm_spec() const override { return cfg_.norm; }
  std::string id() const override { return baseline_name(cfg_.algo); }

 protected:
  Vector lift(const Vector& x) const {
    if (cfg_.bias_mode == BiasMode::Homogeneous) return x;
    Vector xt(x.size() + 1);
    xt.head(x.size()) = x;
    xt[x.size()] = cfg_.bias_mode == BiasMode::AppendOne ? 1.0 : -cfg_.dbar;
    return xt;
  }

  // norm of the original-space part of the weights
  double head_norm() const {
    if (cfg_.bias_mode == BiasMode::Homogeneous) return w_.norm();
    return w_.head(w_.size() - 1).norm();
  }

  StepEvent base_event(const Vector& xt, int y) const {
    StepEvent ev;
    ev.y = y;
    if (w_.size() == 0 || w_.norm() == 0.0) {
      ev.y_hat = +1;
      ev.a = 0.0;  // zero weight: everything sits on the boundary
      ev.mistake = true;
    } else {
      // w.xt equals the original-space score w.x + b for every bias mode
      double s = w_.dot(xt);
      double hn = head_norm();
      ev.y_hat = sign_pm(s);
      ev.a = hn > 0.0 ? y * s / hn : (y * s > 0 ? 1.0 : (y * s < 0 ? -1.0 : 0.0));
      ev.mistake = (y * s <= 0.0);
    }
    return ev;
  }

  BaselineConfig cfg_;
  Vector w_;  // lifted space
};

class PerceptronLearner final : public LiftedLearner {
 public:
  using LiftedLearner::LiftedLearner;

  StepEvent update(const Vector& x, int y) override {
    Vector xt = lift(x);
    if (w_.size() == 0) w_ = Vector::Zero(xt.size());
    StepEvent ev = base_event(xt, y);
    if (y * w_.dot(xt) <= 0.0) {
      w_ += y * xt;
      ev.updated = true;
    }
    return ev;
  }
};

class RommaLearner final : public LiftedLearner {
 public:
  RommaLearner(BaselineConfig cfg, bool aggressive)
      : LiftedLearner(std::move(cfg)), aggressive_(aggressive) {}

  StepEvent update(const Vector& x, int y) override {
    Vector xt = lift(x);
    if (w_.size() == 0) w_ = Vector::Zero(xt.size());
    StepEvent ev = base_event(xt, y);

    const double s = w_.dot(xt);
    const double a = y * s;  // functional margin in the lifted space
    const bool fire = aggressive_ ? (a < 1.0) : (a <= 0.0);
    if (!fire) return ev;

    const double nw = w_.squaredNorm();
    const double nx = xt.squaredNorm();
    if (nx <= 0.0) return ev;
    if (nw == 0.0) {
      // degenerate start: scale y x to functional margin 1
      w_ = (static_cast<double>(y) / nx) * xt;
      ev.updated = true;
      return ev;
    }
    const double det = nx * nw - s * s;
    if (det <= kZeroVectorThreshold * nx * nw) {
      // x parallel to w: projecting onto {v: y v.x >= 1} alone
      w_ = (static_cast<double>(y) / nx) * xt;
      ev.updated = true;
      return ev;
    }
    // projection of w onto {v: y v.x >= 1} n {v: v.w >= ||w||^2}
    const double c = (nx * nw - a) / det;
    const double d = nw * (1.0 - a) / det;
    w_ = c * w_ + d * y * xt;
    ev.updated = true;
    return ev;
  }

 private:
  bool aggressive_;
};

class AlmaLearner final : public LiftedLearner {
 public:
  using LiftedLearner::LiftedLearner;

  StepEvent update(const Vector& x, int y) override {
    Vector xt = lift(x);
    Vector xn = xt;  // ALMA works on normalized inputs
    double n = xn.norm();
    if (n > 0.0) xn /= n;
    if (w_.size() == 0) w_ = Vector::Zero(xt.size());
    StepEvent ev = base_event(xt, y);

    const double alpha = 1.0 - cfg_.alma.phi;
    const double gamma_k = cfg_.alma.B / std::sqrt(static_cast<double>(k_));
    if (y * w_.dot(xn) <= (1.0 - alpha) * gamma_k) {
      const double eta = cfg_.alma.C / std::sqrt(static_cast<double>(k_));
      w_ += eta * y * xn;
      double wn = w_.norm();
      if (wn > 1.0) w_ /= wn;
      ++k_;
      ev.updated = true;
    }
    return ev;
  }

 private:
  long k_ = 1;
};

// PUMMA (l2, native bias): keeps one stored point per class, updating the
// same-label point on a margin violation and re-solving the two-point
// maximum margin problem subject to w.w_prev >= ||w_prev||^2.
class PummaLearner final : public OnlineLearner {
 public:
  explicit PummaLearner(BaselineConfig cfg) : cfg_(std::move(cfg)) {
    if (!cfg_.norm.is_l2()) {
      throw InvalidConfig("pumma: restricted to the l2 norm");
    }
    if (!(cfg_.pumma_delta >= 0.0 && cfg_.pumma_delta <= 1.0)) {
      throw InvalidConfig("pumma: delta must lie in [0, 1]");
    }
  }

  int predict(const Vector& x) const override {
    if (!running_) return has_first_ ? first_label_ : +1;
    return clf_.predict(x);
  }

  bool has_classifier() const override { return running_; }
  LinearClassifier classifier() const override {
    if (!running_) throw Error("pumma: no classifier yet");
    return clf_;
  }
  const NormSpec& norm_spec() const override { return cfg_.norm; }
  std::string id() const override { return "pumma"; }

  StepEvent update(const Vector& x, int y) override {
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
        x_plus_ = (y > 0) ? x : first_x_;
        x_minus_ = (y > 0) ? first_x_ : x;
        w_prev_ = Vector::Zero(x.size());
        solve();
        running_ = true;
        ev.updated = true;
      }
      return ev;
    }

    const double s = clf_.score(x);
    const double wn = clf_.w.norm();
    ev.y_hat = sign_pm(s);
    ev.a = y * s / wn;
    ev.mistake = (y * s <= 0.0);
    if (y * s < 1.0 - cfg_.pumma_delta) {
      if (y > 0) {
        x_plus_ = x;
      } else {
        x_minus_ = x;
      }
      solve();
      ev.updated = true;
    }
    return ev;
  }

 private:
  // min ||w||^2 with w.x+ + b >= 1, w.x- + b <= -1, w.w_prev >= ||w_prev||^2.
  void solve() {
    const Vector diff = x_plus_ - x_minus_;
    const double dd = diff.squaredNorm();
    if (dd <= kZeroVectorThreshold) {
      throw InfeasibleUpdate("pumma: stored points coincide across classes");
    }
    const double hist = w_prev_.squaredNorm();
    Vector w = (2.0 / dd) * diff;
    if (hist > 0.0 && w.dot(w_prev_) < hist * (1.0 - 1e-12)) {
      const double pd = w_prev_.dot(diff);
      if (pd >= 2.0) {
        // history constraint pins the previous weights; margins stay slack
        w = w_prev_;
      } else {
        const double det = dd * hist - pd * pd;
        if (det <= 1e-30) {
          // diff parallel to w_prev: scale to meet both constraints
          if (pd <= 0.0) {
            throw InfeasibleUpdate("pumma: constrained subproblem infeasible");
          }
          w = std::max(2.0 / pd, 1.0) * w_prev_;
        } else {
          const double alpha = (2.0 * hist - pd * hist) / det;
          const double beta = (dd * hist - 2.0 * pd) / det;
          if (alpha < -1e-12) {
            throw InfeasibleUpdate("pumma: constrained subproblem infeasible");
          }
          w = std::max(alpha, 0.0) * diff + beta * w_prev_;
        }
      }
    }
    clf_.w = w;
    clf_.b = -0.5 * w.dot(x_plus_ + x_minus_);
    w_prev_ = w;
  }

  BaselineConfig cfg_;
  bool running_ = false;
  bool has_first_ = false;
  int first_label_ = +1;
  Vector first_x_;
  Vector x_plus_, x_minus_;
  Vector w_prev_;
  LinearClassifier clf_;
};

}  // namespace

std::unique_ptr<OnlineLearner> make_baseline(const BaselineConfig& cfg) {
  using Algo = BaselineConfig::Algo;
  const bool romma_family =
      cfg.algo == Algo::Romma || cfg.algo == Algo::AggressiveRomma;
  if (cfg.bias_mode == BiasMode::AppendNegDbar && !romma_family) {
    throw InvalidConfig("baseline: AppendNegDbar is only valid for ROMMA");
  }
  switch (cfg.algo) {
    case Algo::Perceptron:
      if (cfg.bias_mode == BiasMode::Native) {
        throw InvalidConfig("perceptron: no native bias handling");
      }
      return std::make_unique<PerceptronLearner>(cfg);
    case Algo::Romma:
      return std::make_unique<RommaLearner>(cfg, false);
    case Algo::AggressiveRomma:
      return std::make_unique<RommaLearner>(cfg, true);
    case Algo::Alma:
      if (cfg.bias_mode == BiasMode::Native) {
        throw InvalidConfig("alma: no native bias handling");
      }
      return std::make_unique<AlmaLearner>(cfg);
    case Algo::Pumma:
      if (cfg.bias_mode != BiasMode::Native) {
        throw InvalidConfig("pumma: bias handling is native");
      }
      return std::make_unique<PummaLearner>(cfg);
  }
  throw InvalidConfig("baseline: unknown algorithm");
}

}  // namespace omm
