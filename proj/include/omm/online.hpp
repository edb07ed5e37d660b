#pragma once

#include <memory>
#include <optional>
#include <string>

#include "omm/norms.hpp"
#include "omm/report.hpp"
#include "omm/types.hpp"

namespace omm {

// Common surface for the streaming learners.  update() consumes one labeled
// point and reports what happened; classifier() is always expressed in the
// original feature space regardless of any internal input transformation.
class OnlineLearner {
 public:
  virtual ~OnlineLearner() = default;

  virtual int predict(const Vector& x) const = 0;
  virtual StepEvent update(const Vector& x, int y) = 0;

  virtual bool has_classifier() const = 0;
  virtual LinearClassifier classifier() const = 0;
  virtual const NormSpec& norm_spec() const = 0;
  virtual std::string id() const = 0;

  // Margin bookkeeping, present only for the margin-tracking learner.
  virtual std::optional<double> gamma_t() const { return std::nullopt; }
  virtual std::optional<double> gamma3() const { return std::nullopt; }
};

}  // namespace omm
