#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace omm {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// One observed stream step.  `a` is the signed geometric margin of the
// classifier that made the prediction (NaN while no classifier exists).
// A post-initialization mistake is a margin-zero step, a <= 0; during
// initialization it is a plain label mismatch.
struct StepEvent {
  long step = 0;  // 1-based global index within the run
  int y = 0;
  int y_hat = 0;
  double a = kNaN;
  bool mistake = false;
  bool updated = false;
  bool init_phase = false;
  double gamma_before = kNaN;  // learner margin estimate, when it has one
  double gamma_after = kNaN;
};

struct RunReport {
  std::string algorithm;
  double theta = 0.0;
  bool zero_bias = false;
  int passes = 1;
  long steps = 0;
  long m = 0;                        // total mistakes
  std::optional<double> gamma_bar;   // final-classifier dataset margin, if > 0
  std::optional<long> tau;           // first step with positive dataset margin
  double wall_time_seconds = 0.0;
  std::optional<double> gamma3;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> pass_seeds;
  std::vector<StepEvent> events;
};

struct ViolationCounts {
  double phi;
  long m_phi;      // margin <= phi * gamma_t
  long m_bar_phi;  // margin <= phi * gamma_star
};

// Eq.-style violation counters over the post-initialization events.  Needs
// per-step gamma_t, so the report must come from a margin-tracking learner.
std::vector<ViolationCounts> violation_counts(const RunReport& report,
                                              double gamma_star,
                                              const std::vector<double>& phis);

}  // namespace omm
