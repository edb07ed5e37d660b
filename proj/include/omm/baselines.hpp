#pragma once

#include <cmath>
#include <memory>

#include "omm/online.hpp"

namespace omm {

// How a baseline that natively learns a homogeneous classifier deals with a
// bias term.  AppendOne adds a constant-1 coordinate; AppendNegDbar adds a
// -Dbar coordinate (the ROMMA adaptation, needs Dbar up front); Native means
// the algorithm carries its own bias.
enum class BiasMode { Homogeneous, AppendOne, AppendNegDbar, Native };

struct AlmaParams {
  // ALMA(1-phi; B, C): threshold (1-alpha) B / sqrt(k) with alpha = 1 - phi,
  // step C / sqrt(k), projection onto the unit ball.
  double phi = 0.3;
  double B = std::sqrt(8.0) / (1.0 - 0.3);
  double C = std::sqrt(2.0);
};

struct BaselineConfig {
  enum class Algo { Perceptron, Romma, AggressiveRomma, Pumma, Alma };
  Algo algo = Algo::Perceptron;
  BiasMode bias_mode = BiasMode::Homogeneous;
  double pumma_delta = 0.01;
  AlmaParams alma;
  double dbar = 0.0;  // required by AppendNegDbar
  NormSpec norm{};    // baselines are l2 algorithms
};

const char* baseline_name(BaselineConfig::Algo algo);

// Factory; validates the bias-mode combinations (AppendNegDbar is only legal
// for the ROMMA variants, PUMMA carries its own bias, ALMA cannot be run
// with AppendNegDbar).
std::unique_ptr<OnlineLearner> make_baseline(const BaselineConfig& cfg);

}  // namespace omm
