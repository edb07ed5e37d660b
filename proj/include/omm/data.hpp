#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omm/bounds.hpp"
#include "omm/types.hpp"

namespace omm {

// Plain-text schema sidecar.  One column per line, "name kind" with kind in
// {numeric, categorical, label}; the label line carries the positive token as
// a third field.  Directives: "!delimiter <char>", "!missing <token>".
// '#' starts a comment.
struct ColumnSpec {
  enum class Kind { Numeric, Categorical, Label };
  std::string name;
  Kind kind;
};

struct Schema {
  std::vector<ColumnSpec> columns;
  std::string positive_label;
  std::string missing_token = "?";
  char delimiter = ',';

  static Schema load(const std::string& path);
  long label_column() const;  // throws SchemaMismatch if not exactly one
};

struct RawTable {
  std::vector<std::vector<std::string>> rows;  // fields per schema column
};

// Delimiter-separated reader; trims surrounding whitespace, skips blank
// lines and '|'-prefixed comment lines.  Row arity must match the schema.
RawTable load_csv(const std::string& path, const Schema& schema);

struct Dataset {
  std::vector<LabeledPoint> points;
  long d = 0;
  std::vector<std::string> feature_names;
  std::optional<DatasetStats> stats;
};

// The preparation pipeline: drop rows with missing fields, encode each
// categorical with k observed levels as k-1 indicators (lexicographically
// first level dropped), standardize every column, then enforce strict
// separability by fitting a soft-margin linear classifier and removing
// points misclassified or within 0.01 of its decision boundary.
Dataset preprocess_adult(const RawTable& raw, const Schema& schema);

struct VariantConfig {
  double theta = 0.0;
  bool zero_bias = false;
  bool normalize_margin = true;
};

// Margin normalization (gamma* -> 1), optional bias zeroing, then the
// theta translation that inflates D_bar while leaving D, r, gamma* alone.
Dataset apply_variant(const Dataset& ds, const VariantConfig& cfg,
                      const NormSpec& spec = NormSpec::l2(), double tol = 1e-9);

// Number of adversarial steps in the alternating stream below,
// floor((c^2 + 4/c^2 + 5) / (2 (1 + 1/c^2))) = floor((c^2 + 4) / 2).
long example1_adversarial_steps(double c);

// Three-point adversarial stream: an alternating prefix of the two outer
// points for example1_adversarial_steps(c) steps, then `tail_steps` points
// cycling all three.  With exact_scale the coordinates are multiplied by c,
// which makes them integers for integer c so the induced perceptron
// recurrence is exact in floating point (mistake counts and r = D/gamma* are
// scale invariant); without it the raw coordinates (c,1), (c,-1), (c+2/c,-1)
// with gamma* = 1 are used.  Requires c > 2.
Stream gen_example1(double c, int tail_steps = 30, bool exact_scale = true);

// Two Gaussian clusters with every point resampled until it clears margin
// separation/2 around the separating hyperplane, so gamma* >= separation/2
// by construction.  Deterministic in the seed.
Stream gen_gaussian_clusters(int d, int n, double separation,
                             std::uint64_t seed);

// Text cache: header line "omm-dataset 1 <n> <d>", then one row per point,
// d feature values followed by the label, full double precision.
void save_dataset(const Dataset& ds, const std::string& path);
Dataset load_dataset(const std::string& path);

}  // namespace omm
