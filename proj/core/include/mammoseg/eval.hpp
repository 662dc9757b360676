#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mammoseg/segmentation.hpp"
#include "mammoseg/types.hpp"

namespace mammoseg {

struct ConfusionMatrix {
  long tp = 0;
  long fp = 0;
  long tn = 0;
  long fn = 0;

  long total() const { return tp + fp + tn + fn; }
  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

/// Standard screening counts over {0 = negative, 1 = positive} sequences.
/// A false negative is a negative prediction on a positive label.
ConfusionMatrix confusion(std::span<const int> predictions, std::span<const int> labels);

/// Metrics with zero denominators are reported as absent, never as 0.
struct ScreeningMetrics {
  std::optional<double> sensitivity;  // tp / (tp + fn)
  std::optional<double> specificity;  // tn / (tn + fp)
  std::optional<double> fnr;          // fn / (tp + fn)
  std::optional<double> accuracy;
  std::optional<double> precision;
};

ScreeningMetrics screening_metrics(const ConfusionMatrix& cm);

struct OverlapStats {
  double dice = 0;
  double jaccard = 0;
  std::optional<double> hausdorff;  // boundary-to-boundary, absent if a mask is empty
};

/// Throws InvalidArgument when both masks are empty (undefined overlap).
OverlapStats overlap(const Mask& a, const Mask& b);

struct CompareConfig {
  SaliencyConfig saliency;
  int rg_tau = 25;
  SnakeParams snake;
  double ac_init_radius = 40.0;
};

struct MethodRow {
  std::string method;
  bool ok = false;
  std::string error;
  OverlapStats stats;
  Mask mask;
};

/// Run saliency, region growing and active contour on the same input and
/// score each against the ground truth. A failing method yields a row with
/// ok == false; the run continues.
std::vector<MethodRow> compare_methods(const Image& img, Point seed,
                                       const Mask& ground_truth,
                                       const CompareConfig& cfg);

}  // namespace mammoseg
