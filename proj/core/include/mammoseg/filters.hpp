#pragma once

#include <vector>

#include "mammoseg/types.hpp"

namespace mammoseg {

/// Dense double-valued raster used for blurred images and gradient fields.
struct FieldF {
  int width = 0;
  int height = 0;
  std::vector<double> data;

  FieldF() = default;
  FieldF(int w, int h, double fill = 0.0)
      : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {}

  double at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }
  double& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }

  /// Bilinear sample with edge clamping.
  double sample(double x, double y) const;
};

FieldF to_field(const Image& img);

/// Separable Gaussian blur; sigma <= 0 returns the input unchanged.
FieldF gaussian_blur(const FieldF& src, double sigma);

/// Central-difference gradient magnitude (edges use one-sided differences).
FieldF gradient_magnitude(const FieldF& src);

/// Squared gradient magnitude of the raw image, central differences.
FieldF gradient_sq(const Image& img);

/// Otsu threshold over values histogrammed into `bins` buckets spanning
/// [lo, hi]. Returns the upper edge of the chosen lower class; values <=
/// the returned threshold belong to the lower-mean class.
double otsu_threshold(const std::vector<double>& values, double lo, double hi, int bins);

}  // namespace mammoseg
