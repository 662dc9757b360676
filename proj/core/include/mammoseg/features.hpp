#pragma once

#include <vector>

#include "mammoseg/types.hpp"

namespace mammoseg {

/// Distances from the interior centroid to each contour point, in contour
/// order.
struct RadialProfile {
  PointF centroid;
  std::vector<double> radial_lengths;
};

RadialProfile radial_profile(const Contour& contour, int width, int height);

/// Freeman chain length around the mass border.
double perimeter(const Contour& contour);

/// Interior (non-boundary) pixel count plus half the boundary pixel count.
/// Boundary pixels are mask pixels with any of their 8 neighbours outside.
double area(const Mask& mask, const Contour& contour);

/// perimeter^2 / area; 4*pi for an ideal circle.
double compactness(double perimeter, double area);

/// Normalized mean absolute deviation of the radial lengths.
double smoothness(const RadialProfile& profile);

/// Chord-length asymmetry about the moment-derived major axis:
/// sum |L+ - L-| / sum (L+ + L-) over positions along the axis, in [0,1].
double symmetry(const Mask& mask);

struct FractalEstimate {
  double dimension = 1.0;
  bool clamped = false;  // true when the raw slope fell outside [1,2]
};

/// Box-counting dimension of the rendered boundary at box sizes
/// {2,4,8,16,32,64}; least-squares slope of log N vs log(1/s), clamped to
/// [1,2]. Throws InvalidArgument when fewer than 3 scales are usable.
FractalEstimate fractal_dimension(const Contour& contour);

/// Population variance of the gray values inside the mask.
double texture(const Image& img, const Mask& mask);

struct FeatureVector {
  double radius = 0;
  double perimeter = 0;
  double area = 0;
  double compactness = 0;
  double smoothness = 0;
  double symmetry = 0;
  double fractal_dimension = 0;
  double texture = 0;

  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

FeatureVector extract_all(const Image& img, const Mask& mask, const Contour& contour);

}  // namespace mammoseg
