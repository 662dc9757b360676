#include "mammoseg/features.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "mammoseg/geometry.hpp"

namespace mammoseg {

RadialProfile radial_profile(const Contour& contour, int width, int height) {
  require(contour.points.size() >= 4, "radial_profile: degenerate contour");
  ContourInterior interior = contour_interior(contour, width, height);

  RadialProfile prof;
  prof.centroid = interior.centroid;
  prof.radial_lengths.reserve(contour.points.size());
  for (const Point& p : contour.points)
    prof.radial_lengths.push_back(
        std::hypot(p.x - prof.centroid.x, p.y - prof.centroid.y));
  return prof;
}

double perimeter(const Contour& contour) {
  require(contour.points.size() >= 4, "perimeter: degenerate contour");
  return chain_length(contour);
}

double area(const Mask& mask, const Contour& contour) {
  require(mask.width > 0 && mask.height > 0, "area: empty mask geometry");
  require(!contour.points.empty(), "area: degenerate contour");
  size_t total = mask.count();
  require(total > 0, "area: empty mask");
  size_t boundary = boundary_pixels(mask).size();
  return static_cast<double>(total - boundary) + boundary / 2.0;
}

double compactness(double perimeter, double area) {
  require(area > 0, "compactness: zero area");
  return perimeter * perimeter / area;
}

double smoothness(const RadialProfile& profile) {
  require(!profile.radial_lengths.empty(), "smoothness: empty profile");
  double mean = 0;
  for (double r : profile.radial_lengths) mean += r;
  mean /= profile.radial_lengths.size();
  require(mean > 0, "smoothness: zero mean radius");
  double mad = 0;
  for (double r : profile.radial_lengths) mad += std::abs(r - mean);
  mad /= profile.radial_lengths.size();
  return mad / mean;
}

double symmetry(const Mask& mask) {
  MaskMoments mom = mask_moments(mask);
  require(mom.m00 > 0, "symmetry: empty mask");
  require(mom.mu20 + mom.mu02 > 0, "symmetry: degenerate (zero-variance) mask");

  const double theta = major_axis_angle(mom);
  const double ex = std::cos(theta), ey = std::sin(theta);

  // chord pixel counts on either side of the axis, binned along it
  std::map<int, std::pair<double, double>> chords;
  for (int y = 0; y < mask.height; ++y)
    for (int x = 0; x < mask.width; ++x) {
      if (!mask.get(x, y)) continue;
      double dx = x - mom.cx, dy = y - mom.cy;
      double t = dx * ex + dy * ey;
      double s = -dx * ey + dy * ex;
      auto& bin = chords[static_cast<int>(std::lround(t))];
      if (s >= 0)
        bin.first += 1;
      else
        bin.second += 1;
    }

  double num = 0, den = 0;
  for (const auto& [t, lr] : chords) {
    num += std::abs(lr.first - lr.second);
    den += lr.first + lr.second;
  }
  return num / den;
}

FractalEstimate fractal_dimension(const Contour& contour) {
  require(contour.points.size() >= 4, "fractal_dimension: degenerate contour");

  int min_x = contour.points[0].x, max_x = min_x;
  int min_y = contour.points[0].y, max_y = min_y;
  for (const Point& p : contour.points) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const int w = max_x - min_x + 1;
  const int h = max_y - min_y + 1;
  const int extent = std::max(w, h);

  static const int kSizes[] = {2, 4, 8, 16, 32, 64};
  std::vector<double> log_inv_s, log_n;
  for (int s : kSizes) {
    if (s > extent) continue;
    const int gw = (w + s - 1) / s;
    const int gh = (h + s - 1) / s;
    std::vector<uint8_t> grid(static_cast<size_t>(gw) * gh, 0);
    for (const Point& p : contour.points)
      grid[static_cast<size_t>((p.y - min_y) / s) * gw + (p.x - min_x) / s] = 1;
    size_t n = 0;
    for (uint8_t g : grid) n += g;
    log_inv_s.push_back(-std::log(static_cast<double>(s)));
    log_n.push_back(std::log(static_cast<double>(n)));
  }
  if (log_n.size() < 3)
    throw InvalidArgument("fractal_dimension: fewer than 3 usable scales");

  // ordinary least squares slope of log N against log(1/s)
  const size_t k = log_n.size();
  double mx = 0, my = 0;
  for (size_t i = 0; i < k; ++i) {
    mx += log_inv_s[i];
    my += log_n[i];
  }
  mx /= k;
  my /= k;
  double sxy = 0, sxx = 0;
  for (size_t i = 0; i < k; ++i) {
    sxy += (log_inv_s[i] - mx) * (log_n[i] - my);
    sxx += (log_inv_s[i] - mx) * (log_inv_s[i] - mx);
  }
  double slope = sxy / sxx;

  FractalEstimate est;
  est.dimension = std::clamp(slope, 1.0, 2.0);
  est.clamped = slope < 1.0 || slope > 2.0;
  return est;
}

double texture(const Image& img, const Mask& mask) {
  require(mask.width == img.width && mask.height == img.height,
          "texture: mask does not match image");
  double sum = 0;
  size_t n = 0;
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x)
      if (mask.get(x, y)) {
        sum += img.at(x, y);
        ++n;
      }
  require(n > 0, "texture: empty mask");
  const double mean = sum / n;
  double var = 0;
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x)
      if (mask.get(x, y)) {
        double d = img.at(x, y) - mean;
        var += d * d;
      }
  return var / n;
}

FeatureVector extract_all(const Image& img, const Mask& mask, const Contour& contour) {
  require(mask.width == img.width && mask.height == img.height,
          "extract_all: mask does not match image");

  RadialProfile prof = radial_profile(contour, img.width, img.height);
  FeatureVector v;
  double radius_sum = 0;
  for (double r : prof.radial_lengths) radius_sum += r;
  v.radius = radius_sum / prof.radial_lengths.size();
  v.perimeter = perimeter(contour);
  v.area = area(mask, contour);
  v.compactness = compactness(v.perimeter, v.area);
  v.smoothness = smoothness(prof);
  v.symmetry = symmetry(mask);
  v.fractal_dimension = fractal_dimension(contour).dimension;
  v.texture = texture(img, mask);
  return v;
}

}  // namespace mammoseg
