#include "mammoseg/filters.hpp"

#include <algorithm>
#include <cmath>

namespace mammoseg {

double FieldF::sample(double x, double y) const {
  x = std::clamp(x, 0.0, static_cast<double>(width - 1));
  y = std::clamp(y, 0.0, static_cast<double>(height - 1));
  int x0 = static_cast<int>(x), y0 = static_cast<int>(y);
  int x1 = std::min(x0 + 1, width - 1), y1 = std::min(y0 + 1, height - 1);
  double fx = x - x0, fy = y - y0;
  double top = at(x0, y0) * (1 - fx) + at(x1, y0) * fx;
  double bot = at(x0, y1) * (1 - fx) + at(x1, y1) * fx;
  return top * (1 - fy) + bot * fy;
}

FieldF to_field(const Image& img) {
  FieldF f(img.width, img.height);
  for (size_t i = 0; i < img.pixels.size(); ++i) f.data[i] = img.pixels[i];
  return f;
}

FieldF gaussian_blur(const FieldF& src, double sigma) {
  if (sigma <= 0) return src;
  const int radius = std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
  std::vector<double> kernel(2 * radius + 1);
  double sum = 0;
  for (int i = -radius; i <= radius; ++i) {
    kernel[i + radius] = std::exp(-(i * i) / (2.0 * sigma * sigma));
    sum += kernel[i + radius];
  }
  for (double& k : kernel) k /= sum;

  FieldF tmp(src.width, src.height), out(src.width, src.height);
  for (int y = 0; y < src.height; ++y)
    for (int x = 0; x < src.width; ++x) {
      double acc = 0;
      for (int i = -radius; i <= radius; ++i) {
        int xi = std::clamp(x + i, 0, src.width - 1);
        acc += kernel[i + radius] * src.at(xi, y);
      }
      tmp.at(x, y) = acc;
    }
  for (int y = 0; y < src.height; ++y)
    for (int x = 0; x < src.width; ++x) {
      double acc = 0;
      for (int i = -radius; i <= radius; ++i) {
        int yi = std::clamp(y + i, 0, src.height - 1);
        acc += kernel[i + radius] * tmp.at(x, yi);
      }
      out.at(x, y) = acc;
    }
  return out;
}

namespace {

inline double dx_at(const FieldF& f, int x, int y) {
  int x0 = std::max(x - 1, 0), x1 = std::min(x + 1, f.width - 1);
  double scale = x1 > x0 ? static_cast<double>(x1 - x0) : 1.0;
  return (f.at(x1, y) - f.at(x0, y)) / scale;
}

inline double dy_at(const FieldF& f, int x, int y) {
  int y0 = std::max(y - 1, 0), y1 = std::min(y + 1, f.height - 1);
  double scale = y1 > y0 ? static_cast<double>(y1 - y0) : 1.0;
  return (f.at(x, y1) - f.at(x, y0)) / scale;
}

}  // namespace

FieldF gradient_magnitude(const FieldF& src) {
  FieldF out(src.width, src.height);
  for (int y = 0; y < src.height; ++y)
    for (int x = 0; x < src.width; ++x)
      out.at(x, y) = std::hypot(dx_at(src, x, y), dy_at(src, x, y));
  return out;
}

FieldF gradient_sq(const Image& img) {
  FieldF f = to_field(img);
  FieldF out(f.width, f.height);
  for (int y = 0; y < f.height; ++y)
    for (int x = 0; x < f.width; ++x) {
      double gx = dx_at(f, x, y), gy = dy_at(f, x, y);
      out.at(x, y) = gx * gx + gy * gy;
    }
  return out;
}

double otsu_threshold(const std::vector<double>& values, double lo, double hi, int bins) {
  require(!values.empty(), "otsu: no values");
  require(bins >= 2 && hi > lo, "otsu: bad binning");

  std::vector<double> hist(bins, 0.0);
  const double scale = bins / (hi - lo);
  for (double v : values) {
    int b = static_cast<int>((v - lo) * scale);
    b = std::clamp(b, 0, bins - 1);
    hist[b] += 1.0;
  }
  const double total = static_cast<double>(values.size());
  double sum_all = 0;
  for (int b = 0; b < bins; ++b) sum_all += b * hist[b];

  double w0 = 0, sum0 = 0, best_var = -1.0;
  int best_split = 0;
  for (int t = 0; t < bins - 1; ++t) {
    w0 += hist[t];
    sum0 += t * hist[t];
    if (w0 == 0) continue;
    double w1 = total - w0;
    if (w1 == 0) break;
    double m0 = sum0 / w0, m1 = (sum_all - sum0) / w1;
    double between = w0 * w1 * (m0 - m1) * (m0 - m1);
    if (between > best_var) {
      best_var = between;
      best_split = t;
    }
  }
  // upper edge of the lower class
  return lo + (best_split + 1) / scale;
}

}  // namespace mammoseg
