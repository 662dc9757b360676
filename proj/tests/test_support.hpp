// Shared fixtures and independent oracles for the test suites. Oracles here
// intentionally re-derive results through a different route than the library.
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "mammoseg/phantom.hpp"
#include "mammoseg/types.hpp"

namespace testsupport {

using mammoseg::Image;
using mammoseg::Mask;
using mammoseg::Point;

inline mammoseg::Phantom disc_phantom(int size, double cx, double cy, double r,
                                      int fg = 200, int bg = 50, double noise = 0,
                                      uint64_t seed = 1) {
  mammoseg::PhantomSpec spec;
  spec.width = size;
  spec.height = size;
  spec.shape = mammoseg::Disc{{cx, cy}, r};
  spec.fg_level = fg;
  spec.bg_level = bg;
  spec.noise_sigma = noise;
  spec.rng_seed = seed;
  return mammoseg::synth_phantom(spec);
}

inline double dice(const Mask& a, const Mask& b) {
  size_t na = 0, nb = 0, ni = 0;
  for (size_t i = 0; i < a.bits.size(); ++i) {
    na += a.bits[i];
    nb += b.bits[i];
    ni += a.bits[i] & b.bits[i];
  }
  return na + nb == 0 ? 0.0 : 2.0 * ni / static_cast<double>(na + nb);
}

// Flood-fill oracle by fixpoint relaxation: repeatedly admit any pixel that
// is 4-adjacent to an admitted pixel and within tau of the seed gray, until
// nothing changes. Slower but obviously correct.
inline Mask flood_fill_oracle(const Image& img, Point seed, int tau) {
  Mask out(img.width, img.height);
  out.set(seed, true);
  const int sg = img.at(seed.x, seed.y);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int y = 0; y < img.height; ++y)
      for (int x = 0; x < img.width; ++x) {
        if (out.get(x, y)) continue;
        if (std::abs(static_cast<int>(img.at(x, y)) - sg) > tau) continue;
        const bool touch = (x > 0 && out.get(x - 1, y)) || (x + 1 < img.width && out.get(x + 1, y)) ||
                           (y > 0 && out.get(x, y - 1)) || (y + 1 < img.height && out.get(x, y + 1));
        if (touch) {
          out.set(x, y, true);
          changed = true;
        }
      }
  }
  return out;
}

// Brute-force saliency of one pixel: direct sum over all gray levels in
// ascending index order.
inline double saliency_brute(int gray, const std::vector<double>& f, int max_gray) {
  double acc = 0;
  for (int j = 0; j <= max_gray; ++j)
    acc += f[j] * (std::abs(gray - j) / static_cast<double>(max_gray));
  return acc;
}

// Independent box-count over a point set with its own gridding code.
inline double box_count_oracle(const std::vector<Point>& pts) {
  int min_x = pts[0].x, max_x = pts[0].x, min_y = pts[0].y, max_y = pts[0].y;
  for (const Point& p : pts) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const int extent = std::max(max_x - min_x + 1, max_y - min_y + 1);
  std::vector<double> xs, ys;
  for (int s : {2, 4, 8, 16, 32, 64}) {
    if (s > extent) continue;
    std::vector<std::pair<int, int>> cells;
    for (const Point& p : pts) cells.push_back({(p.x - min_x) / s, (p.y - min_y) / s});
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    xs.push_back(std::log(1.0 / s));
    ys.push_back(std::log(static_cast<double>(cells.size())));
  }
  const size_t n = xs.size();
  double mx = 0, my = 0;
  for (size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double num = 0, den = 0;
  for (size_t i = 0; i < n; ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  return num / den;
}

}  // namespace testsupport
