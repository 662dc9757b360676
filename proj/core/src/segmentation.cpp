#include "mammoseg/segmentation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "mammoseg/filters.hpp"

namespace mammoseg {

Mask region_growing(const Image& img, Point seed, int tau) {
  require(img.in_bounds(seed), "region_growing: seed out of bounds");
  require(tau >= 0, "region_growing: tau must be >= 0");

  const int seed_gray = img.at(seed.x, seed.y);
  Mask out(img.width, img.height);
  std::queue<Point> q;
  out.set(seed, true);
  q.push(seed);
  static const int DX[4] = {1, -1, 0, 0};
  static const int DY[4] = {0, 0, 1, -1};
  while (!q.empty()) {
    Point p = q.front();
    q.pop();
    for (int d = 0; d < 4; ++d) {
      int nx = p.x + DX[d], ny = p.y + DY[d];
      if (!img.in_bounds(nx, ny) || out.get(nx, ny)) continue;
      if (std::abs(static_cast<int>(img.at(nx, ny)) - seed_gray) <= tau) {
        out.set(nx, ny, true);
        q.push({nx, ny});
      }
    }
  }
  return out;
}

namespace {

double mean_spacing(const std::vector<Point>& poly) {
  double total = 0;
  for (size_t i = 0; i < poly.size(); ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % poly.size()];
    total += std::hypot(static_cast<double>(b.x - a.x), static_cast<double>(b.y - a.y));
  }
  return total / poly.size();
}

std::vector<Point> round_polygon(const Polygon& poly) {
  std::vector<Point> out;
  out.reserve(poly.size());
  for (const PointF& p : poly)
    out.push_back({static_cast<int>(std::lround(p.x)), static_cast<int>(std::lround(p.y))});
  return out;
}

Polygon to_polygon(const std::vector<Point>& pts) {
  Polygon out;
  out.reserve(pts.size());
  for (const Point& p : pts) out.push_back({static_cast<double>(p.x), static_cast<double>(p.y)});
  return out;
}

}  // namespace

Contour active_contour(const Image& img, const Contour& init, const SnakeParams& p) {
  if (init.points.size() < 4)
    throw InvalidArgument("active_contour: init contour is degenerate (< 4 points)");
  require(p.window >= 3 && p.window % 2 == 1, "active_contour: window must be odd and >= 3");
  require(p.max_iters >= 0, "active_contour: max_iters must be >= 0");
  if (p.max_iters == 0) return init;

  const FieldF grad2 = gradient_sq(img);
  const int half = p.window / 2;

  std::vector<Point> poly = round_polygon(resample_closed_n(to_polygon(init.points), p.n_points));
  const size_t n = poly.size();

  std::vector<double> cont(p.window * p.window), curv(p.window * p.window),
      gimg(p.window * p.window);
  std::vector<Point> cand(p.window * p.window);

  for (int iter = 1; iter <= p.max_iters; ++iter) {
    const double dbar = mean_spacing(poly);
    size_t moved = 0;

    for (size_t i = 0; i < n; ++i) {
      const Point prev = poly[(i + n - 1) % n];
      const Point next = poly[(i + 1) % n];
      const Point cur = poly[i];

      int m = 0;
      int cur_idx = -1;
      for (int dy = -half; dy <= half; ++dy)
        for (int dx = -half; dx <= half; ++dx) {
          Point c{cur.x + dx, cur.y + dy};
          if (!img.in_bounds(c)) continue;
          cand[m] = c;
          double dpx = c.x - prev.x, dpy = c.y - prev.y;
          cont[m] = std::abs(dbar - std::hypot(dpx, dpy));
          double cx = prev.x - 2.0 * c.x + next.x;
          double cy = prev.y - 2.0 * c.y + next.y;
          curv[m] = cx * cx + cy * cy;
          gimg[m] = grad2.at(c.x, c.y);
          if (dx == 0 && dy == 0) cur_idx = m;
          ++m;
        }

      double cont_max = 0, curv_max = 0;
      double gmin = std::numeric_limits<double>::infinity(), gmax = -gmin;
      for (int k = 0; k < m; ++k) {
        cont_max = std::max(cont_max, cont[k]);
        curv_max = std::max(curv_max, curv[k]);
        gmin = std::min(gmin, gimg[k]);
        gmax = std::max(gmax, gimg[k]);
      }
      auto energy = [&](int k) {
        double e = 0;
        if (cont_max > 0) e += p.alpha * cont[k] / cont_max;
        if (curv_max > 0) e += p.beta * curv[k] / curv_max;
        if (gmax > gmin) e -= p.gamma * (gimg[k] - gmin) / (gmax - gmin);
        return e;
      };

      double best_e = energy(cur_idx);
      int best_k = cur_idx;
      for (int k = 0; k < m; ++k) {
        if (k == cur_idx) continue;
        double e = energy(k);
        if (e < best_e - 1e-12) {
          best_e = e;
          best_k = k;
        }
      }
      if (best_k != cur_idx) {
        poly[i] = cand[best_k];
        ++moved;
      }
    }

    if (static_cast<double>(moved) < p.stop_moved_fraction * static_cast<double>(n)) break;
    if (p.resample_every > 0 && iter % p.resample_every == 0)
      poly = round_polygon(resample_closed_n(to_polygon(poly), p.n_points));
  }

  Contour chain = rasterize_closed(to_polygon(poly));
  if (chain.points.size() < 4)
    throw SegmentationFailed("active_contour: contour collapsed");
  return chain;
}

namespace {

PointF polygon_centroid(const Polygon& poly) {
  double sx = 0, sy = 0;
  for (const PointF& p : poly) {
    sx += p.x;
    sy += p.y;
  }
  return {sx / poly.size(), sy / poly.size()};
}

double mean_gradient(const FieldF& grad, const Polygon& poly) {
  double acc = 0;
  for (const PointF& p : poly) acc += grad.sample(p.x, p.y);
  return acc / poly.size();
}

void clamp_polygon(Polygon& poly, int width, int height) {
  for (PointF& p : poly) {
    p.x = std::clamp(p.x, 0.0, static_cast<double>(width - 1));
    p.y = std::clamp(p.y, 0.0, static_cast<double>(height - 1));
  }
}

}  // namespace

Contour conservative_contour(const Image& img, Point seed, const ConservativeParams& p) {
  require(img.in_bounds(seed), "conservative_contour: seed out of bounds");
  require(p.r0 > 0 && p.step > 0, "conservative_contour: r0 and step must be > 0");
  require(p.drop_fraction > 0 && p.drop_fraction < 1,
          "conservative_contour: drop_fraction must be in (0,1)");

  const FieldF grad =
      gradient_magnitude(gaussian_blur(to_field(img), p.blur_sigma));
  const double contrast_floor = 1e-6 * img.max_gray;

  Polygon cur = circle_polygon({static_cast<double>(seed.x), static_cast<double>(seed.y)},
                               p.r0, p.min_points);
  clamp_polygon(cur, img.width, img.height);
  cur = resample_closed(cur, p.spacing, p.min_points, p.max_points);

  double peak_mean = mean_gradient(grad, cur);
  Polygon peak_inside = cur;  // contour one step inside the running peak
  Polygon prev = cur;

  for (int step = 1; step <= p.max_steps; ++step) {
    PointF c = polygon_centroid(cur);
    Polygon proposed = cur;
    double max_move = 0;
    for (PointF& v : proposed) {
      double dx = v.x - c.x, dy = v.y - c.y;
      double len = std::hypot(dx, dy);
      if (len < 1e-12) continue;
      PointF target{v.x + p.step * dx / len, v.y + p.step * dy / len};
      target.x = std::clamp(target.x, 0.0, static_cast<double>(img.width - 1));
      target.y = std::clamp(target.y, 0.0, static_cast<double>(img.height - 1));
      max_move = std::max(max_move, std::hypot(target.x - v.x, target.y - v.y));
      v = target;
    }
    if (max_move < 0.25 * p.step) break;  // pinned at the image bounds
    proposed = resample_closed(proposed, p.spacing, p.min_points, p.max_points);

    double new_mean = mean_gradient(grad, proposed);
    if (peak_mean > contrast_floor && new_mean < p.drop_fraction * peak_mean)
      break;  // ridge crossed; stop expanding

    prev = cur;
    cur = proposed;
    if (new_mean > peak_mean) {
      peak_mean = new_mean;
      peak_inside = prev;
    }
  }

  if (peak_mean <= contrast_floor)
    throw NoContrast("conservative_contour: no gradient to latch onto");

  Contour chain = rasterize_closed(peak_inside);
  if (chain.points.size() < 4)
    throw NoContrast("conservative_contour: contour degenerate");
  return chain;
}

RegionPartition partition_regions(const Contour& contour, int width, int height) {
  require(is_closed_chain(contour), "partition_regions: contour is not a closed chain");

  ContourInterior interior = contour_interior(contour, width, height);
  RegionPartition part;
  part.centroid = interior.centroid;

  double d_max = 0;
  for (const Point& p : contour.points) {
    double d = std::hypot(p.x - part.centroid.x, p.y - part.centroid.y);
    d_max = std::max(d_max, d);
  }
  require(d_max > 0, "partition_regions: contour has zero extent");
  part.d_max = d_max;

  part.central = Mask(width, height);
  part.border = Mask(width, height);
  part.surround = Mask(width, height);

  const int x0 = std::max(0, static_cast<int>(std::floor(part.centroid.x - 4 * d_max)));
  const int x1 = std::min(width - 1, static_cast<int>(std::ceil(part.centroid.x + 4 * d_max)));
  const int y0 = std::max(0, static_cast<int>(std::floor(part.centroid.y - 4 * d_max)));
  const int y1 = std::min(height - 1, static_cast<int>(std::ceil(part.centroid.y + 4 * d_max)));

  for (int y = y0; y <= y1; ++y)
    for (int x = x0; x <= x1; ++x) {
      double d = std::hypot(x - part.centroid.x, y - part.centroid.y);
      if (d <= d_max)
        part.central.set(x, y, true);
      else if (d <= 2 * d_max)
        part.border.set(x, y, true);
      else if (d <= 4 * d_max)
        part.surround.set(x, y, true);
    }
  return part;
}

DifferenceHistogram difference_histogram(const Image& img, const RegionPartition& part) {
  require(part.border.width == img.width && part.border.height == img.height,
          "difference_histogram: partition does not match image");

  const int n = img.max_gray + 1;
  std::vector<double> hb(n, 0.0), hs(n, 0.0);
  size_t nb = 0, ns = 0;
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) {
      if (part.border.get(x, y)) {
        hb[img.at(x, y)] += 1;
        ++nb;
      } else if (part.surround.get(x, y)) {
        hs[img.at(x, y)] += 1;
        ++ns;
      }
    }
  if (nb == 0) throw InvalidArgument("difference_histogram: empty border region");
  if (ns == 0) throw InvalidArgument("difference_histogram: empty surround region");

  for (double& v : hb) v /= static_cast<double>(nb);
  for (double& v : hs) v /= static_cast<double>(ns);

  DifferenceHistogram out;
  out.f.resize(n);
  double pos_sum = 0;
  for (int j = 0; j < n; ++j) {
    out.f[j] = std::max(hb[j] - hs[j], 0.0);
    pos_sum += out.f[j];
  }
  if (pos_sum > 0) {
    for (double& v : out.f) v /= pos_sum;
  } else {
    out.f = hb;  // identical distributions: fall back to the border histogram
  }
  return out;
}

std::vector<double> saliency_lut(const DifferenceHistogram& hist, int max_gray) {
  const int n = max_gray + 1;
  require(static_cast<int>(hist.f.size()) == n, "saliency_lut: histogram size mismatch");
  std::vector<double> lut(n, 0.0);
  for (int c = 0; c < n; ++c) {
    double acc = 0;
    for (int j = 0; j < n; ++j)
      acc += hist.f[j] * (std::abs(c - j) / static_cast<double>(max_gray));
    lut[c] = acc;
  }
  return lut;
}

SaliencyMap saliency_map(const Image& img, const DifferenceHistogram& hist,
                         const RegionPartition& part) {
  require(part.border.width == img.width && part.border.height == img.height,
          "saliency_map: partition does not match image");
  double sum = 0;
  for (double v : hist.f) {
    require(v >= 0, "saliency_map: histogram entry < 0");
    sum += v;
  }
  require(std::abs(sum - 1.0) <= 1e-9, "saliency_map: histogram does not sum to 1");

  const std::vector<double> lut = saliency_lut(hist, img.max_gray);

  SaliencyMap map;
  map.width = img.width;
  map.height = img.height;
  map.values.assign(img.size(), std::numeric_limits<double>::quiet_NaN());
  map.defined = part.border;
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x)
      if (part.border.get(x, y))
        map.values[static_cast<size_t>(y) * img.width + x] = lut[img.at(x, y)];
  return map;
}

SaliencyResult saliency_segment(const Image& img, Point seed, const SaliencyConfig& cfg) {
  require(img.in_bounds(seed), "saliency_segment: seed out of bounds");

  SaliencyResult res;
  res.bootstrap = conservative_contour(img, seed, cfg.contour);
  res.partition = partition_regions(res.bootstrap, img.width, img.height);
  DifferenceHistogram hist = difference_histogram(img, res.partition);
  SaliencyMap smap = saliency_map(img, hist, res.partition);

  std::vector<double> values;
  values.reserve(res.partition.border.count());
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x)
      if (smap.defined.get(x, y)) values.push_back(smap.at(x, y));

  const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  res.threshold = (*mx - *mn < 1e-12) ? *mx
                                      : otsu_threshold(values, 0.0, 1.0, cfg.otsu_bins);

  Mask unioned = res.partition.central;
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x)
      if (smap.defined.get(x, y) && smap.at(x, y) <= res.threshold)
        unioned.set(x, y, true);

  if (!unioned.in_bounds(seed) || !unioned.get(seed))
    throw SegmentationFailed("saliency_segment: seed fell outside the segmented region");
  res.mask = component_containing(unioned, seed, Connectivity::Four);
  if (res.mask.empty()) throw SegmentationFailed("saliency_segment: empty final component");
  return res;
}

}  // namespace mammoseg
