#include "mammoseg/eval.hpp"

#include <algorithm>
#include <cmath>

#include "mammoseg/geometry.hpp"

namespace mammoseg {

ConfusionMatrix confusion(std::span<const int> predictions, std::span<const int> labels) {
  require(predictions.size() == labels.size(), "confusion: length mismatch");
  ConfusionMatrix cm;
  for (size_t i = 0; i < predictions.size(); ++i) {
    require(predictions[i] == 0 || predictions[i] == 1, "confusion: prediction not in {0,1}");
    require(labels[i] == 0 || labels[i] == 1, "confusion: label not in {0,1}");
    if (labels[i] == 1)
      predictions[i] == 1 ? ++cm.tp : ++cm.fn;
    else
      predictions[i] == 1 ? ++cm.fp : ++cm.tn;
  }
  return cm;
}

ScreeningMetrics screening_metrics(const ConfusionMatrix& cm) {
  ScreeningMetrics m;
  if (cm.tp + cm.fn > 0) {
    m.sensitivity = static_cast<double>(cm.tp) / (cm.tp + cm.fn);
    m.fnr = static_cast<double>(cm.fn) / (cm.tp + cm.fn);
  }
  if (cm.tn + cm.fp > 0) m.specificity = static_cast<double>(cm.tn) / (cm.tn + cm.fp);
  if (cm.total() > 0) m.accuracy = static_cast<double>(cm.tp + cm.tn) / cm.total();
  if (cm.tp + cm.fp > 0) m.precision = static_cast<double>(cm.tp) / (cm.tp + cm.fp);
  return m;
}

OverlapStats overlap(const Mask& a, const Mask& b) {
  require(a.width == b.width && a.height == b.height, "overlap: dimension mismatch");
  size_t na = 0, nb = 0, ni = 0;
  for (size_t i = 0; i < a.bits.size(); ++i) {
    na += a.bits[i];
    nb += b.bits[i];
    ni += a.bits[i] & b.bits[i];
  }
  if (na + nb == 0) throw InvalidArgument("overlap: both masks are empty");

  OverlapStats s;
  s.dice = 2.0 * ni / static_cast<double>(na + nb);
  s.jaccard = static_cast<double>(ni) / static_cast<double>(na + nb - ni);

  if (na > 0 && nb > 0) {
    const std::vector<Point> ba = boundary_pixels(a);
    const std::vector<Point> bb = boundary_pixels(b);
    auto directed = [](const std::vector<Point>& from, const std::vector<Point>& to) {
      double worst = 0;
      for (const Point& p : from) {
        double best = std::numeric_limits<double>::infinity();
        for (const Point& q : to) {
          double d = std::hypot(static_cast<double>(p.x - q.x), static_cast<double>(p.y - q.y));
          if (d < best) best = d;
        }
        worst = std::max(worst, best);
      }
      return worst;
    };
    s.hausdorff = std::max(directed(ba, bb), directed(bb, ba));
  }
  return s;
}

std::vector<MethodRow> compare_methods(const Image& img, Point seed,
                                       const Mask& ground_truth,
                                       const CompareConfig& cfg) {
  require(ground_truth.width == img.width && ground_truth.height == img.height,
          "compare_methods: ground truth does not match image");

  std::vector<MethodRow> rows;
  auto run = [&](const std::string& name, auto&& fn) {
    MethodRow row;
    row.method = name;
    try {
      row.mask = fn();
      row.stats = overlap(row.mask, ground_truth);
      row.ok = true;
    } catch (const Error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  };

  run("saliency", [&] { return saliency_segment(img, seed, cfg.saliency).mask; });
  run("rg", [&] { return region_growing(img, seed, cfg.rg_tau); });
  run("ac", [&] {
    Polygon init = circle_polygon({static_cast<double>(seed.x), static_cast<double>(seed.y)},
                                  cfg.ac_init_radius, std::max(16, cfg.snake.n_points));
    for (PointF& p : init) {
      p.x = std::clamp(p.x, 0.0, static_cast<double>(img.width - 1));
      p.y = std::clamp(p.y, 0.0, static_cast<double>(img.height - 1));
    }
    Contour contour = active_contour(img, rasterize_closed(init), cfg.snake);
    return region_from_contour(contour, img.width, img.height);
  });
  return rows;
}

}  // namespace mammoseg
