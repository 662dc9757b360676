#pragma once

#include <vector>

#include "mammoseg/geometry.hpp"
#include "mammoseg/types.hpp"

namespace mammoseg {

/// Seed-relative region growing: 4-connected flood over
/// { p : |gray(p) - gray(seed)| <= tau }.
Mask region_growing(const Image& img, Point seed, int tau);

struct SnakeParams {
  double alpha = 1.0;  // continuity weight
  double beta = 1.0;   // curvature weight
  double gamma = 1.2;  // image (gradient) weight
  int window = 3;      // odd search window side
  int max_iters = 200;
  int n_points = 64;        // snake vertex count after resampling
  int resample_every = 10;  // iterations between resampling passes, 0 = never
  double stop_moved_fraction = 0.02;
};

/// Greedy snake minimizing alpha*continuity + beta*curvature - gamma*|grad|^2
/// per vertex over the search window. Returns `init` untouched when
/// max_iters == 0; throws InvalidArgument for a degenerate init.
Contour active_contour(const Image& img, const Contour& init, const SnakeParams& p);

struct ConservativeParams {
  double r0 = 5.0;            // initial circle radius around the seed
  double step = 1.0;          // outward balloon step per iteration
  double blur_sigma = 1.5;    // smoothing before the gradient field
  double drop_fraction = 0.7; // stop once mean |grad| < drop_fraction * peak
  int max_steps = 500;
  double spacing = 2.0;       // vertex spacing along the contour
  int min_points = 16;
  int max_points = 512;
};

/// Balloon contour from a small circle around the seed, expanding outward
/// while the mean gradient magnitude along the contour keeps rising.
/// Returns the contour one step inside the gradient peak, so the result
/// never crosses the ridge (under-segmentation bias). Throws NoContrast
/// when the neighbourhood is flat.
Contour conservative_contour(const Image& img, Point seed, const ConservativeParams& p);

struct RegionPartition {
  PointF centroid;
  double d_max = 0;
  Mask central;   // dist <= d_max
  Mask border;    // d_max < dist <= 2*d_max
  Mask surround;  // 2*d_max < dist <= 4*d_max
};

RegionPartition partition_regions(const Contour& contour, int width, int height);

/// Normalized positive difference of the border and surround gray-level
/// histograms: the color distribution over-represented near the boundary.
struct DifferenceHistogram {
  std::vector<double> f;  // length max_gray+1, entries >= 0, sums to 1
};

DifferenceHistogram difference_histogram(const Image& img, const RegionPartition& part);

struct SaliencyMap {
  int width = 0;
  int height = 0;
  std::vector<double> values;  // NaN outside the border region
  Mask defined;

  double at(int x, int y) const { return values[static_cast<size_t>(y) * width + x]; }
};

/// Per-gray-level table S[c] = sum_j f_j * |c - c_j| / max_gray.
std::vector<double> saliency_lut(const DifferenceHistogram& hist, int max_gray);

/// Saliency over the border region only; values lie in [0,1].
SaliencyMap saliency_map(const Image& img, const DifferenceHistogram& hist,
                         const RegionPartition& part);

struct SaliencyConfig {
  ConservativeParams contour;
  int otsu_bins = 256;
};

struct SaliencyResult {
  Mask mask;
  Contour bootstrap;        // conservative contour the pipeline grew from
  RegionPartition partition;
  double threshold = 0.0;   // border pixels with S <= threshold were accepted
};

/// Full pipeline: conservative contour -> region partition -> difference
/// histogram -> saliency -> Otsu threshold over the border -> central
/// region plus accepted border pixels, restricted to the seed's component.
SaliencyResult saliency_segment(const Image& img, Point seed, const SaliencyConfig& cfg);

}  // namespace mammoseg
