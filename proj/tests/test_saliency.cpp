#include <doctest.h>

#include <cmath>

#include "mammoseg/rng.hpp"
#include "mammoseg/segmentation.hpp"
#include "test_support.hpp"

using namespace mammoseg;
using testsupport::disc_phantom;
using testsupport::saliency_brute;

namespace {

Contour circle_chain(double cx, double cy, double r) {
  return rasterize_closed(circle_polygon({cx, cy}, r, 256));
}

DifferenceHistogram point_mass(int at, int max_gray) {
  DifferenceHistogram h;
  h.f.assign(max_gray + 1, 0.0);
  h.f[at] = 1.0;
  return h;
}

DifferenceHistogram uniform_hist(int max_gray) {
  DifferenceHistogram h;
  h.f.assign(max_gray + 1, 1.0 / (max_gray + 1));
  return h;
}

}  // namespace

// ----------------------------------------------------------- conservative contour

TEST_CASE("conservative contour under-segments a disc but stays close") {
  auto ph = disc_phantom(200, 100, 100, 50, 200, 50, 0);
  Contour c = conservative_contour(ph.image, {100, 100}, ConservativeParams{});
  Mask region = region_from_contour(c, 200, 200);
  CHECK(region.count() <= ph.mask.count());
  CHECK(testsupport::dice(region, ph.mask) >= 0.80);
  CHECK(region.get(100, 100));  // encloses the seed
}

TEST_CASE("seed near the image border: contour is clipped but closed") {
  auto ph = disc_phantom(120, 60, 60, 40, 200, 50, 0);
  ConservativeParams p;
  p.r0 = 8.0;
  Contour c = conservative_contour(ph.image, {2, 60}, p);
  CHECK(is_closed_chain(c));
  for (const Point& pt : c.points) {
    CHECK(pt.x >= 0);
    CHECK(pt.x < 120);
    CHECK(pt.y >= 0);
    CHECK(pt.y < 120);
  }
}

TEST_CASE("constant image raises NoContrast") {
  Image flat(100, 100, 255, 77);
  CHECK_THROWS_AS(conservative_contour(flat, {50, 50}, ConservativeParams{}), NoContrast);
}

// ----------------------------------------------------------- region partition

TEST_CASE("partition of a disc contour: centroid at center, d_max near r") {
  Contour c = circle_chain(150, 150, 30);
  RegionPartition part = partition_regions(c, 300, 300);
  CHECK(std::abs(part.centroid.x - 150) < 0.5);
  CHECK(std::abs(part.centroid.y - 150) < 0.5);
  CHECK(std::abs(part.d_max - 30) < 1.0);
}

TEST_CASE("border region pixel count equals the direct pixel scan") {
  Contour c = circle_chain(150, 150, 30);
  RegionPartition part = partition_regions(c, 300, 300);
  size_t expected = 0;
  for (int y = 0; y < 300; ++y)
    for (int x = 0; x < 300; ++x) {
      double d = std::hypot(x - part.centroid.x, y - part.centroid.y);
      bool in_border = d > part.d_max && d <= 2 * part.d_max;
      CHECK(part.border.get(x, y) == in_border);
      if (in_border) ++expected;
    }
  CHECK(part.border.count() == expected);
}

TEST_CASE("partition near a corner is clipped yet disjoint") {
  Contour c = circle_chain(12, 12, 8);
  RegionPartition part = partition_regions(c, 64, 64);
  for (int y = 0; y < 64; ++y)
    for (int x = 0; x < 64; ++x) {
      int set = (part.central.get(x, y) ? 1 : 0) + (part.border.get(x, y) ? 1 : 0) +
                (part.surround.get(x, y) ? 1 : 0);
      CHECK(set <= 1);
    }
  CHECK(part.surround.count() > 0);
}

// ----------------------------------------------------------- difference histogram

TEST_CASE("disjoint gray supports produce a point mass at the border gray") {
  // border ring gray 200, surround gray 50
  auto ph = disc_phantom(300, 150, 150, 60, 200, 50, 0);
  Contour c = circle_chain(150, 150, 30);  // central disc inside the fg disc
  RegionPartition part = partition_regions(c, 300, 300);
  DifferenceHistogram h = difference_histogram(ph.image, part);
  CHECK(h.f[200] == doctest::Approx(1.0).epsilon(1e-12));
  double sum = 0;
  for (double v : h.f) sum += v;
  CHECK(std::abs(sum - 1.0) <= 1e-9);
}

TEST_CASE("identical border and surround distributions fall back to h_border") {
  Image flatish(300, 300, 255, 90);
  Contour c = circle_chain(150, 150, 30);
  RegionPartition part = partition_regions(c, 300, 300);
  DifferenceHistogram h = difference_histogram(flatish, part);
  CHECK(h.f[90] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("mixed regions match a direct counting oracle entry by entry") {
  Rng rng(77);
  Image img(220, 220, 255);
  for (auto& p : img.pixels) p = static_cast<uint16_t>(rng.index(256));
  Contour c = circle_chain(110, 110, 25);
  RegionPartition part = partition_regions(c, 220, 220);
  DifferenceHistogram h = difference_histogram(img, part);

  // oracle: recount histograms with independent loops
  std::vector<double> hb(256, 0), hs(256, 0);
  double nb = 0, ns = 0;
  for (int y = 0; y < 220; ++y)
    for (int x = 0; x < 220; ++x) {
      if (part.border.get(x, y)) {
        hb[img.at(x, y)] += 1;
        nb += 1;
      }
      if (part.surround.get(x, y)) {
        hs[img.at(x, y)] += 1;
        ns += 1;
      }
    }
  std::vector<double> expected(256, 0);
  double pos = 0;
  for (int j = 0; j < 256; ++j) {
    expected[j] = std::max(hb[j] / nb - hs[j] / ns, 0.0);
    pos += expected[j];
  }
  REQUIRE(pos > 0);
  for (int j = 0; j < 256; ++j) {
    CAPTURE(j);
    REQUIRE(h.f[j] == doctest::Approx(expected[j] / pos).epsilon(1e-9));
  }
}

TEST_CASE("empty border or surround raises") {
  Image img(40, 40, 255, 10);
  RegionPartition part;
  part.centroid = {20, 20};
  part.d_max = 5;
  part.central = Mask(40, 40);
  part.border = Mask(40, 40);
  part.surround = Mask(40, 40);
  CHECK_THROWS_AS(difference_histogram(img, part), InvalidArgument);
  part.border.set(20, 20, true);
  CHECK_THROWS_AS(difference_histogram(img, part), InvalidArgument);
}

// ----------------------------------------------------------- saliency map

TEST_CASE("point-mass histogram: saliency is the normalized distance to that gray") {
  auto lut = saliency_lut(point_mass(100, 255), 255);
  for (int c = 0; c <= 255; ++c)
    CHECK(lut[c] == doctest::Approx(std::abs(c - 100) / 255.0).epsilon(1e-12));
}

TEST_CASE("uniform histogram: S(0) is exactly one half") {
  auto lut = saliency_lut(uniform_hist(255), 255);
  CHECK(std::abs(lut[0] - 0.5) <= 1e-12);
  CHECK(std::abs(lut[255] - 0.5) <= 1e-12);
}

TEST_CASE("uniform histogram at c=128 matches brute-force summation") {
  auto lut = saliency_lut(uniform_hist(255), 255);
  CHECK(lut[128] == saliency_brute(128, uniform_hist(255).f, 255));
}

TEST_CASE("lookup table equals brute force exactly on random histograms") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    DifferenceHistogram h;
    h.f.assign(256, 0.0);
    double sum = 0;
    for (double& v : h.f) {
      v = rng.uniform();
      sum += v;
    }
    for (double& v : h.f) v /= sum;
    auto lut = saliency_lut(h, 255);
    for (int c = 0; c <= 255; ++c) {
      CAPTURE(trial);
      CAPTURE(c);
      REQUIRE(lut[c] == saliency_brute(c, h.f, 255));  // identical arithmetic order
    }
  }
}

TEST_CASE("saliency values stay in [0,1] and are 1-Lipschitz in c/max_gray") {
  Rng rng(32);
  for (int trial = 0; trial < 10; ++trial) {
    DifferenceHistogram h;
    h.f.assign(256, 0.0);
    double sum = 0;
    for (double& v : h.f) {
      v = rng.uniform();
      sum += v;
    }
    for (double& v : h.f) v /= sum;
    auto lut = saliency_lut(h, 255);
    for (int c = 0; c <= 255; ++c) {
      CHECK(lut[c] >= 0.0);
      CHECK(lut[c] <= 1.0);
    }
    for (int c = 1; c <= 255; ++c)
      CHECK(std::abs(lut[c] - lut[c - 1]) <= 1.0 / 255.0 + 1e-12);
  }
}

TEST_CASE("saliency map is defined exactly on the border region") {
  auto ph = disc_phantom(300, 150, 150, 60, 200, 50, 0);
  Contour c = circle_chain(150, 150, 30);
  RegionPartition part = partition_regions(c, 300, 300);
  DifferenceHistogram h = difference_histogram(ph.image, part);
  SaliencyMap smap = saliency_map(ph.image, h, part);
  for (int y = 0; y < 300; ++y)
    for (int x = 0; x < 300; ++x) {
      if (part.border.get(x, y)) {
        CHECK(!std::isnan(smap.at(x, y)));
        CHECK(smap.at(x, y) >= 0.0);
        CHECK(smap.at(x, y) <= 1.0);
      } else {
        CHECK(std::isnan(smap.at(x, y)));
      }
    }
}

// ----------------------------------------------------------- full pipeline

TEST_CASE("saliency segmentation recovers a noisy disc") {
  auto ph = disc_phantom(240, 120, 120, 50, 200, 50, 5, 11);
  SaliencyResult res = saliency_segment(ph.image, {120, 120}, SaliencyConfig{});
  CHECK(testsupport::dice(res.mask, ph.mask) >= 0.95);
  CHECK(res.mask.get(120, 120));
}

TEST_CASE("output contains the seed and the central component") {
  auto ph = disc_phantom(240, 120, 120, 40, 180, 60, 5, 12);
  Point seed{118, 121};
  SaliencyResult res = saliency_segment(ph.image, seed, SaliencyConfig{});
  CHECK(res.mask.get(seed));
  Mask central_comp = component_containing(res.partition.central, seed, Connectivity::Four);
  for (size_t i = 0; i < central_comp.bits.size(); ++i)
    if (central_comp.bits[i]) CHECK(res.mask.bits[i]);
}

TEST_CASE("constant image propagates NoContrast") {
  Image flat(128, 128, 255, 100);
  CHECK_THROWS_AS(saliency_segment(flat, {64, 64}, SaliencyConfig{}), NoContrast);
}
