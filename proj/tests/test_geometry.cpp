#include <doctest.h>

#include <cmath>

#include "mammoseg/geometry.hpp"
#include "test_support.hpp"

using namespace mammoseg;

TEST_CASE("rasterized circle is a well-formed closed chain") {
  Contour c = rasterize_closed(circle_polygon({60, 60}, 25, 180));
  CHECK(is_closed_chain(c));
  for (const Point& p : c.points) {
    double d = std::hypot(p.x - 60.0, p.y - 60.0);
    CHECK(d > 23.5);
    CHECK(d < 26.5);
  }
}

TEST_CASE("region_from_contour fills a circle to roughly pi r^2") {
  Contour c = rasterize_closed(circle_polygon({60, 60}, 25, 180));
  Mask region = region_from_contour(c, 120, 120);
  double expected = 3.14159265358979 * 25 * 25;
  CHECK(std::abs(static_cast<double>(region.count()) - expected) < 0.05 * expected);
  // all chain pixels belong to the region
  for (const Point& p : c.points) CHECK(region.get(p));
}

TEST_CASE("contour_interior centroid of a circle sits at its center") {
  Contour c = rasterize_closed(circle_polygon({40, 50}, 20, 150));
  ContourInterior in = contour_interior(c, 100, 100);
  CHECK(std::abs(in.centroid.x - 40) < 0.5);
  CHECK(std::abs(in.centroid.y - 50) < 0.5);
  CHECK(in.interior_count > 0);
}

TEST_CASE("a flat chain encloses nothing") {
  Contour line{{{10, 10}, {11, 10}, {12, 10}, {11, 10}}};  // degenerate back-and-forth
  CHECK_THROWS_AS(contour_interior(line, 32, 32), InvalidArgument);
}

TEST_CASE("trace_boundary walks the outer boundary of a disc") {
  auto ph = testsupport::disc_phantom(100, 50, 50, 20);
  Contour c = trace_boundary(ph.mask, {50, 50});
  CHECK(is_closed_chain(c));
  Mask boundary = boundary_mask(ph.mask);
  for (const Point& p : c.points) CHECK(boundary.get(p));
  // tracing covers every boundary pixel of a convex component
  CHECK(c.points.size() == boundary.count());
}

TEST_CASE("boundary_pixels uses 8-connectivity (diagonal gaps count)") {
  // 3x3 block: only the center pixel has all 8 neighbours set
  Mask m(5, 5);
  for (int y = 1; y <= 3; ++y)
    for (int x = 1; x <= 3; ++x) m.set(x, y, true);
  auto b = boundary_pixels(m);
  CHECK(b.size() == 8);
  for (const Point& p : b) CHECK(!(p.x == 2 && p.y == 2));
}

TEST_CASE("component extraction separates diagonal blobs under 4-connectivity") {
  Mask m(6, 6);
  m.set(1, 1, true);
  m.set(2, 2, true);  // touches (1,1) only diagonally
  Mask four = component_containing(m, {1, 1}, Connectivity::Four);
  CHECK(four.count() == 1);
  Mask eight = component_containing(m, {1, 1}, Connectivity::Eight);
  CHECK(eight.count() == 2);
}

TEST_CASE("largest_component picks the bigger blob") {
  Mask m(20, 10);
  for (int x = 0; x < 3; ++x) m.set(x, 0, true);
  for (int x = 5; x < 15; ++x)
    for (int y = 5; y < 8; ++y) m.set(x, y, true);
  Mask big = largest_component(m, Connectivity::Four);
  CHECK(big.count() == 30);
  CHECK(big.get(5, 5));
  CHECK_FALSE(big.get(0, 0));
}

TEST_CASE("chain_length: unit steps count 1, diagonals sqrt(2)") {
  Contour c{{{0, 0}, {1, 0}, {2, 1}, {1, 1}, {0, 1}}};  // wraps back to (0,0)
  double expected = 1 + std::sqrt(2.0) + 1 + 1 + 1;
  CHECK(chain_length(c) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("resample_closed_n spaces vertices evenly") {
  Polygon square{{0, 0}, {10, 0}, {10, 10}, {0, 10}};
  Polygon r = resample_closed_n(square, 8);
  REQUIRE(r.size() == 8);
  for (size_t i = 0; i < r.size(); ++i) {
    const PointF& a = r[i];
    const PointF& b = r[(i + 1) % r.size()];
    CHECK(std::hypot(b.x - a.x, b.y - a.y) == doctest::Approx(5.0).epsilon(1e-9));
  }
}

TEST_CASE("polygon_area of a square") {
  Polygon square{{0, 0}, {10, 0}, {10, 10}, {0, 10}};
  CHECK(polygon_area(square) == doctest::Approx(100.0));
}

TEST_CASE("mask moments give the major axis of an elongated rectangle") {
  Mask m(60, 60);
  for (int y = 28; y <= 32; ++y)
    for (int x = 5; x <= 54; ++x) m.set(x, y, true);
  MaskMoments mom = mask_moments(m);
  CHECK(mom.cx == doctest::Approx(29.5));
  CHECK(mom.cy == doctest::Approx(30.0));
  double angle = major_axis_angle(mom);
  CHECK(std::abs(std::sin(angle)) < 1e-9);  // axis along x
}
