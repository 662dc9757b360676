#include <doctest.h>

#include <cmath>

#include "mammoseg/phantom.hpp"
#include "test_support.hpp"

using namespace mammoseg;

TEST_CASE("disc mask support is the exact metric disc") {
  auto ph = testsupport::disc_phantom(200, 100, 100, 50, 200, 50, 0);
  size_t expected = 0;
  for (int y = 0; y < 200; ++y)
    for (int x = 0; x < 200; ++x) {
      double dx = x - 100.0, dy = y - 100.0;
      if (dx * dx + dy * dy <= 50.0 * 50.0) {
        ++expected;
        CHECK(ph.mask.get(x, y));
        CHECK(ph.image.at(x, y) == 200);
      } else {
        CHECK_FALSE(ph.mask.get(x, y));
        CHECK(ph.image.at(x, y) == 50);
      }
    }
  CHECK(ph.mask.count() == expected);
}

TEST_CASE("same seed gives bit-identical phantoms") {
  PhantomSpec spec;
  spec.width = 64;
  spec.height = 64;
  spec.shape = Disc{{32, 32}, 10};
  spec.fg_level = 180;
  spec.bg_level = 40;
  spec.noise_sigma = 7.0;
  spec.rng_seed = 99;
  Phantom a = synth_phantom(spec);
  Phantom b = synth_phantom(spec);
  CHECK(a.image == b.image);
  CHECK(a.mask == b.mask);
  spec.rng_seed = 100;
  CHECK(synth_phantom(spec).image != a.image);
}

TEST_CASE("blob mask equals the half-maximum rule, pixel by pixel") {
  PhantomSpec spec;
  spec.width = 160;
  spec.height = 160;
  spec.shape = GaussianBlob{{80, 80}, 20};
  spec.fg_level = 220;
  spec.bg_level = 30;
  Phantom ph = synth_phantom(spec);

  const double half = 30 + (220 - 30) / 2.0;
  for (int y = 0; y < 160; ++y)
    for (int x = 0; x < 160; ++x) {
      // independent intensity computation
      double d2 = (x - 80.0) * (x - 80.0) + (y - 80.0) * (y - 80.0);
      long level = std::lround(30 + (220 - 30) * std::exp(-d2 / (2.0 * 20 * 20)));
      CAPTURE(x);
      CAPTURE(y);
      REQUIRE(ph.image.at(x, y) == level);
      REQUIRE(ph.mask.get(x, y) == (level >= half));
    }
}

TEST_CASE("rotated ellipse stays inside its bounding box and mask matches") {
  PhantomSpec spec;
  spec.width = 200;
  spec.height = 200;
  spec.shape = EllipseShape{{100, 100}, 60, 30, 0.5};
  spec.fg_level = 150;
  spec.bg_level = 20;
  Phantom ph = synth_phantom(spec);
  CHECK(ph.mask.count() > 0);
  // area of an ellipse = pi*a*b, rasterization within 2%
  CHECK(std::abs(static_cast<double>(ph.mask.count()) - 3.14159265 * 60 * 30) <
        0.02 * 3.14159265 * 60 * 30);
}

TEST_CASE("noise is clamped to the gray range") {
  PhantomSpec spec;
  spec.width = 64;
  spec.height = 64;
  spec.shape = Disc{{32, 32}, 10};
  spec.fg_level = 250;
  spec.bg_level = 5;
  spec.noise_sigma = 200.0;
  spec.rng_seed = 3;
  Phantom ph = synth_phantom(spec);
  for (uint16_t p : ph.image.pixels) CHECK(p <= 255);
}

TEST_CASE("invalid specs are rejected") {
  PhantomSpec spec;
  spec.width = 100;
  spec.height = 100;
  spec.fg_level = 100;
  spec.bg_level = 100;  // fg == bg
  spec.shape = Disc{{50, 50}, 10};
  CHECK_THROWS_AS(synth_phantom(spec), InvalidArgument);

  spec.fg_level = 200;
  spec.shape = Disc{{50, 50}, 60};  // out of bounds
  CHECK_THROWS_AS(synth_phantom(spec), InvalidArgument);

  spec.shape = Disc{{95, 50}, 10};  // pokes past the right edge
  CHECK_THROWS_AS(synth_phantom(spec), InvalidArgument);

  spec.shape = Disc{{50, 50}, 10};
  spec.noise_sigma = -1;
  CHECK_THROWS_AS(synth_phantom(spec), InvalidArgument);
}
