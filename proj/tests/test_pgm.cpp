#include <doctest.h>

#include "mammoseg/pgm.hpp"
#include "mammoseg/rng.hpp"

using namespace mammoseg;

TEST_CASE("parse minimal ascii P2") {
  Image img = parse_pgm("P2\n2 2\n255\n0 128 255 64");
  CHECK(img.width == 2);
  CHECK(img.height == 2);
  CHECK(img.max_gray == 255);
  CHECK(img.pixels == std::vector<uint16_t>{0, 128, 255, 64});
}

TEST_CASE("P5 parses identically to the equivalent P2") {
  Image ascii = parse_pgm("P2\n2 2\n255\n0 128 255 64");
  std::string bin = "P5\n2 2\n255\n";
  for (unsigned char c : {0, 128, 255, 64}) bin += static_cast<char>(c);
  CHECK(parse_pgm(bin) == ascii);
}

TEST_CASE("comments are skipped in the header") {
  Image img = parse_pgm("P2\n# a comment\n2 1 # trailing\n# another\n15\n3 7");
  CHECK(img.width == 2);
  CHECK(img.height == 1);
  CHECK(img.max_gray == 15);
  CHECK(img.pixels == std::vector<uint16_t>{3, 7});
}

TEST_CASE("16-bit P5 samples are big-endian") {
  std::string bin = "P5\n2 1\n65535\n";
  bin += static_cast<char>(0x01);
  bin += static_cast<char>(0x02);
  bin += static_cast<char>(0xff);
  bin += static_cast<char>(0xfe);
  Image img = parse_pgm(bin);
  CHECK(img.pixels == std::vector<uint16_t>{0x0102, 0xfffe});
}

TEST_CASE("single pixel round trip") {
  Image img(1, 1, 255);
  img.pixels = {0};
  CHECK(parse_pgm(write_pgm(img, PgmFormat::Ascii)) == img);
  CHECK(parse_pgm(write_pgm(img, PgmFormat::Binary)) == img);
}

TEST_CASE("the P2 example round-trips through both formats") {
  Image img = parse_pgm("P2\n2 2\n255\n0 128 255 64");
  CHECK(parse_pgm(write_pgm(img, PgmFormat::Ascii)) == img);
  CHECK(parse_pgm(write_pgm(img, PgmFormat::Binary)) == img);
}

TEST_CASE("10000 random images round-trip bit-exactly") {
  Rng rng(7);
  for (int trial = 0; trial < 10000; ++trial) {
    const int w = 1 + static_cast<int>(rng.index(12));
    const int h = 1 + static_cast<int>(rng.index(12));
    const int max_gray = trial % 3 == 0 ? 1 + static_cast<int>(rng.index(65535)) : 255;
    Image img(w, h, max_gray);
    for (auto& p : img.pixels)
      p = static_cast<uint16_t>(rng.index(static_cast<size_t>(max_gray) + 1));
    const PgmFormat fmt = trial % 2 == 0 ? PgmFormat::Ascii : PgmFormat::Binary;
    CAPTURE(trial);
    REQUIRE(parse_pgm(write_pgm(img, fmt)) == img);
  }
}

TEST_CASE("a MIAS-shaped raster parses (1024x1024, 8-bit)") {
  // the licensed MIAS scans are 1024x1024 8-bit P5s; simulate the shape
  std::string bin = "P5\n1024 1024\n255\n";
  bin.append(1024 * 1024, '\x2a');
  Image img = parse_pgm(bin);
  CHECK(img.width == 1024);
  CHECK(img.height == 1024);
  CHECK(img.max_gray == 255);
  CHECK(img.at(512, 512) == 42);
}

TEST_CASE("malformed inputs are rejected") {
  CHECK_THROWS_AS(parse_pgm("P3\n1 1\n255\n0"), ParseError);       // wrong magic
  CHECK_THROWS_AS(parse_pgm("Q2\n1 1\n255\n0"), ParseError);       // wrong magic
  CHECK_THROWS_AS(parse_pgm("P2\n0 1\n255\n"), ParseError);        // dimension < 1
  CHECK_THROWS_AS(parse_pgm("P2\n1 1\n0\n0"), ParseError);         // max gray 0
  CHECK_THROWS_AS(parse_pgm("P2\n1 1\n70000\n0"), ParseError);     // max gray too large
  CHECK_THROWS_AS(parse_pgm("P2\n2 2\n255\n0 1"), ParseError);     // truncated
  CHECK_THROWS_AS(parse_pgm("P5\n2 2\n255\nab"), ParseError);      // truncated raster
  CHECK_THROWS_AS(parse_pgm("P2\n1 1\n100\n200"), ParseError);     // pixel above max
  CHECK_THROWS_AS(parse_pgm(""), ParseError);
}

TEST_CASE("mask round-trips through the 0/255 image convention") {
  Mask m(3, 2);
  m.set(1, 0, true);
  m.set(2, 1, true);
  CHECK(image_to_mask(mask_to_image(m)) == m);
}
