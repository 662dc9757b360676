#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mammoseg {

struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct PointF {
  double x = 0.0;
  double y = 0.0;
};

// Error taxonomy; the CLI maps these onto exit codes (see tools/).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed bytes or text in an input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A precondition of an operation was violated by the caller.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Seed neighborhood has no gradient to latch onto.
class NoContrast : public Error {
 public:
  using Error::Error;
};

// Pipeline produced an empty or degenerate result.
class SegmentationFailed : public Error {
 public:
  using Error::Error;
};

// Dataset / model / config shape does not match what was expected.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Single-channel raster. Row-major, origin at the top-left corner,
/// x = column, y = row. max_gray+1 is the number of representable shades.
struct Image {
  int width = 0;
  int height = 0;
  int max_gray = 255;
  std::vector<uint16_t> pixels;

  Image() = default;
  Image(int w, int h, int maxg, uint16_t fill = 0)
      : width(w), height(h), max_gray(maxg),
        pixels(static_cast<size_t>(w) * static_cast<size_t>(h), fill) {}

  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width && y >= 0 && y < height;
  }
  bool in_bounds(Point p) const { return in_bounds(p.x, p.y); }

  uint16_t at(int x, int y) const {
    return pixels[static_cast<size_t>(y) * width + x];
  }
  uint16_t& at(int x, int y) {
    return pixels[static_cast<size_t>(y) * width + x];
  }

  size_t size() const { return pixels.size(); }

  friend bool operator==(const Image&, const Image&) = default;
};

/// Binary region with the same geometry conventions as Image.
struct Mask {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> bits;

  Mask() = default;
  Mask(int w, int h, bool fill = false)
      : width(w), height(h),
        bits(static_cast<size_t>(w) * static_cast<size_t>(h), fill ? 1 : 0) {}

  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width && y >= 0 && y < height;
  }
  bool in_bounds(Point p) const { return in_bounds(p.x, p.y); }

  bool get(int x, int y) const {
    return bits[static_cast<size_t>(y) * width + x] != 0;
  }
  bool get(Point p) const { return get(p.x, p.y); }
  void set(int x, int y, bool v) {
    bits[static_cast<size_t>(y) * width + x] = v ? 1 : 0;
  }
  void set(Point p, bool v) { set(p.x, p.y, v); }

  size_t count() const {
    size_t n = 0;
    for (uint8_t b : bits) n += b;
    return n;
  }
  bool empty() const { return count() == 0; }

  friend bool operator==(const Mask&, const Mask&) = default;
};

/// Ordered boundary chain. A well-formed contour is closed (last point
/// 8-adjacent to the first), has no repeated consecutive points and at
/// least 4 points.
struct Contour {
  std::vector<Point> points;

  size_t size() const { return points.size(); }
  friend bool operator==(const Contour&, const Contour&) = default;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw InvalidArgument(msg);
}

}  // namespace mammoseg
