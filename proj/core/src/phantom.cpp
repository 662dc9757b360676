#include "mammoseg/phantom.hpp"

#include <algorithm>
#include <cmath>

#include "mammoseg/rng.hpp"

namespace mammoseg {

namespace {

constexpr double kHalfMaxRadiusFactor = 1.1774100225154747;  // sqrt(2 ln 2)

void check_fits(const PhantomSpec& s) {
  double x0, x1, y0, y1;
  if (const auto* d = std::get_if<Disc>(&s.shape)) {
    require(d->radius > 0, "phantom: disc radius must be > 0");
    x0 = d->center.x - d->radius;
    x1 = d->center.x + d->radius;
    y0 = d->center.y - d->radius;
    y1 = d->center.y + d->radius;
  } else if (const auto* g = std::get_if<GaussianBlob>(&s.shape)) {
    require(g->sigma > 0, "phantom: blob sigma must be > 0");
    double r = g->sigma * kHalfMaxRadiusFactor;
    x0 = g->center.x - r;
    x1 = g->center.x + r;
    y0 = g->center.y - r;
    y1 = g->center.y + r;
  } else {
    const auto& e = std::get<EllipseShape>(s.shape);
    require(e.a > 0 && e.b > 0, "phantom: ellipse axes must be > 0");
    double c = std::cos(e.angle), sn = std::sin(e.angle);
    double hx = std::sqrt(e.a * e.a * c * c + e.b * e.b * sn * sn);
    double hy = std::sqrt(e.a * e.a * sn * sn + e.b * e.b * c * c);
    x0 = e.center.x - hx;
    x1 = e.center.x + hx;
    y0 = e.center.y - hy;
    y1 = e.center.y + hy;
  }
  if (x0 < 0 || y0 < 0 || x1 > s.width - 1 || y1 > s.height - 1)
    throw InvalidArgument("phantom: shape does not fit within image bounds");
}

bool inside_hard_shape(const PhantomShape& shape, double x, double y) {
  if (const auto* d = std::get_if<Disc>(&shape)) {
    double dx = x - d->center.x, dy = y - d->center.y;
    return dx * dx + dy * dy <= d->radius * d->radius;
  }
  const auto& e = std::get<EllipseShape>(shape);
  double dx = x - e.center.x, dy = y - e.center.y;
  double c = std::cos(e.angle), sn = std::sin(e.angle);
  double u = (dx * c + dy * sn) / e.a;
  double v = (-dx * sn + dy * c) / e.b;
  return u * u + v * v <= 1.0;
}

}  // namespace

Phantom synth_phantom(const PhantomSpec& s) {
  require(s.width >= 1 && s.height >= 1, "phantom: dimensions must be >= 1");
  require(s.max_gray >= 1 && s.max_gray <= 65535, "phantom: bad max_gray");
  require(s.fg_level != s.bg_level, "phantom: fg_level must differ from bg_level");
  require(s.fg_level >= 0 && s.fg_level <= s.max_gray, "phantom: fg_level out of range");
  require(s.bg_level >= 0 && s.bg_level <= s.max_gray, "phantom: bg_level out of range");
  require(s.noise_sigma >= 0, "phantom: noise_sigma must be >= 0");
  check_fits(s);

  Phantom out;
  out.image = Image(s.width, s.height, s.max_gray);
  out.mask = Mask(s.width, s.height);

  const bool is_blob = std::holds_alternative<GaussianBlob>(s.shape);
  const double half = s.bg_level + (s.fg_level - s.bg_level) / 2.0;

  for (int y = 0; y < s.height; ++y) {
    for (int x = 0; x < s.width; ++x) {
      long level;
      if (is_blob) {
        const auto& g = std::get<GaussianBlob>(s.shape);
        double dx = x - g.center.x, dy = y - g.center.y;
        double w = std::exp(-(dx * dx + dy * dy) / (2.0 * g.sigma * g.sigma));
        level = std::lround(s.bg_level + (s.fg_level - s.bg_level) * w);
        bool in = s.fg_level > s.bg_level ? level >= half : level <= half;
        out.mask.set(x, y, in);
      } else {
        bool in = inside_hard_shape(s.shape, x, y);
        level = in ? s.fg_level : s.bg_level;
        out.mask.set(x, y, in);
      }
      out.image.at(x, y) = static_cast<uint16_t>(level);
    }
  }

  if (s.noise_sigma > 0) {
    Rng rng(s.rng_seed);
    for (size_t i = 0; i < out.image.pixels.size(); ++i) {
      long v = std::lround(out.image.pixels[i] + rng.normal() * s.noise_sigma);
      out.image.pixels[i] =
          static_cast<uint16_t>(std::clamp(v, 0L, static_cast<long>(s.max_gray)));
    }
  }
  return out;
}

}  // namespace mammoseg
