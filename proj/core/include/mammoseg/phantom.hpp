#pragma once

#include <cstdint>
#include <variant>

#include "mammoseg/types.hpp"

namespace mammoseg {

struct Disc {
  PointF center;
  double radius = 0;
};

struct GaussianBlob {
  PointF center;
  double sigma = 0;
};

struct EllipseShape {
  PointF center;
  double a = 0;      // semi-axis along `angle`
  double b = 0;      // perpendicular semi-axis
  double angle = 0;  // radians, counter-clockwise from +x
};

using PhantomShape = std::variant<Disc, GaussianBlob, EllipseShape>;

/// Synthetic ground-truth image description. The shape must fit fully
/// inside the image (for a blob: its half-maximum disc) and fg != bg.
struct PhantomSpec {
  int width = 0;
  int height = 0;
  int max_gray = 255;
  PhantomShape shape;
  int fg_level = 0;
  int bg_level = 0;
  double noise_sigma = 0.0;
  uint64_t rng_seed = 0;
};

struct Phantom {
  Image image;
  Mask mask;  // exact noiseless support
};

/// Render the spec: bg everywhere, shape at fg (blob: smooth falloff),
/// then Gaussian noise clamped to [0, max_gray] when noise_sigma > 0.
/// Deterministic for a fixed rng_seed.
Phantom synth_phantom(const PhantomSpec& spec);

}  // namespace mammoseg
