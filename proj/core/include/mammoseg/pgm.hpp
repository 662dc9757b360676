#pragma once

#include <string>
#include <string_view>

#include "mammoseg/types.hpp"

namespace mammoseg {

enum class PgmFormat { Ascii, Binary };  // P2 / P5

/// Parse an ASCII (P2) or binary (P5) PGM. `#` comments are accepted
/// anywhere in the header. 16-bit P5 samples are big-endian.
/// Throws ParseError on malformed magic, dimensions < 1, max_gray outside
/// 1..65535, truncated pixel data or samples above max_gray.
Image parse_pgm(std::string_view bytes);

/// Serialize an Image so that parse_pgm(write_pgm(img)) == img bit-exactly.
std::string write_pgm(const Image& img, PgmFormat format = PgmFormat::Binary);

Image read_pgm_file(const std::string& path);
void write_pgm_file(const std::string& path, const Image& img,
                    PgmFormat format = PgmFormat::Binary);

/// Mask <-> image helpers for the mask-as-P5 interchange format (0 / max).
Image mask_to_image(const Mask& mask, int max_gray = 255);
Mask image_to_mask(const Image& img);

}  // namespace mammoseg
