#include "mammoseg/pgm.hpp"

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "mammoseg/io.hpp"

namespace mammoseg {

namespace {

// Header scanner: whitespace-delimited tokens, '#' starts a comment that
// runs to end of line.
class HeaderScanner {
 public:
  explicit HeaderScanner(std::string_view data) : data_(data) {}

  void skip_space_and_comments() {
    while (pos_ < data_.size()) {
      char c = data_[pos_];
      if (c == '#') {
        while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  long next_int(const char* what) {
    skip_space_and_comments();
    if (pos_ >= data_.size() || !std::isdigit(static_cast<unsigned char>(data_[pos_])))
      throw ParseError(std::string("pgm: expected ") + what);
    long v = 0;
    while (pos_ < data_.size() && std::isdigit(static_cast<unsigned char>(data_[pos_]))) {
      v = v * 10 + (data_[pos_] - '0');
      if (v > 1'000'000'000L) throw ParseError(std::string("pgm: ") + what + " out of range");
      ++pos_;
    }
    return v;
  }

  size_t pos() const { return pos_; }
  void advance(size_t n) { pos_ += n; }
  size_t remaining() const { return data_.size() - pos_; }

 private:
  std::string_view data_;
  size_t pos_ = 0;
};

}  // namespace

Image parse_pgm(std::string_view bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5'))
    throw ParseError("pgm: malformed magic (want P2 or P5)");
  const bool binary = bytes[1] == '5';

  HeaderScanner sc(bytes);
  sc.advance(2);
  long w = sc.next_int("width");
  long h = sc.next_int("height");
  if (w < 1 || h < 1) throw ParseError("pgm: dimension must be >= 1");
  long maxg = sc.next_int("max gray value");
  if (maxg < 1 || maxg > 65535) throw ParseError("pgm: max gray outside 1..65535");

  Image img(static_cast<int>(w), static_cast<int>(h), static_cast<int>(maxg));

  if (!binary) {
    for (size_t i = 0; i < img.size(); ++i) {
      long v;
      try {
        v = sc.next_int("pixel value");
      } catch (const ParseError&) {
        throw ParseError("pgm: truncated pixel data");
      }
      if (v > maxg) throw ParseError("pgm: pixel value above max gray");
      img.pixels[i] = static_cast<uint16_t>(v);
    }
    return img;
  }

  // P5: a single whitespace byte separates the header from the raster.
  if (sc.remaining() < 1 || !std::isspace(static_cast<unsigned char>(bytes[sc.pos()])))
    throw ParseError("pgm: missing raster separator");
  sc.advance(1);

  const int bytes_per = maxg > 255 ? 2 : 1;
  if (sc.remaining() < img.size() * bytes_per)
    throw ParseError("pgm: truncated pixel data");
  const unsigned char* raw =
      reinterpret_cast<const unsigned char*>(bytes.data()) + sc.pos();
  for (size_t i = 0; i < img.size(); ++i) {
    uint16_t v = bytes_per == 2
                     ? static_cast<uint16_t>((raw[2 * i] << 8) | raw[2 * i + 1])
                     : raw[i];
    if (v > maxg) throw ParseError("pgm: pixel value above max gray");
    img.pixels[i] = v;
  }
  return img;
}

std::string write_pgm(const Image& img, PgmFormat format) {
  require(img.width >= 1 && img.height >= 1, "pgm: empty image");
  require(img.max_gray >= 1 && img.max_gray <= 65535, "pgm: bad max gray");
  require(img.pixels.size() == img.size(), "pgm: pixel count mismatch");

  char header[64];
  std::snprintf(header, sizeof(header), "%s\n%d %d\n%d\n",
                format == PgmFormat::Ascii ? "P2" : "P5", img.width, img.height,
                img.max_gray);
  std::string out(header);

  if (format == PgmFormat::Ascii) {
    size_t line_len = 0;
    char buf[8];
    for (size_t i = 0; i < img.pixels.size(); ++i) {
      int n = std::snprintf(buf, sizeof(buf), "%u", img.pixels[i]);
      if (line_len != 0) {
        // keep lines under 70 chars per the netpbm convention
        if (line_len + 1 + n > 68) {
          out += '\n';
          line_len = 0;
        } else {
          out += ' ';
          line_len += 1;
        }
      }
      out.append(buf, n);
      line_len += n;
    }
    out += '\n';
    return out;
  }

  const bool wide = img.max_gray > 255;
  out.reserve(out.size() + img.size() * (wide ? 2 : 1));
  for (uint16_t v : img.pixels) {
    if (wide) out += static_cast<char>((v >> 8) & 0xff);
    out += static_cast<char>(v & 0xff);
  }
  return out;
}

Image read_pgm_file(const std::string& path) { return parse_pgm(read_file(path)); }

void write_pgm_file(const std::string& path, const Image& img, PgmFormat format) {
  atomic_write_file(path, write_pgm(img, format));
}

Image mask_to_image(const Mask& mask, int max_gray) {
  Image img(mask.width, mask.height, max_gray);
  for (size_t i = 0; i < mask.bits.size(); ++i)
    img.pixels[i] = mask.bits[i] ? static_cast<uint16_t>(max_gray) : 0;
  return img;
}

Mask image_to_mask(const Image& img) {
  Mask m(img.width, img.height);
  for (size_t i = 0; i < img.pixels.size(); ++i) m.bits[i] = img.pixels[i] > 0;
  return m;
}

}  // namespace mammoseg
