#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mammoseg/types.hpp"

namespace mammoseg {

enum class Tissue { Fatty, FattyGlandular, Dense };

enum class Abnormality {
  Calcification,
  Circumscribed,
  Spiculated,
  IllDefined,
  ArchitecturalDistortion,
  Asymmetry,
  Normal
};

enum class Severity { Benign, Malignant };

/// One MIAS-style ground-truth record. `center` keeps the coordinates
/// exactly as they appear in the annotation file, whose y axis runs from
/// the BOTTOM-left corner; use annotation_seed() to map into the image's
/// top-left row-major frame.
struct Annotation {
  std::string record_id;
  Tissue tissue = Tissue::Fatty;
  Abnormality abnormality = Abnormality::Normal;
  std::optional<Severity> severity;
  std::optional<Point> center;
  std::optional<int> radius;
};

/// Parse whitespace-separated records, one per line:
///   id tissue{F,G,D} abnormality{CALC,CIRC,SPIC,MISC,ARCH,ASYM,NORM}
///   [severity{B,M} [x y radius]]
/// NORM records must carry no further fields.
std::vector<Annotation> parse_annotations(std::string_view text);

/// Mass center converted to the top-left pixel frame of an image with the
/// given height. Throws InvalidArgument when the annotation has no center.
Point annotation_seed(const Annotation& ann, int image_height);

const char* to_string(Tissue t);
const char* to_string(Abnormality a);
const char* to_string(Severity s);

}  // namespace mammoseg
