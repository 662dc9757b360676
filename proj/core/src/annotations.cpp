#include "mammoseg/annotations.hpp"

#include <sstream>

namespace mammoseg {

namespace {

Tissue parse_tissue(const std::string& tok, int line) {
  if (tok == "F") return Tissue::Fatty;
  if (tok == "G") return Tissue::FattyGlandular;
  if (tok == "D") return Tissue::Dense;
  throw ParseError("annotations line " + std::to_string(line) +
                   ": unknown tissue code '" + tok + "'");
}

Abnormality parse_abnormality(const std::string& tok, int line) {
  if (tok == "CALC") return Abnormality::Calcification;
  if (tok == "CIRC") return Abnormality::Circumscribed;
  if (tok == "SPIC") return Abnormality::Spiculated;
  if (tok == "MISC") return Abnormality::IllDefined;
  if (tok == "ARCH") return Abnormality::ArchitecturalDistortion;
  if (tok == "ASYM") return Abnormality::Asymmetry;
  if (tok == "NORM") return Abnormality::Normal;
  throw ParseError("annotations line " + std::to_string(line) +
                   ": unknown abnormality code '" + tok + "'");
}

Severity parse_severity(const std::string& tok, int line) {
  if (tok == "B") return Severity::Benign;
  if (tok == "M") return Severity::Malignant;
  throw ParseError("annotations line " + std::to_string(line) +
                   ": unknown severity code '" + tok + "'");
}

int parse_coord(const std::string& tok, const char* what, int line) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size())
    throw ParseError("annotations line " + std::to_string(line) +
                     ": non-numeric " + what + " '" + tok + "'");
  return v;
}

}  // namespace

std::vector<Annotation> parse_annotations(std::string_view text) {
  std::vector<Annotation> out;
  std::istringstream stream{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty()) continue;

    if (tok.size() < 3)
      throw ParseError("annotations line " + std::to_string(line_no) +
                       ": expected at least id, tissue, abnormality");
    Annotation ann;
    ann.record_id = tok[0];
    ann.tissue = parse_tissue(tok[1], line_no);
    ann.abnormality = parse_abnormality(tok[2], line_no);

    if (ann.abnormality == Abnormality::Normal) {
      if (tok.size() != 3)
        throw ParseError("annotations line " + std::to_string(line_no) +
                         ": NORM record must not carry severity or coordinates");
      out.push_back(std::move(ann));
      continue;
    }

    // Non-NORM: either severity alone or severity plus x y radius.
    if (tok.size() != 4 && tok.size() != 7)
      throw ParseError("annotations line " + std::to_string(line_no) +
                       ": expected 'severity' or 'severity x y radius' after abnormality");
    ann.severity = parse_severity(tok[3], line_no);
    if (tok.size() == 7) {
      int x = parse_coord(tok[4], "x coordinate", line_no);
      int y = parse_coord(tok[5], "y coordinate", line_no);
      int r = parse_coord(tok[6], "radius", line_no);
      if (r <= 0)
        throw ParseError("annotations line " + std::to_string(line_no) +
                         ": radius must be positive");
      ann.center = Point{x, y};
      ann.radius = r;
    }
    out.push_back(std::move(ann));
  }
  return out;
}

Point annotation_seed(const Annotation& ann, int image_height) {
  require(ann.center.has_value(), "annotation '" + ann.record_id + "' has no mass center");
  require(image_height > 0, "image height must be positive");
  // MIAS y runs bottom-up; the image frame is top-down row-major.
  return Point{ann.center->x, image_height - 1 - ann.center->y};
}

const char* to_string(Tissue t) {
  switch (t) {
    case Tissue::Fatty: return "fatty";
    case Tissue::FattyGlandular: return "fatty-glandular";
    case Tissue::Dense: return "dense";
  }
  return "?";
}

const char* to_string(Abnormality a) {
  switch (a) {
    case Abnormality::Calcification: return "calcification";
    case Abnormality::Circumscribed: return "circumscribed";
    case Abnormality::Spiculated: return "spiculated";
    case Abnormality::IllDefined: return "ill-defined";
    case Abnormality::ArchitecturalDistortion: return "architectural-distortion";
    case Abnormality::Asymmetry: return "asymmetry";
    case Abnormality::Normal: return "normal";
  }
  return "?";
}

const char* to_string(Severity s) {
  return s == Severity::Benign ? "benign" : "malignant";
}

}  // namespace mammoseg
