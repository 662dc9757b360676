#include "mammoseg/dataset.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace mammoseg {

namespace {

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(const std::string& tok, int line) {
  char* end = nullptr;
  double v = std::strtod(tok.c_str(), &end);
  if (end != tok.c_str() + tok.size() || tok.empty())
    throw ParseError("features csv line " + std::to_string(line) +
                     ": bad numeric field '" + tok + "'");
  return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::string feature_csv_line(const FeatureRow& row) {
  const FeatureVector& f = row.features;
  std::string out = row.id;
  for (double v : {f.radius, f.perimeter, f.area, f.compactness, f.smoothness,
                   f.symmetry, f.fractal_dimension, f.texture}) {
    out += ',';
    out += fmt_double(v);
  }
  out += ',';
  if (row.label) out += *row.label;
  return out;
}

std::string feature_csv(const std::vector<FeatureRow>& rows) {
  std::string out = kFeatureCsvHeader;
  out += '\n';
  for (const FeatureRow& r : rows) {
    out += feature_csv_line(r);
    out += '\n';
  }
  return out;
}

std::vector<FeatureRow> parse_feature_csv(std::string_view text) {
  std::istringstream stream{std::string(text)};
  std::string line;
  if (!std::getline(stream, line)) throw SchemaError("features csv: empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kFeatureCsvHeader)
    throw SchemaError("features csv: unexpected header '" + line + "'");

  std::vector<FeatureRow> rows;
  int line_no = 1;
  while (std::getline(stream, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    std::vector<std::string> tok = split_csv_line(line);
    if (tok.size() != 10)
      throw SchemaError("features csv line " + std::to_string(line_no) +
                        ": expected 10 fields, got " + std::to_string(tok.size()));
    FeatureRow row;
    row.id = tok[0];
    row.features.radius = parse_double(tok[1], line_no);
    row.features.perimeter = parse_double(tok[2], line_no);
    row.features.area = parse_double(tok[3], line_no);
    row.features.compactness = parse_double(tok[4], line_no);
    row.features.smoothness = parse_double(tok[5], line_no);
    row.features.symmetry = parse_double(tok[6], line_no);
    row.features.fractal_dimension = parse_double(tok[7], line_no);
    row.features.texture = parse_double(tok[8], line_no);
    if (!tok[9].empty()) {
      if (tok[9] != "B" && tok[9] != "M")
        throw SchemaError("features csv line " + std::to_string(line_no) +
                          ": label must be B, M or empty");
      row.label = tok[9][0];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

FeatureMatrix feature_matrix(const std::vector<FeatureRow>& rows) {
  FeatureMatrix x;
  x.reserve(rows.size());
  for (const FeatureRow& r : rows) {
    const FeatureVector& f = r.features;
    x.push_back({f.radius, f.perimeter, f.area, f.compactness, f.smoothness, f.symmetry,
                 f.fractal_dimension, f.texture});
  }
  return x;
}

std::vector<int> labels_of(const std::vector<FeatureRow>& rows) {
  std::vector<int> y;
  y.reserve(rows.size());
  for (const FeatureRow& r : rows) {
    if (!r.label) throw SchemaError("dataset: row '" + r.id + "' has no label");
    y.push_back(*r.label == 'M' ? 1 : 0);
  }
  return y;
}

std::string outcomes_csv(const std::vector<Outcome>& outcomes) {
  std::string out = "prediction,label\n";
  for (const Outcome& o : outcomes) {
    out += o.prediction == 1 ? "positive" : "negative";
    out += ',';
    out += o.label == 1 ? "positive" : "negative";
    out += '\n';
  }
  return out;
}

std::vector<Outcome> parse_outcomes_csv(std::string_view text) {
  std::istringstream stream{std::string(text)};
  std::string line;
  if (!std::getline(stream, line)) throw SchemaError("outcomes csv: empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "prediction,label")
    throw SchemaError("outcomes csv: unexpected header '" + line + "'");

  auto parse_side = [](const std::string& tok, int line_no) {
    if (tok == "positive") return 1;
    if (tok == "negative") return 0;
    throw SchemaError("outcomes csv line " + std::to_string(line_no) +
                      ": value must be positive or negative, got '" + tok + "'");
  };

  std::vector<Outcome> out;
  int line_no = 1;
  while (std::getline(stream, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    std::vector<std::string> tok = split_csv_line(line);
    if (tok.size() != 2)
      throw SchemaError("outcomes csv line " + std::to_string(line_no) +
                        ": expected 2 fields");
    out.push_back({parse_side(tok[0], line_no), parse_side(tok[1], line_no)});
  }
  return out;
}

}  // namespace mammoseg
