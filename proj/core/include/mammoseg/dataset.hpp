#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mammoseg/features.hpp"
#include "mammoseg/learn.hpp"

namespace mammoseg {

/// One row of the feature CSV. Labels come from annotation severity:
/// B = benign (class 0, screening-negative), M = malignant (class 1,
/// screening-positive).
struct FeatureRow {
  std::string id;
  FeatureVector features;
  std::optional<char> label;  // 'B' or 'M'
};

inline constexpr const char* kFeatureCsvHeader =
    "id,radius,perimeter,area,compactness,smoothness,symmetry,fractal_dimension,"
    "texture,label";

/// Doubles are printed with 17 significant digits, so a write/read trip
/// reproduces the row bit-exactly.
std::string feature_csv(const std::vector<FeatureRow>& rows);
std::string feature_csv_line(const FeatureRow& row);
std::vector<FeatureRow> parse_feature_csv(std::string_view text);

FeatureMatrix feature_matrix(const std::vector<FeatureRow>& rows);
/// Class ids for labeled rows; throws SchemaError when any row is unlabeled.
std::vector<int> labels_of(const std::vector<FeatureRow>& rows);

/// Outcome files encode already-made screening calls, one case per line:
/// header "prediction,label", values "positive" / "negative".
struct Outcome {
  int prediction = 0;  // 1 = positive
  int label = 0;
};

std::string outcomes_csv(const std::vector<Outcome>& outcomes);
std::vector<Outcome> parse_outcomes_csv(std::string_view text);

}  // namespace mammoseg
