#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mammoseg/types.hpp"

namespace mammoseg {

using FeatureMatrix = std::vector<std::vector<double>>;

/// Per-feature z-scoring. Distance-based models (KNN, KMC, FCM, PAM, SVM)
/// standardize by default; tree and NB consume raw features.
struct Standardizer {
  std::vector<double> mean;
  std::vector<double> scale;  // stddev, 1 for constant features

  static Standardizer fit(const FeatureMatrix& x);
  static Standardizer identity(size_t dim);
  std::vector<double> apply(const std::vector<double>& v) const;
  FeatureMatrix apply_all(const FeatureMatrix& x) const;

  friend bool operator==(const Standardizer&, const Standardizer&) = default;
};

// ---------------------------------------------------------------- tree

struct TreeConfig {
  int max_depth = 16;
  int min_samples_split = 2;
};

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0;
  double gain = 0;  // information gain (bits) of the accepted split
  int left = -1;
  int right = -1;
  int prediction = -1;  // majority class at leaves

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

struct TreeModel {
  std::vector<TreeNode> nodes;  // nodes[0] is the root
  std::vector<double> impute_median;
  int n_classes = 0;

  friend bool operator==(const TreeModel&, const TreeModel&) = default;
};

/// Greedy entropy-gain threshold tree. Zero-gain splits are taken when a
/// node is impure and a threshold still separates the samples, so parity
/// problems (XOR) resolve at the depth they need.
TreeModel tree_train(const FeatureMatrix& x, const std::vector<int>& y,
                     const TreeConfig& cfg = {});
int tree_predict(const TreeModel& m, const std::vector<double>& x);

// ---------------------------------------------------------------- knn

struct KnnModel {
  int k = 3;
  Standardizer standardizer;
  FeatureMatrix x;  // standardized training features
  std::vector<int> y;

  friend bool operator==(const KnnModel&, const KnnModel&) = default;
};

KnnModel knn_fit(const FeatureMatrix& x, const std::vector<int>& y, int k);
int knn_predict(const KnnModel& m, const std::vector<double>& query);
/// Majority vote of the k nearest training points. Ties between classes go
/// to the class of the nearest tied-class neighbour; equal distances break
/// by lower sample index.
int knn_classify(const FeatureMatrix& x, const std::vector<int>& y,
                 const std::vector<double>& query, int k);

// ---------------------------------------------------------------- naive bayes

struct NbModel {
  std::vector<double> log_prior;
  FeatureMatrix mean;  // [class][feature]
  FeatureMatrix var;   // [class][feature], floored at 1e-9

  friend bool operator==(const NbModel&, const NbModel&) = default;
};

struct NbPrediction {
  int cls = 0;
  std::vector<double> posterior;  // sums to 1
};

NbModel nb_train(const FeatureMatrix& x, const std::vector<int>& y);
NbPrediction nb_predict(const NbModel& m, const std::vector<double>& x);

// ---------------------------------------------------------------- k-means

struct KMeansConfig {
  int max_iters = 300;
  uint64_t rng_seed = 0;
};

struct KMeansModel {
  Standardizer standardizer;
  FeatureMatrix centroids;               // standardized space
  double inertia = 0;
  std::vector<double> inertia_history;   // after every Lloyd iteration

  friend bool operator==(const KMeansModel&, const KMeansModel&) = default;
};

/// Lloyd iterations from k-means++ seeding; empty clusters are reseeded to
/// the point farthest from its assigned centroid.
KMeansModel kmeans(const FeatureMatrix& x, int k, const KMeansConfig& cfg = {});
int kmeans_assign(const KMeansModel& m, const std::vector<double>& x);

// ---------------------------------------------------------------- fuzzy c-means

struct FcmConfig {
  double fuzzifier = 2.0;  // m > 1
  int max_iters = 300;
  double tol = 1e-5;  // max |U - U_prev|
  uint64_t rng_seed = 0;
};

struct FcmModel {
  Standardizer standardizer;
  FeatureMatrix centroids;
  FeatureMatrix memberships;  // U[sample][cluster], rows sum to 1
  double fuzzifier = 2.0;

  friend bool operator==(const FcmModel&, const FcmModel&) = default;
};

FcmModel fcm(const FeatureMatrix& x, int c, const FcmConfig& cfg = {});
/// Membership row for given distances to the centroids. Zero distances
/// hard-assign to the first coincident centroid.
std::vector<double> fcm_membership_row(const std::vector<double>& dists, double fuzzifier);
std::vector<double> fcm_membership(const FcmModel& m, const std::vector<double>& x);

// ---------------------------------------------------------------- pam

struct PamConfig {
  int max_swaps = 1000;
};

struct PamModel {
  Standardizer standardizer;
  std::vector<int> medoid_indices;  // into the training set
  FeatureMatrix medoids;            // standardized space
  double cost = 0;                  // sum of distances to nearest medoid

  friend bool operator==(const PamModel&, const PamModel&) = default;
};

/// BUILD then SWAP until no cost-reducing exchange exists.
PamModel pam(const FeatureMatrix& x, int k, const PamConfig& cfg = {});
int pam_assign(const PamModel& m, const std::vector<double>& x);

// ---------------------------------------------------------------- linear svm

struct SvmConfig {
  double lambda = 1e-3;
  int epochs = 200;  // full passes (epochs * n subgradient steps)
  uint64_t rng_seed = 0;
  bool standardize = true;
  bool fit_bias = true;
};

struct SvmModel {
  Standardizer standardizer;
  std::vector<double> w;
  double b = 0;

  friend bool operator==(const SvmModel&, const SvmModel&) = default;
};

/// Pegasos-style primal subgradient descent on hinge loss + L2.
/// Labels must be -1 / +1 and both classes present.
SvmModel svm_train(const FeatureMatrix& x, const std::vector<int>& y,
                   const SvmConfig& cfg = {});
double svm_decision(const SvmModel& m, const std::vector<double>& x);
int svm_predict(const SvmModel& m, const std::vector<double>& x);  // -1 / +1

// ---------------------------------------------------------------- model envelope

using ModelVariant =
    std::variant<TreeModel, KnnModel, NbModel, KMeansModel, FcmModel, PamModel, SvmModel>;

struct Model {
  ModelVariant value;

  const char* kind() const;
  friend bool operator==(const Model&, const Model&) = default;
};

/// Versioned JSON, lossless for doubles (round-trips bit-exactly).
std::string model_to_json(const Model& m);
Model model_from_json(std::string_view text);

/// Classifiers return a class id; clustering models return the index of
/// the nearest centroid / medoid.
int model_predict(const Model& m, const std::vector<double>& x);

}  // namespace mammoseg
