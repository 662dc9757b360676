#include "mammoseg/learn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "mammoseg/rng.hpp"

namespace mammoseg {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_matrix(const FeatureMatrix& x, const char* who) {
  require(!x.empty(), std::string(who) + ": empty training set");
  const size_t d = x[0].size();
  require(d > 0, std::string(who) + ": zero-dimensional features");
  for (const auto& row : x)
    require(row.size() == d, std::string(who) + ": inconsistent feature dimensionality");
}

double dist2(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

double dist(const std::vector<double>& a, const std::vector<double>& b) {
  return std::sqrt(dist2(a, b));
}

int n_classes_of(const std::vector<int>& y, const char* who) {
  int maxc = -1;
  for (int c : y) {
    require(c >= 0, std::string(who) + ": negative class id");
    maxc = std::max(maxc, c);
  }
  return maxc + 1;
}

}  // namespace

// ---------------------------------------------------------------- standardizer

Standardizer Standardizer::fit(const FeatureMatrix& x) {
  check_matrix(x, "standardizer");
  const size_t d = x[0].size();
  Standardizer s;
  s.mean.assign(d, 0.0);
  s.scale.assign(d, 1.0);
  for (const auto& row : x)
    for (size_t j = 0; j < d; ++j) s.mean[j] += row[j];
  for (double& m : s.mean) m /= static_cast<double>(x.size());
  std::vector<double> var(d, 0.0);
  for (const auto& row : x)
    for (size_t j = 0; j < d; ++j) {
      double dv = row[j] - s.mean[j];
      var[j] += dv * dv;
    }
  for (size_t j = 0; j < d; ++j) {
    double sd = std::sqrt(var[j] / static_cast<double>(x.size()));
    s.scale[j] = sd > 0 ? sd : 1.0;
  }
  return s;
}

Standardizer Standardizer::identity(size_t dim) {
  Standardizer s;
  s.mean.assign(dim, 0.0);
  s.scale.assign(dim, 1.0);
  return s;
}

std::vector<double> Standardizer::apply(const std::vector<double>& v) const {
  require(v.size() == mean.size(), "standardizer: dimensionality mismatch");
  std::vector<double> out(v.size());
  for (size_t j = 0; j < v.size(); ++j) out[j] = (v[j] - mean[j]) / scale[j];
  return out;
}

FeatureMatrix Standardizer::apply_all(const FeatureMatrix& x) const {
  FeatureMatrix out;
  out.reserve(x.size());
  for (const auto& row : x) out.push_back(apply(row));
  return out;
}

// ---------------------------------------------------------------- tree

namespace {

double entropy_bits(const std::vector<int>& counts, int total) {
  if (total == 0) return 0.0;
  double h = 0;
  for (int c : counts) {
    if (c == 0) continue;
    double p = static_cast<double>(c) / total;
    h -= p * std::log2(p);
  }
  return h;
}

struct TreeBuilder {
  const FeatureMatrix& x;
  const std::vector<int>& y;
  const TreeConfig& cfg;
  int n_classes;
  std::vector<TreeNode> nodes;

  int majority(const std::vector<int>& idx) const {
    std::vector<int> counts(n_classes, 0);
    for (int i : idx) counts[y[i]]++;
    int best = 0;
    for (int c = 1; c < n_classes; ++c)
      if (counts[c] > counts[best]) best = c;
    return best;
  }

  int make_leaf(const std::vector<int>& idx) {
    TreeNode node;
    node.prediction = majority(idx);
    nodes.push_back(node);
    return static_cast<int>(nodes.size()) - 1;
  }

  int build(const std::vector<int>& idx, int depth) {
    std::vector<int> counts(n_classes, 0);
    for (int i : idx) counts[y[i]]++;
    const int total = static_cast<int>(idx.size());
    const double h_parent = entropy_bits(counts, total);

    bool pure = false;
    for (int c : counts)
      if (c == total) pure = true;
    if (pure || depth >= cfg.max_depth || total < cfg.min_samples_split)
      return make_leaf(idx);

    const size_t d = x[0].size();
    int best_feature = -1;
    double best_threshold = 0, best_gain = -1;

    for (size_t f = 0; f < d; ++f) {
      std::vector<std::pair<double, int>> vals;
      vals.reserve(idx.size());
      for (int i : idx) vals.push_back({x[i][f], y[i]});
      std::sort(vals.begin(), vals.end());

      std::vector<int> left_counts(n_classes, 0);
      int n_left = 0;
      for (size_t i = 0; i + 1 < vals.size(); ++i) {
        left_counts[vals[i].second]++;
        ++n_left;
        if (vals[i].first == vals[i + 1].first) continue;
        double thr = vals[i].first + (vals[i + 1].first - vals[i].first) / 2.0;
        std::vector<int> right_counts(n_classes, 0);
        for (int c = 0; c < n_classes; ++c) right_counts[c] = counts[c] - left_counts[c];
        int n_right = total - n_left;
        double gain = h_parent -
                      (static_cast<double>(n_left) / total) * entropy_bits(left_counts, n_left) -
                      (static_cast<double>(n_right) / total) * entropy_bits(right_counts, n_right);
        if (gain > best_gain + 1e-15) {
          best_gain = gain;
          best_feature = static_cast<int>(f);
          best_threshold = thr;
        }
      }
    }

    if (best_feature < 0) return make_leaf(idx);  // all features constant

    std::vector<int> left_idx, right_idx;
    for (int i : idx)
      (x[i][best_feature] <= best_threshold ? left_idx : right_idx).push_back(i);

    TreeNode node;
    node.feature = best_feature;
    node.threshold = best_threshold;
    node.gain = std::max(best_gain, 0.0);
    node.prediction = majority(idx);
    nodes.push_back(node);
    int self = static_cast<int>(nodes.size()) - 1;
    int l = build(left_idx, depth + 1);
    int r = build(right_idx, depth + 1);
    nodes[self].left = l;
    nodes[self].right = r;
    return self;
  }
};

}  // namespace

TreeModel tree_train(const FeatureMatrix& x_raw, const std::vector<int>& y,
                     const TreeConfig& cfg) {
  check_matrix(x_raw, "tree_train");
  require(x_raw.size() == y.size(), "tree_train: features / labels length mismatch");

  // median imputation for missing (NaN) feature values
  const size_t d = x_raw[0].size();
  std::vector<double> medians(d, 0.0);
  FeatureMatrix x = x_raw;
  for (size_t f = 0; f < d; ++f) {
    std::vector<double> vals;
    for (const auto& row : x)
      if (!std::isnan(row[f])) vals.push_back(row[f]);
    if (!vals.empty()) {
      std::sort(vals.begin(), vals.end());
      medians[f] = vals.size() % 2 == 1
                       ? vals[vals.size() / 2]
                       : (vals[vals.size() / 2 - 1] + vals[vals.size() / 2]) / 2.0;
    }
    for (auto& row : x)
      if (std::isnan(row[f])) row[f] = medians[f];
  }

  TreeModel model;
  model.n_classes = n_classes_of(y, "tree_train");
  model.impute_median = std::move(medians);

  TreeBuilder builder{x, y, cfg, model.n_classes, {}};
  std::vector<int> idx(x.size());
  std::iota(idx.begin(), idx.end(), 0);
  builder.build(idx, 0);
  model.nodes = std::move(builder.nodes);
  return model;
}

int tree_predict(const TreeModel& m, const std::vector<double>& x_raw) {
  require(!m.nodes.empty(), "tree_predict: empty model");
  require(x_raw.size() == m.impute_median.size(), "tree_predict: dimensionality mismatch");
  std::vector<double> x = x_raw;
  for (size_t f = 0; f < x.size(); ++f)
    if (std::isnan(x[f])) x[f] = m.impute_median[f];

  int node = 0;
  while (m.nodes[node].feature >= 0) {
    const TreeNode& nd = m.nodes[node];
    node = x[nd.feature] <= nd.threshold ? nd.left : nd.right;
  }
  return m.nodes[node].prediction;
}

// ---------------------------------------------------------------- knn

KnnModel knn_fit(const FeatureMatrix& x, const std::vector<int>& y, int k) {
  check_matrix(x, "knn");
  require(x.size() == y.size(), "knn: features / labels length mismatch");
  require(k >= 1 && k <= static_cast<int>(x.size()), "knn: k out of range");
  KnnModel m;
  m.k = k;
  m.standardizer = Standardizer::fit(x);
  m.x = m.standardizer.apply_all(x);
  m.y = y;
  return m;
}

int knn_predict(const KnnModel& m, const std::vector<double>& query) {
  const std::vector<double> q = m.standardizer.apply(query);
  std::vector<std::pair<double, int>> by_dist;  // (distance^2, index)
  by_dist.reserve(m.x.size());
  for (size_t i = 0; i < m.x.size(); ++i) by_dist.push_back({dist2(m.x[i], q), static_cast<int>(i)});
  std::sort(by_dist.begin(), by_dist.end());  // equal distances break by index

  std::map<int, int> votes;
  for (int i = 0; i < m.k; ++i) votes[m.y[by_dist[i].second]]++;
  int best_count = 0;
  for (const auto& [cls, n] : votes) best_count = std::max(best_count, n);
  // tie between classes: the nearest neighbour among the tied classes decides
  for (int i = 0; i < m.k; ++i) {
    int cls = m.y[by_dist[i].second];
    if (votes[cls] == best_count) return cls;
  }
  return m.y[by_dist[0].second];  // unreachable
}

int knn_classify(const FeatureMatrix& x, const std::vector<int>& y,
                 const std::vector<double>& query, int k) {
  return knn_predict(knn_fit(x, y, k), query);
}

// ---------------------------------------------------------------- naive bayes

NbModel nb_train(const FeatureMatrix& x, const std::vector<int>& y) {
  check_matrix(x, "nb_train");
  require(x.size() == y.size(), "nb_train: features / labels length mismatch");
  const int n_classes = n_classes_of(y, "nb_train");
  require(n_classes >= 2, "nb_train: need at least 2 classes");
  const size_t d = x[0].size();

  std::vector<int> counts(n_classes, 0);
  for (int c : y) counts[c]++;
  for (int c = 0; c < n_classes; ++c)
    require(counts[c] > 0, "nb_train: class " + std::to_string(c) + " has zero samples");

  NbModel m;
  m.log_prior.resize(n_classes);
  m.mean.assign(n_classes, std::vector<double>(d, 0.0));
  m.var.assign(n_classes, std::vector<double>(d, 0.0));
  for (int c = 0; c < n_classes; ++c)
    m.log_prior[c] = std::log(static_cast<double>(counts[c]) / x.size());

  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < d; ++j) m.mean[y[i]][j] += x[i][j];
  for (int c = 0; c < n_classes; ++c)
    for (size_t j = 0; j < d; ++j) m.mean[c][j] /= counts[c];
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < d; ++j) {
      double dv = x[i][j] - m.mean[y[i]][j];
      m.var[y[i]][j] += dv * dv;
    }
  for (int c = 0; c < n_classes; ++c)
    for (size_t j = 0; j < d; ++j)
      m.var[c][j] = std::max(m.var[c][j] / counts[c], 1e-9);
  return m;
}

NbPrediction nb_predict(const NbModel& m, const std::vector<double>& x) {
  require(!m.mean.empty() && x.size() == m.mean[0].size(), "nb_predict: dimensionality mismatch");
  const int n_classes = static_cast<int>(m.log_prior.size());
  std::vector<double> logp(n_classes);
  for (int c = 0; c < n_classes; ++c) {
    double acc = m.log_prior[c];
    for (size_t j = 0; j < x.size(); ++j) {
      double v = m.var[c][j];
      double dv = x[j] - m.mean[c][j];
      acc += -0.5 * std::log(2.0 * kPi * v) - dv * dv / (2.0 * v);
    }
    logp[c] = acc;
  }
  const double mx = *std::max_element(logp.begin(), logp.end());
  double z = 0;
  NbPrediction pred;
  pred.posterior.resize(n_classes);
  for (int c = 0; c < n_classes; ++c) {
    pred.posterior[c] = std::exp(logp[c] - mx);
    z += pred.posterior[c];
  }
  for (double& p : pred.posterior) p /= z;
  pred.cls = 0;
  for (int c = 1; c < n_classes; ++c)
    if (pred.posterior[c] > pred.posterior[pred.cls]) pred.cls = c;
  return pred;
}

// ---------------------------------------------------------------- k-means

namespace {

std::vector<int> assign_nearest(const FeatureMatrix& xs, const FeatureMatrix& centroids) {
  std::vector<int> assign(xs.size(), 0);
  for (size_t i = 0; i < xs.size(); ++i) {
    double best = dist2(xs[i], centroids[0]);
    for (size_t c = 1; c < centroids.size(); ++c) {
      double d = dist2(xs[i], centroids[c]);
      if (d < best) {
        best = d;
        assign[i] = static_cast<int>(c);
      }
    }
  }
  return assign;
}

double total_inertia(const FeatureMatrix& xs, const FeatureMatrix& centroids) {
  double acc = 0;
  for (const auto& p : xs) {
    double best = dist2(p, centroids[0]);
    for (size_t c = 1; c < centroids.size(); ++c) best = std::min(best, dist2(p, centroids[c]));
    acc += best;
  }
  return acc;
}

FeatureMatrix kmeanspp_seed(const FeatureMatrix& xs, int k, Rng& rng) {
  FeatureMatrix centroids;
  centroids.push_back(xs[rng.index(xs.size())]);
  std::vector<double> d2(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) d2[i] = dist2(xs[i], centroids[0]);
  while (static_cast<int>(centroids.size()) < k) {
    double total = std::accumulate(d2.begin(), d2.end(), 0.0);
    size_t pick = 0;
    if (total > 0) {
      double r = rng.uniform() * total;
      double acc = 0;
      for (size_t i = 0; i < xs.size(); ++i) {
        acc += d2[i];
        if (acc >= r) {
          pick = i;
          break;
        }
      }
    } else {
      pick = centroids.size() % xs.size();  // all points coincide
    }
    centroids.push_back(xs[pick]);
    for (size_t i = 0; i < xs.size(); ++i)
      d2[i] = std::min(d2[i], dist2(xs[i], centroids.back()));
  }
  return centroids;
}

}  // namespace

KMeansModel kmeans(const FeatureMatrix& x, int k, const KMeansConfig& cfg) {
  check_matrix(x, "kmeans");
  require(k >= 1 && k <= static_cast<int>(x.size()), "kmeans: k out of range");

  KMeansModel m;
  m.standardizer = Standardizer::fit(x);
  const FeatureMatrix xs = m.standardizer.apply_all(x);

  Rng rng(cfg.rng_seed);
  m.centroids = kmeanspp_seed(xs, k, rng);

  std::vector<int> assign = assign_nearest(xs, m.centroids);
  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    // reseed empty clusters to the sample farthest from its centroid
    std::vector<int> sizes(k, 0);
    for (int a : assign) sizes[a]++;
    for (int c = 0; c < k; ++c) {
      if (sizes[c] > 0) continue;
      double worst = -1;
      size_t worst_i = 0;
      for (size_t i = 0; i < xs.size(); ++i) {
        double d = dist2(xs[i], m.centroids[assign[i]]);
        if (d > worst) {
          worst = d;
          worst_i = i;
        }
      }
      m.centroids[c] = xs[worst_i];
      assign[worst_i] = c;
      sizes[c] = 1;
    }

    // means update
    FeatureMatrix sums(k, std::vector<double>(xs[0].size(), 0.0));
    std::fill(sizes.begin(), sizes.end(), 0);
    for (size_t i = 0; i < xs.size(); ++i) {
      sizes[assign[i]]++;
      for (size_t j = 0; j < xs[i].size(); ++j) sums[assign[i]][j] += xs[i][j];
    }
    for (int c = 0; c < k; ++c)
      if (sizes[c] > 0)
        for (size_t j = 0; j < sums[c].size(); ++j) m.centroids[c][j] = sums[c][j] / sizes[c];

    m.inertia_history.push_back(total_inertia(xs, m.centroids));

    std::vector<int> next = assign_nearest(xs, m.centroids);
    if (next == assign) break;
    assign = std::move(next);
  }
  m.inertia = m.inertia_history.empty() ? total_inertia(xs, m.centroids)
                                        : m.inertia_history.back();
  return m;
}

int kmeans_assign(const KMeansModel& m, const std::vector<double>& x) {
  const std::vector<double> q = m.standardizer.apply(x);
  int best = 0;
  double bd = dist2(q, m.centroids[0]);
  for (size_t c = 1; c < m.centroids.size(); ++c) {
    double d = dist2(q, m.centroids[c]);
    if (d < bd) {
      bd = d;
      best = static_cast<int>(c);
    }
  }
  return best;
}

// ---------------------------------------------------------------- fuzzy c-means

std::vector<double> fcm_membership_row(const std::vector<double>& dists, double fuzzifier) {
  require(fuzzifier > 1.0, "fcm: fuzzifier must be > 1");
  const size_t c = dists.size();
  std::vector<double> u(c, 0.0);
  for (size_t i = 0; i < c; ++i) {
    if (dists[i] <= 0) {  // coincident with a centroid: hard assignment
      u.assign(c, 0.0);
      u[i] = 1.0;
      return u;
    }
  }
  const double expo = 2.0 / (fuzzifier - 1.0);
  for (size_t i = 0; i < c; ++i) {
    double denom = 0;
    for (size_t j = 0; j < c; ++j) denom += std::pow(dists[i] / dists[j], expo);
    u[i] = 1.0 / denom;
  }
  return u;
}

FcmModel fcm(const FeatureMatrix& x, int c, const FcmConfig& cfg) {
  check_matrix(x, "fcm");
  require(c >= 2 && c <= static_cast<int>(x.size()), "fcm: c out of range");
  require(cfg.fuzzifier > 1.0, "fcm: fuzzifier must be > 1");

  FcmModel m;
  m.fuzzifier = cfg.fuzzifier;
  m.standardizer = Standardizer::fit(x);
  const FeatureMatrix xs = m.standardizer.apply_all(x);
  const size_t n = xs.size(), d = xs[0].size();

  Rng rng(cfg.rng_seed);
  m.centroids = kmeanspp_seed(xs, c, rng);
  m.memberships.assign(n, std::vector<double>(c, 0.0));

  std::vector<double> dists(c);
  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    double max_delta = 0;
    for (size_t i = 0; i < n; ++i) {
      for (int j = 0; j < c; ++j) dists[j] = dist(xs[i], m.centroids[j]);
      std::vector<double> u = fcm_membership_row(dists, m.fuzzifier);
      for (int j = 0; j < c; ++j)
        max_delta = std::max(max_delta, std::abs(u[j] - m.memberships[i][j]));
      m.memberships[i] = std::move(u);
    }

    FeatureMatrix num(c, std::vector<double>(d, 0.0));
    std::vector<double> den(c, 0.0);
    for (size_t i = 0; i < n; ++i)
      for (int j = 0; j < c; ++j) {
        double w = std::pow(m.memberships[i][j], m.fuzzifier);
        den[j] += w;
        for (size_t f = 0; f < d; ++f) num[j][f] += w * xs[i][f];
      }
    for (int j = 0; j < c; ++j)
      if (den[j] > 0)
        for (size_t f = 0; f < d; ++f) m.centroids[j][f] = num[j][f] / den[j];

    if (max_delta < cfg.tol) break;
  }
  return m;
}

std::vector<double> fcm_membership(const FcmModel& m, const std::vector<double>& x) {
  const std::vector<double> q = m.standardizer.apply(x);
  std::vector<double> dists(m.centroids.size());
  for (size_t j = 0; j < m.centroids.size(); ++j) dists[j] = dist(q, m.centroids[j]);
  return fcm_membership_row(dists, m.fuzzifier);
}

// ---------------------------------------------------------------- pam

namespace {

double pam_cost(const FeatureMatrix& xs, const std::vector<int>& medoids) {
  double acc = 0;
  for (const auto& p : xs) {
    double best = std::numeric_limits<double>::infinity();
    for (int m : medoids) best = std::min(best, dist(p, xs[m]));
    acc += best;
  }
  return acc;
}

}  // namespace

PamModel pam(const FeatureMatrix& x, int k, const PamConfig& cfg) {
  check_matrix(x, "pam");
  const int n = static_cast<int>(x.size());
  require(k >= 1 && k <= n, "pam: k out of range");

  PamModel m;
  m.standardizer = Standardizer::fit(x);
  const FeatureMatrix xs = m.standardizer.apply_all(x);

  // BUILD: start with the most central point, then greedily add the point
  // that lowers the cost the most.
  std::vector<int> medoids;
  {
    int best = 0;
    double best_cost = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      double acc = 0;
      for (int j = 0; j < n; ++j) acc += dist(xs[i], xs[j]);
      if (acc < best_cost) {
        best_cost = acc;
        best = i;
      }
    }
    medoids.push_back(best);
  }
  while (static_cast<int>(medoids.size()) < k) {
    int best = -1;
    double best_cost = std::numeric_limits<double>::infinity();
    for (int cand = 0; cand < n; ++cand) {
      if (std::find(medoids.begin(), medoids.end(), cand) != medoids.end()) continue;
      medoids.push_back(cand);
      double c = pam_cost(xs, medoids);
      medoids.pop_back();
      if (c < best_cost) {
        best_cost = c;
        best = cand;
      }
    }
    medoids.push_back(best);
  }

  // SWAP: apply the best cost-reducing (medoid, non-medoid) exchange until
  // none remains.
  double cost = pam_cost(xs, medoids);
  for (int round = 0; round < cfg.max_swaps; ++round) {
    double best_cost = cost;
    int best_m = -1, best_h = -1;
    for (size_t mi = 0; mi < medoids.size(); ++mi) {
      for (int h = 0; h < n; ++h) {
        if (std::find(medoids.begin(), medoids.end(), h) != medoids.end()) continue;
        std::vector<int> trial = medoids;
        trial[mi] = h;
        double c = pam_cost(xs, trial);
        if (c < best_cost - 1e-12) {
          best_cost = c;
          best_m = static_cast<int>(mi);
          best_h = h;
        }
      }
    }
    if (best_m < 0) break;
    medoids[best_m] = best_h;
    cost = best_cost;
  }

  std::sort(medoids.begin(), medoids.end());
  m.medoid_indices = medoids;
  for (int i : medoids) m.medoids.push_back(xs[i]);
  m.cost = pam_cost(xs, medoids);
  return m;
}

int pam_assign(const PamModel& m, const std::vector<double>& x) {
  const std::vector<double> q = m.standardizer.apply(x);
  int best = 0;
  double bd = dist(q, m.medoids[0]);
  for (size_t j = 1; j < m.medoids.size(); ++j) {
    double d = dist(q, m.medoids[j]);
    if (d < bd) {
      bd = d;
      best = static_cast<int>(j);
    }
  }
  return best;
}

// ---------------------------------------------------------------- linear svm

SvmModel svm_train(const FeatureMatrix& x, const std::vector<int>& y, const SvmConfig& cfg) {
  check_matrix(x, "svm_train");
  require(x.size() == y.size(), "svm_train: features / labels length mismatch");
  require(cfg.lambda > 0, "svm_train: lambda must be > 0");
  bool has_pos = false, has_neg = false;
  for (int v : y) {
    require(v == 1 || v == -1, "svm_train: labels must be -1 or +1");
    has_pos |= v == 1;
    has_neg |= v == -1;
  }
  require(has_pos && has_neg, "svm_train: single-class training set");

  SvmModel m;
  m.standardizer = cfg.standardize ? Standardizer::fit(x) : Standardizer::identity(x[0].size());
  const FeatureMatrix xs = m.standardizer.apply_all(x);
  const size_t n = xs.size(), d = xs[0].size();

  m.w.assign(d, 0.0);
  m.b = 0;
  Rng rng(cfg.rng_seed);
  long t = 0;
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    for (size_t s = 0; s < n; ++s) {
      ++t;
      const size_t i = rng.index(n);
      const double eta = 1.0 / (cfg.lambda * static_cast<double>(t));
      double margin = m.b;
      for (size_t j = 0; j < d; ++j) margin += m.w[j] * xs[i][j];
      margin *= y[i];
      const double shrink = 1.0 - eta * cfg.lambda;
      for (double& wj : m.w) wj *= shrink;
      if (cfg.fit_bias) m.b *= shrink;
      if (margin < 1.0) {
        for (size_t j = 0; j < d; ++j) m.w[j] += eta * y[i] * xs[i][j];
        if (cfg.fit_bias) m.b += eta * y[i];
      }
    }
  }
  return m;
}

double svm_decision(const SvmModel& m, const std::vector<double>& x) {
  const std::vector<double> q = m.standardizer.apply(x);
  require(q.size() == m.w.size(), "svm: dimensionality mismatch");
  double acc = m.b;
  for (size_t j = 0; j < q.size(); ++j) acc += m.w[j] * q[j];
  return acc;
}

int svm_predict(const SvmModel& m, const std::vector<double>& x) {
  return svm_decision(m, x) >= 0 ? 1 : -1;
}

}  // namespace mammoseg
