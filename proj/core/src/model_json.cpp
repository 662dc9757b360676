#include <nlohmann/json.hpp>

#include "mammoseg/learn.hpp"

namespace mammoseg {

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

json standardizer_to_json(const Standardizer& s) {
  return json{{"mean", s.mean}, {"scale", s.scale}};
}

Standardizer standardizer_from_json(const json& j) {
  Standardizer s;
  s.mean = j.at("mean").get<std::vector<double>>();
  s.scale = j.at("scale").get<std::vector<double>>();
  if (s.mean.size() != s.scale.size()) throw SchemaError("model: standardizer shape mismatch");
  return s;
}

}  // namespace

const char* Model::kind() const {
  switch (value.index()) {
    case 0: return "tree";
    case 1: return "knn";
    case 2: return "nb";
    case 3: return "kmeans";
    case 4: return "fcm";
    case 5: return "pam";
    case 6: return "svm";
  }
  return "?";
}

std::string model_to_json(const Model& m) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = m.kind();

  std::visit(
      [&](const auto& model) {
        using T = std::decay_t<decltype(model)>;
        if constexpr (std::is_same_v<T, TreeModel>) {
          json nodes = json::array();
          for (const TreeNode& n : model.nodes)
            nodes.push_back({{"feature", n.feature},
                             {"threshold", n.threshold},
                             {"gain", n.gain},
                             {"left", n.left},
                             {"right", n.right},
                             {"prediction", n.prediction}});
          j["nodes"] = std::move(nodes);
          j["impute_median"] = model.impute_median;
          j["n_classes"] = model.n_classes;
        } else if constexpr (std::is_same_v<T, KnnModel>) {
          j["k"] = model.k;
          j["standardizer"] = standardizer_to_json(model.standardizer);
          j["x"] = model.x;
          j["y"] = model.y;
        } else if constexpr (std::is_same_v<T, NbModel>) {
          j["log_prior"] = model.log_prior;
          j["mean"] = model.mean;
          j["var"] = model.var;
        } else if constexpr (std::is_same_v<T, KMeansModel>) {
          j["standardizer"] = standardizer_to_json(model.standardizer);
          j["centroids"] = model.centroids;
          j["inertia"] = model.inertia;
          j["inertia_history"] = model.inertia_history;
        } else if constexpr (std::is_same_v<T, FcmModel>) {
          j["standardizer"] = standardizer_to_json(model.standardizer);
          j["centroids"] = model.centroids;
          j["memberships"] = model.memberships;
          j["fuzzifier"] = model.fuzzifier;
        } else if constexpr (std::is_same_v<T, PamModel>) {
          j["standardizer"] = standardizer_to_json(model.standardizer);
          j["medoid_indices"] = model.medoid_indices;
          j["medoids"] = model.medoids;
          j["cost"] = model.cost;
        } else if constexpr (std::is_same_v<T, SvmModel>) {
          j["standardizer"] = standardizer_to_json(model.standardizer);
          j["w"] = model.w;
          j["b"] = model.b;
        }
      },
      m.value);
  return j.dump(2) + "\n";
}

Model model_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("model: invalid JSON: ") + e.what());
  }
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion)
      throw SchemaError("model: unsupported schema_version");
    const std::string kind = j.at("kind").get<std::string>();
    Model m;
    if (kind == "tree") {
      TreeModel t;
      for (const json& nj : j.at("nodes")) {
        TreeNode n;
        n.feature = nj.at("feature").get<int>();
        n.threshold = nj.at("threshold").get<double>();
        n.gain = nj.at("gain").get<double>();
        n.left = nj.at("left").get<int>();
        n.right = nj.at("right").get<int>();
        n.prediction = nj.at("prediction").get<int>();
        t.nodes.push_back(n);
      }
      t.impute_median = j.at("impute_median").get<std::vector<double>>();
      t.n_classes = j.at("n_classes").get<int>();
      m.value = std::move(t);
    } else if (kind == "knn") {
      KnnModel k;
      k.k = j.at("k").get<int>();
      k.standardizer = standardizer_from_json(j.at("standardizer"));
      k.x = j.at("x").get<FeatureMatrix>();
      k.y = j.at("y").get<std::vector<int>>();
      m.value = std::move(k);
    } else if (kind == "nb") {
      NbModel n;
      n.log_prior = j.at("log_prior").get<std::vector<double>>();
      n.mean = j.at("mean").get<FeatureMatrix>();
      n.var = j.at("var").get<FeatureMatrix>();
      m.value = std::move(n);
    } else if (kind == "kmeans") {
      KMeansModel k;
      k.standardizer = standardizer_from_json(j.at("standardizer"));
      k.centroids = j.at("centroids").get<FeatureMatrix>();
      k.inertia = j.at("inertia").get<double>();
      k.inertia_history = j.at("inertia_history").get<std::vector<double>>();
      m.value = std::move(k);
    } else if (kind == "fcm") {
      FcmModel f;
      f.standardizer = standardizer_from_json(j.at("standardizer"));
      f.centroids = j.at("centroids").get<FeatureMatrix>();
      f.memberships = j.at("memberships").get<FeatureMatrix>();
      f.fuzzifier = j.at("fuzzifier").get<double>();
      m.value = std::move(f);
    } else if (kind == "pam") {
      PamModel p;
      p.standardizer = standardizer_from_json(j.at("standardizer"));
      p.medoid_indices = j.at("medoid_indices").get<std::vector<int>>();
      p.medoids = j.at("medoids").get<FeatureMatrix>();
      p.cost = j.at("cost").get<double>();
      m.value = std::move(p);
    } else if (kind == "svm") {
      SvmModel s;
      s.standardizer = standardizer_from_json(j.at("standardizer"));
      s.w = j.at("w").get<std::vector<double>>();
      s.b = j.at("b").get<double>();
      m.value = std::move(s);
    } else {
      throw SchemaError("model: unknown kind '" + kind + "'");
    }
    return m;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("model: malformed field: ") + e.what());
  }
}

int model_predict(const Model& m, const std::vector<double>& x) {
  return std::visit(
      [&](const auto& model) -> int {
        using T = std::decay_t<decltype(model)>;
        if constexpr (std::is_same_v<T, TreeModel>) {
          return tree_predict(model, x);
        } else if constexpr (std::is_same_v<T, KnnModel>) {
          return knn_predict(model, x);
        } else if constexpr (std::is_same_v<T, NbModel>) {
          return nb_predict(model, x).cls;
        } else if constexpr (std::is_same_v<T, KMeansModel>) {
          return kmeans_assign(model, x);
        } else if constexpr (std::is_same_v<T, FcmModel>) {
          std::vector<double> u = fcm_membership(model, x);
          return static_cast<int>(std::max_element(u.begin(), u.end()) - u.begin());
        } else if constexpr (std::is_same_v<T, PamModel>) {
          return pam_assign(model, x);
        } else {
          // svm: map {-1,+1} onto class ids {0,1}
          return svm_predict(model, x) > 0 ? 1 : 0;
        }
      },
      m.value);
}

}  // namespace mammoseg
