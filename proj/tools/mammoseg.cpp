// mammoseg CLI: segment, features, train, evaluate, compare, phantom.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mammoseg/annotations.hpp"
#include "mammoseg/config.hpp"
#include "mammoseg/dataset.hpp"
#include "mammoseg/eval.hpp"
#include "mammoseg/features.hpp"
#include "mammoseg/io.hpp"
#include "mammoseg/learn.hpp"
#include "mammoseg/pgm.hpp"
#include "mammoseg/phantom.hpp"
#include "mammoseg/segmentation.hpp"

namespace ms = mammoseg;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 2;
constexpr int kExitSegmentation = 3;
constexpr int kExitSchema = 4;

[[noreturn]] void fail(int code, const std::string& msg) {
  std::cerr << "mammoseg: " << msg << "\n";
  std::exit(code);
}

std::string default_out_dir() {
  const char* env = std::getenv("MAMMOSEG_OUT_DIR");
  return env && *env ? env : ".";
}

ms::Point parse_seed(const std::string& s) {
  int x = 0, y = 0;
  char extra = 0;
  if (std::sscanf(s.c_str(), "%d,%d%c", &x, &y, &extra) != 2)
    fail(kExitIo, "bad --seed '" + s + "', expected x,y");
  return {x, y};
}

std::string read_config(const std::string& path) {
  if (path.empty()) return "{}";
  return ms::read_file(path);
}

json seed_json(ms::Point p) { return json{{"x", p.x}, {"y", p.y}}; }

ms::Image overlay_boundary(const ms::Image& img, const ms::Mask& mask) {
  ms::Image out = img;
  for (const ms::Point& p : ms::boundary_pixels(mask))
    out.at(p.x, p.y) = static_cast<uint16_t>(img.max_gray);
  return out;
}

void write_contour_csv(const std::string& path, const ms::Contour& c) {
  std::string out = "x,y\n";
  for (const ms::Point& p : c.points)
    out += std::to_string(p.x) + "," + std::to_string(p.y) + "\n";
  ms::atomic_write_file(path, out);
}

void write_contour_svg(const std::string& path, const ms::Contour& c, int w, int h) {
  std::string pts;
  for (const ms::Point& p : c.points) {
    if (!pts.empty()) pts += ' ';
    pts += std::to_string(p.x) + "," + std::to_string(p.y);
  }
  char head[160];
  std::snprintf(head, sizeof(head),
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
                "viewBox=\"0 0 %d %d\">\n",
                w, h, w, h);
  std::string out = head;
  out += "  <polygon points=\"" + pts +
         "\" fill=\"none\" stroke=\"red\" stroke-width=\"1\"/>\n</svg>\n";
  ms::atomic_write_file(path, out);
}

json conservative_json(const ms::ConservativeParams& p) {
  return json{{"r0", p.r0},
              {"step", p.step},
              {"blur_sigma", p.blur_sigma},
              {"drop_fraction", p.drop_fraction},
              {"max_steps", p.max_steps},
              {"spacing", p.spacing},
              {"min_points", p.min_points},
              {"max_points", p.max_points}};
}

json snake_json(const ms::SnakeParams& p) {
  return json{{"alpha", p.alpha},
              {"beta", p.beta},
              {"gamma", p.gamma},
              {"window", p.window},
              {"max_iters", p.max_iters},
              {"n_points", p.n_points},
              {"resample_every", p.resample_every},
              {"stop_moved_fraction", p.stop_moved_fraction}};
}

std::string fmt_metric(const std::optional<double>& v) {
  if (!v) return "undefined";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", *v);
  return buf;
}

json metric_json(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

// ------------------------------------------------------------------ segment

struct SegmentArgs {
  std::string image_path;
  std::string seed_str;
  std::string annotation;  // FILE:ID
  std::string method = "saliency";
  std::string config_path;
  std::string out_prefix;
  std::string contour_out;
  std::string svg_out;
  bool timings = false;
};

int run_segment(const SegmentArgs& a) {
  const auto t0 = std::chrono::steady_clock::now();

  ms::Image img;
  try {
    img = ms::read_pgm_file(a.image_path);
  } catch (const ms::Error& e) {
    fail(kExitIo, e.what());
  }

  ms::Point seed{};
  json ann_info;
  if (!a.seed_str.empty()) {
    seed = parse_seed(a.seed_str);
  } else if (!a.annotation.empty()) {
    auto colon = a.annotation.rfind(':');
    if (colon == std::string::npos)
      fail(kExitIo, "--annotation expects FILE:ID");
    const std::string file = a.annotation.substr(0, colon);
    const std::string id = a.annotation.substr(colon + 1);
    try {
      auto anns = ms::parse_annotations(ms::read_file(file));
      const ms::Annotation* hit = nullptr;
      for (const auto& ann : anns)
        if (ann.record_id == id) hit = &ann;
      if (!hit) fail(kExitIo, "annotation id '" + id + "' not found in " + file);
      seed = ms::annotation_seed(*hit, img.height);
      ann_info = json{{"id", hit->record_id},
                      {"center", seed_json(*hit->center)},
                      {"radius", *hit->radius},
                      {"converted_seed", seed_json(seed)}};
    } catch (const ms::Error& e) {
      fail(kExitIo, e.what());
    }
  } else {
    fail(kExitIo, "segment needs --seed or --annotation");
  }
  if (seed.x < 0 || seed.x >= img.width || seed.y < 0 || seed.y >= img.height)
    fail(kExitIo, "seed out of image bounds");

  std::string cfg_text;
  try {
    cfg_text = read_config(a.config_path);
  } catch (const ms::Error& e) {
    fail(kExitIo, e.what());
  }

  std::string prefix = a.out_prefix;
  if (prefix.empty())
    prefix = default_out_dir() + "/" +
             std::filesystem::path(a.image_path).stem().string();

  ms::Mask mask;
  std::optional<ms::Contour> contour;
  json params;
  json work;
  try {
    if (a.method == "saliency") {
      ms::SaliencyConfig cfg = ms::saliency_config_from_json(cfg_text);
      ms::SaliencyResult res = ms::saliency_segment(img, seed, cfg);
      mask = std::move(res.mask);
      contour = ms::trace_boundary(mask, seed);
      params = conservative_json(cfg.contour);
      params["otsu_bins"] = cfg.otsu_bins;
      work = json{{"threshold", res.threshold},
                  {"d_max", res.partition.d_max},
                  {"bootstrap_points", res.bootstrap.points.size()},
                  {"mask_pixels", mask.count()}};
    } else if (a.method == "rg") {
      int tau = ms::rg_tau_from_json(cfg_text);
      mask = ms::region_growing(img, seed, tau);
      if (mask.count() >= 4) {
        try {
          contour = ms::trace_boundary(mask, seed);
        } catch (const ms::Error&) {
          contour.reset();  // degenerate blob; mask output still valid
        }
      }
      params = json{{"tau", tau}};
      work = json{{"mask_pixels", mask.count()}};
    } else if (a.method == "ac") {
      ms::AcSegmentConfig cfg = ms::ac_config_from_json(cfg_text);
      ms::Polygon init = ms::circle_polygon(
          {static_cast<double>(seed.x), static_cast<double>(seed.y)}, cfg.init_radius,
          std::max(16, cfg.snake.n_points));
      for (ms::PointF& p : init) {
        p.x = std::clamp(p.x, 0.0, static_cast<double>(img.width - 1));
        p.y = std::clamp(p.y, 0.0, static_cast<double>(img.height - 1));
      }
      ms::Contour result = ms::active_contour(img, ms::rasterize_closed(init), cfg.snake);
      mask = ms::region_from_contour(result, img.width, img.height);
      contour = std::move(result);
      params = snake_json(cfg.snake);
      params["init_radius"] = cfg.init_radius;
      work = json{{"contour_points", contour->points.size()},
                  {"mask_pixels", mask.count()}};
    } else {
      fail(kExitIo, "unknown method '" + a.method + "' (want saliency|rg|ac)");
    }
  } catch (const ms::NoContrast& e) {
    fail(kExitSegmentation, std::string("NoContrast: ") + e.what());
  } catch (const ms::SegmentationFailed& e) {
    fail(kExitSegmentation, std::string("SegmentationFailed: ") + e.what());
  } catch (const ms::SchemaError& e) {
    fail(kExitSchema, e.what());
  } catch (const ms::Error& e) {
    fail(kExitIo, e.what());
  }

  try {
    ms::write_pgm_file(prefix + "_mask.pgm", ms::mask_to_image(mask, img.max_gray));
    ms::write_pgm_file(prefix + "_overlay.pgm", overlay_boundary(img, mask));
    if (!a.contour_out.empty() && contour) write_contour_csv(a.contour_out, *contour);
    if (!a.svg_out.empty() && contour)
      write_contour_svg(a.svg_out, *contour, img.width, img.height);

    json summary{{"schema_version", 1},
                 {"command", "segment"},
                 {"method", a.method},
                 {"image", a.image_path},
                 {"seed", seed_json(seed)},
                 {"params", params},
                 {"work", work}};
    if (!ann_info.is_null()) summary["annotation"] = ann_info;
    if (a.timings) {
      const auto t1 = std::chrono::steady_clock::now();
      summary["timings_ms"] =
          std::chrono::duration<double, std::milli>(t1 - t0).count();
    }
    ms::atomic_write_file(prefix + "_summary.json", summary.dump(2) + "\n");
  } catch (const ms::Error& e) {
    fail(kExitIo, e.what());
  }
  return kExitOk;
}

// ------------------------------------------------------------------ features

int run_features(const std::string& image_path, const std::string& mask_path,
                 std::string id, const std::string& out_path, const std::string& label) {
  ms::Image img;
  ms::Mask mask;
  try {
    img = ms::read_pgm_file(image_path);
    mask = ms::image_to_mask(ms::read_pgm_file(mask_path));
  } catch (const ms::Error& e) {
    fail(kExitIo, e.what());
  }
  if (id.empty()) id = std::filesystem::path(image_path).stem().string();

  ms::FeatureRow row;
  row.id = id;
  if (!label.empty()) {
    if (label != "B" && label != "M") fail(kExitIo, "--label must be B or M");
    row.label = label[0];
  }
  try {
    ms::Contour contour = ms::trace_boundary(mask);
    row.features = ms::extract_all(img, mask, contour);
  } catch (const ms::Error& e) {
    fail(kExitIo, e.what());
  }

  try {
    std::string existing;
    bool have = std::filesystem::exists(out_path);
    if (have) {
      existing = ms::read_file(out_path);
      // sanity-check the header before appending
      ms::parse_feature_csv(existing);
      if (!existing.empty() && existing.back() != '\n') existing += '\n';
    } else {
      existing = std::string(ms::kFeatureCsvHeader) + "\n";
    }
    existing += ms::feature_csv_line(row) + "\n";
    ms::atomic_write_file(out_path, existing);
  } catch (const ms::SchemaError& e) {
    fail(kExitSchema, e.what());
  } catch (const ms::Error& e) {
    fail(kExitIo, e.what());
  }
  return kExitOk;
}

// ------------------------------------------------------------------ train

int run_train(const std::string& data_path, const std::string& model_kind,
              const std::string& config_path, const std::string& out_path) {
  std::vector<ms::FeatureRow> rows;
  json cfg;
  try {
    rows = ms::parse_feature_csv(ms::read_file(data_path));
    cfg = json::parse(read_config(config_path));
    if (!cfg.is_object()) throw ms::SchemaError("train config: expected a JSON object");
  } catch (const ms::SchemaError& e) {
    fail(kExitSchema, e.what());
  } catch (const ms::Error& e) {
    fail(kExitIo, e.what());
  } catch (const json::exception& e) {
    fail(kExitIo, std::string("train config: ") + e.what());
  }
  if (rows.empty()) fail(kExitSchema, "train: dataset has no rows");

  auto reject_unknown = [&](std::initializer_list<const char*> known) {
    std::set<std::string> k;
    for (const char* s : known) k.insert(s);
    for (const auto& [key, _] : cfg.items())
      if (!k.count(key)) fail(kExitSchema, "train config: unknown key '" + key + "'");
  };
  auto geti = [&](const char* key, int fb) { return cfg.contains(key) ? cfg.at(key).get<int>() : fb; };
  auto getd = [&](const char* key, double fb) {
    return cfg.contains(key) ? cfg.at(key).get<double>() : fb;
  };
  auto getu = [&](const char* key, uint64_t fb) {
    return cfg.contains(key) ? cfg.at(key).get<uint64_t>() : fb;
  };

  const ms::FeatureMatrix x = ms::feature_matrix(rows);
  ms::Model model;
  try {
    if (model_kind == "tree") {
      reject_unknown({"max_depth", "min_samples_split"});
      ms::TreeConfig tc{geti("max_depth", 16), geti("min_samples_split", 2)};
      model.value = ms::tree_train(x, ms::labels_of(rows), tc);
    } else if (model_kind == "knn") {
      reject_unknown({"k"});
      model.value = ms::knn_fit(x, ms::labels_of(rows), geti("k", 3));
    } else if (model_kind == "nb") {
      reject_unknown({});
      model.value = ms::nb_train(x, ms::labels_of(rows));
    } else if (model_kind == "kmeans") {
      reject_unknown({"k", "max_iters", "rng_seed"});
      ms::KMeansConfig kc;
      kc.max_iters = geti("max_iters", kc.max_iters);
      kc.rng_seed = getu("rng_seed", kc.rng_seed);
      model.value = ms::kmeans(x, geti("k", 2), kc);
    } else if (model_kind == "fcm") {
      reject_unknown({"c", "fuzzifier", "max_iters", "tol", "rng_seed"});
      ms::FcmConfig fc;
      fc.fuzzifier = getd("fuzzifier", fc.fuzzifier);
      fc.max_iters = geti("max_iters", fc.max_iters);
      fc.tol = getd("tol", fc.tol);
      fc.rng_seed = getu("rng_seed", fc.rng_seed);
      model.value = ms::fcm(x, geti("c", 2), fc);
    } else if (model_kind == "pam") {
      reject_unknown({"k", "max_swaps"});
      ms::PamConfig pc{geti("max_swaps", 1000)};
      model.value = ms::pam(x, geti("k", 2), pc);
    } else if (model_kind == "svm") {
      reject_unknown({"lambda", "epochs", "rng_seed", "standardize", "fit_bias"});
      ms::SvmConfig sc;
      sc.lambda = getd("lambda", sc.lambda);
      sc.epochs = geti("epochs", sc.epochs);
      sc.rng_seed = getu("rng_seed", sc.rng_seed);
      if (cfg.contains("standardize")) sc.standardize = cfg.at("standardize").get<bool>();
      if (cfg.contains("fit_bias")) sc.fit_bias = cfg.at("fit_bias").get<bool>();
      std::vector<int> y;
      for (int v : ms::labels_of(rows)) y.push_back(v == 1 ? 1 : -1);
      model.value = ms::svm_train(x, y, sc);
    } else {
      fail(kExitSchema, "unknown model kind '" + model_kind + "'");
    }
  } catch (const ms::SchemaError& e) {
    fail(kExitSchema, e.what());
  } catch (const ms::Error& e) {
    fail(kExitSchema, e.what());
  } catch (const json::exception& e) {
    fail(kExitSchema, std::string("train config: ") + e.what());
  }

  try {
    ms::atomic_write_file(out_path, ms::model_to_json(model));
  } catch (const ms::Error& e) {
    fail(kExitIo, e.what());
  }
  return kExitOk;
}

// ------------------------------------------------------------------ evaluate

int run_evaluate(const std::string& outcomes_path, const std::string& model_path,
                 const std::string& data_path, const std::string& out_path) {
  ms::ConfusionMatrix cm;
  try {
    if (!outcomes_path.empty()) {
      auto outcomes = ms::parse_outcomes_csv(ms::read_file(outcomes_path));
      std::vector<int> pred, label;
      for (const auto& o : outcomes) {
        pred.push_back(o.prediction);
        label.push_back(o.label);
      }
      cm = ms::confusion(pred, label);
    } else {
      if (model_path.empty() || data_path.empty())
        fail(kExitIo, "evaluate needs --outcomes or both --model and --data");
      ms::Model model = ms::model_from_json(ms::read_file(model_path));
      auto rows = ms::parse_feature_csv(ms::read_file(data_path));
      if (rows.empty()) fail(kExitSchema, "evaluate: dataset has no rows");
      const ms::FeatureMatrix x = ms::feature_matrix(rows);
      const std::vector<int> y = ms::labels_of(rows);
      std::vector<int> pred;
      pred.reserve(x.size());
      for (const auto& row : x) {
        int p = ms::model_predict(model, row);
        if (p != 0 && p != 1)
          fail(kExitSchema, "evaluate: model predicts class " + std::to_string(p) +
                                ", not a binary screening call");
        pred.push_back(p);
      }
      cm = ms::confusion(pred, y);
    }
  } catch (const ms::SchemaError& e) {
    fail(kExitSchema, e.what());
  } catch (const ms::InvalidArgument& e) {
    fail(kExitSchema, e.what());
  } catch (const ms::Error& e) {
    fail(kExitIo, e.what());
  }

  const ms::ScreeningMetrics m = ms::screening_metrics(cm);
  std::printf("cases        %ld\n", cm.total());
  std::printf("TP %ld  FP %ld  TN %ld  FN %ld\n", cm.tp, cm.fp, cm.tn, cm.fn);
  std::printf("sensitivity  %s\n", fmt_metric(m.sensitivity).c_str());
  std::printf("specificity  %s\n", fmt_metric(m.specificity).c_str());
  std::printf("fnr          %s\n", fmt_metric(m.fnr).c_str());
  std::printf("accuracy     %s\n", fmt_metric(m.accuracy).c_str());
  std::printf("precision    %s\n", fmt_metric(m.precision).c_str());

  if (!out_path.empty()) {
    json j{{"schema_version", 1},
           {"command", "evaluate"},
           {"confusion", {{"tp", cm.tp}, {"fp", cm.fp}, {"tn", cm.tn}, {"fn", cm.fn}}},
           {"metrics",
            {{"sensitivity", metric_json(m.sensitivity)},
             {"specificity", metric_json(m.specificity)},
             {"fnr", metric_json(m.fnr)},
             {"accuracy", metric_json(m.accuracy)},
             {"precision", metric_json(m.precision)}}}};
    try {
      ms::atomic_write_file(out_path, j.dump(2) + "\n");
    } catch (const ms::Error& e) {
      fail(kExitIo, e.what());
    }
  }
  return kExitOk;
}

// ------------------------------------------------------------------ compare

int run_compare(const std::string& image_path, const std::string& seed_str,
                const std::string& truth_path, const std::string& config_path,
                std::string out_prefix) {
  ms::Image img;
  ms::Mask truth;
  ms::CompareConfig cfg;
  try {
    img = ms::read_pgm_file(image_path);
    truth = ms::image_to_mask(ms::read_pgm_file(truth_path));
    cfg = ms::compare_config_from_json(read_config(config_path));
  } catch (const ms::SchemaError& e) {
    fail(kExitSchema, e.what());
  } catch (const ms::Error& e) {
    fail(kExitIo, e.what());
  }
  const ms::Point seed = parse_seed(seed_str);
  if (out_prefix.empty())
    out_prefix = default_out_dir() + "/" +
                 std::filesystem::path(image_path).stem().string() + "_compare";

  std::vector<ms::MethodRow> rows;
  try {
    rows = ms::compare_methods(img, seed, truth, cfg);
  } catch (const ms::Error& e) {
    fail(kExitIo, e.what());
  }

  std::string table = "method    status  dice    jaccard  hausdorff\n";
  json jrows = json::array();
  for (const ms::MethodRow& r : rows) {
    char line[128];
    if (r.ok) {
      std::snprintf(line, sizeof(line), "%-9s ok      %.4f  %.4f   %s\n", r.method.c_str(),
                    r.stats.dice, r.stats.jaccard, fmt_metric(r.stats.hausdorff).c_str());
    } else {
      std::snprintf(line, sizeof(line), "%-9s failed  -       -        -\n", r.method.c_str());
    }
    table += line;
    json jr{{"method", r.method}, {"ok", r.ok}};
    if (r.ok) {
      jr["dice"] = r.stats.dice;
      jr["jaccard"] = r.stats.jaccard;
      jr["hausdorff"] = metric_json(r.stats.hausdorff);
    } else {
      jr["error"] = r.error;
    }
    jrows.push_back(std::move(jr));
  }
  std::fputs(table.c_str(), stdout);

  try {
    for (const ms::MethodRow& r : rows) {
      if (!r.ok) continue;
      ms::write_pgm_file(out_prefix + "_" + r.method + "_mask.pgm",
                         ms::mask_to_image(r.mask, img.max_gray));
      ms::write_pgm_file(out_prefix + "_" + r.method + "_overlay.pgm",
                         overlay_boundary(img, r.mask));
    }
    json j{{"schema_version", 1},
           {"command", "compare"},
           {"image", image_path},
           {"seed", seed_json(seed)},
           {"rows", jrows}};
    ms::atomic_write_file(out_prefix + "_report.json", j.dump(2) + "\n");
    ms::atomic_write_file(out_prefix + "_report.txt", table);
  } catch (const ms::Error& e) {
    fail(kExitIo, e.what());
  }
  return kExitOk;
}

// ------------------------------------------------------------------ phantom

int run_phantom(const std::string& config_path, const std::string& out_path,
                const std::string& mask_out) {
  ms::Phantom ph;
  try {
    ph = ms::synth_phantom(ms::phantom_spec_from_json(ms::read_file(config_path)));
  } catch (const ms::SchemaError& e) {
    fail(kExitSchema, e.what());
  } catch (const ms::Error& e) {
    fail(kExitIo, e.what());
  }
  try {
    ms::write_pgm_file(out_path, ph.image);
    if (!mask_out.empty())
      ms::write_pgm_file(mask_out, ms::mask_to_image(ph.mask, ph.image.max_gray));
  } catch (const ms::Error& e) {
    fail(kExitIo, e.what());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mammography mass segmentation and radiomics toolkit"};
  app.require_subcommand(1);

  // segment
  SegmentArgs seg;
  CLI::App* c_seg = app.add_subcommand("segment", "segment a mass around a seed point");
  c_seg->add_option("image", seg.image_path, "input PGM image")->required();
  c_seg->add_option("--seed", seg.seed_str, "seed pixel as x,y");
  c_seg->add_option("--annotation", seg.annotation,
                    "FILE:ID; seed from the annotated mass center");
  c_seg->add_option("--method", seg.method, "saliency | rg | ac");
  c_seg->add_option("--config", seg.config_path, "method config JSON");
  c_seg->add_option("--out", seg.out_prefix, "output path prefix");
  c_seg->add_option("--contour-out", seg.contour_out, "write the boundary as CSV points");
  c_seg->add_option("--svg-out", seg.svg_out, "write the boundary as an SVG polyline");
  c_seg->add_flag("--timings", seg.timings, "include wall-clock timings in the summary");

  // features
  std::string f_image, f_mask, f_id, f_out = "features.csv", f_label;
  CLI::App* c_feat = app.add_subcommand("features", "extract the mass feature vector");
  c_feat->add_option("image", f_image, "input PGM image")->required();
  c_feat->add_option("mask", f_mask, "mass mask PGM")->required();
  c_feat->add_option("--id", f_id, "row id (defaults to the image stem)");
  c_feat->add_option("--out", f_out, "feature CSV to append to");
  c_feat->add_option("--label", f_label, "severity label B or M");

  // train
  std::string t_data, t_model, t_config, t_out = "model.json";
  CLI::App* c_train = app.add_subcommand("train", "train a model on a feature CSV");
  c_train->add_option("data", t_data, "feature CSV")->required();
  c_train->add_option("--model", t_model, "tree|knn|nb|kmeans|fcm|pam|svm")->required();
  c_train->add_option("--config", t_config, "model config JSON");
  c_train->add_option("--out", t_out, "model JSON path");

  // evaluate
  std::string e_outcomes, e_model, e_data, e_out;
  CLI::App* c_eval = app.add_subcommand("evaluate", "confusion matrix and screening metrics");
  c_eval->add_option("--outcomes", e_outcomes, "outcome CSV (prediction,label)");
  c_eval->add_option("--model", e_model, "model JSON");
  c_eval->add_option("--data", e_data, "labeled feature CSV");
  c_eval->add_option("--out", e_out, "metrics JSON path");

  // compare
  std::string cp_image, cp_seed, cp_truth, cp_config, cp_out;
  CLI::App* c_cmp = app.add_subcommand("compare", "run all methods against a ground truth");
  c_cmp->add_option("image", cp_image, "input PGM image")->required();
  c_cmp->add_option("--seed", cp_seed, "seed pixel as x,y")->required();
  c_cmp->add_option("--truth", cp_truth, "ground-truth mask PGM")->required();
  c_cmp->add_option("--config", cp_config, "compare config JSON");
  c_cmp->add_option("--out", cp_out, "output path prefix");

  // phantom
  std::string p_config, p_out = "phantom.pgm", p_mask;
  CLI::App* c_ph = app.add_subcommand("phantom", "generate a synthetic test image");
  c_ph->add_option("--config", p_config, "phantom spec JSON")->required();
  c_ph->add_option("--out", p_out, "output image path");
  c_ph->add_option("--mask-out", p_mask, "ground-truth mask path");

  CLI11_PARSE(app, argc, argv);

  if (*c_seg) return run_segment(seg);
  if (*c_feat) return run_features(f_image, f_mask, f_id, f_out, f_label);
  if (*c_train) return run_train(t_data, t_model, t_config, t_out);
  if (*c_eval) return run_evaluate(e_outcomes, e_model, e_data, e_out);
  if (*c_cmp) return run_compare(cp_image, cp_seed, cp_truth, cp_config, cp_out);
  if (*c_ph) return run_phantom(p_config, p_out, p_mask);
  return kExitOk;
}
