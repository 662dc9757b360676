#include "mammoseg/config.hpp"

#include <set>
#include <string>

#include <nlohmann/json.hpp>

namespace mammoseg {

using nlohmann::json;

namespace {

json parse_object(std::string_view text, const char* what) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string(what) + ": invalid JSON: " + e.what());
  }
  if (!j.is_object()) throw SchemaError(std::string(what) + ": expected a JSON object");
  return j;
}

void reject_unknown(const json& j, const std::set<std::string>& known, const char* what) {
  for (const auto& [key, _] : j.items())
    if (!known.count(key))
      throw SchemaError(std::string(what) + ": unknown key '" + key + "'");
}

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw SchemaError(std::string("config: bad value for '") + key + "'");
  }
}

ConservativeParams conservative_from(const json& j) {
  ConservativeParams p;
  p.r0 = get_or(j, "r0", p.r0);
  p.step = get_or(j, "step", p.step);
  p.blur_sigma = get_or(j, "blur_sigma", p.blur_sigma);
  p.drop_fraction = get_or(j, "drop_fraction", p.drop_fraction);
  p.max_steps = get_or(j, "max_steps", p.max_steps);
  p.spacing = get_or(j, "spacing", p.spacing);
  p.min_points = get_or(j, "min_points", p.min_points);
  p.max_points = get_or(j, "max_points", p.max_points);
  return p;
}

const std::set<std::string> kSaliencyKeys = {"r0",       "step",       "blur_sigma",
                                             "drop_fraction", "max_steps", "spacing",
                                             "min_points",    "max_points", "otsu_bins"};

SaliencyConfig saliency_from(const json& j) {
  reject_unknown(j, kSaliencyKeys, "saliency config");
  SaliencyConfig cfg;
  cfg.contour = conservative_from(j);
  cfg.otsu_bins = get_or(j, "otsu_bins", cfg.otsu_bins);
  return cfg;
}

const std::set<std::string> kSnakeKeys = {"alpha",   "beta",          "gamma",
                                          "window",  "max_iters",     "n_points",
                                          "resample_every", "stop_moved_fraction"};

SnakeParams snake_from(const json& j) {
  reject_unknown(j, kSnakeKeys, "snake config");
  SnakeParams p;
  p.alpha = get_or(j, "alpha", p.alpha);
  p.beta = get_or(j, "beta", p.beta);
  p.gamma = get_or(j, "gamma", p.gamma);
  p.window = get_or(j, "window", p.window);
  p.max_iters = get_or(j, "max_iters", p.max_iters);
  p.n_points = get_or(j, "n_points", p.n_points);
  p.resample_every = get_or(j, "resample_every", p.resample_every);
  p.stop_moved_fraction = get_or(j, "stop_moved_fraction", p.stop_moved_fraction);
  return p;
}

}  // namespace

PhantomSpec phantom_spec_from_json(std::string_view text) {
  json j = parse_object(text, "phantom config");
  reject_unknown(j,
                 {"width", "height", "max_gray", "shape", "fg_level", "bg_level",
                  "noise_sigma", "rng_seed"},
                 "phantom config");
  PhantomSpec spec;
  spec.width = get_or(j, "width", 0);
  spec.height = get_or(j, "height", 0);
  spec.max_gray = get_or(j, "max_gray", 255);
  spec.fg_level = get_or(j, "fg_level", 0);
  spec.bg_level = get_or(j, "bg_level", 0);
  spec.noise_sigma = get_or(j, "noise_sigma", 0.0);
  spec.rng_seed = get_or(j, "rng_seed", static_cast<uint64_t>(0));

  if (!j.contains("shape")) throw SchemaError("phantom config: missing 'shape'");
  const json& sh = j.at("shape");
  if (!sh.is_object() || !sh.contains("type"))
    throw SchemaError("phantom config: shape needs a 'type'");
  const std::string type = sh.at("type").get<std::string>();
  if (type == "disc") {
    reject_unknown(sh, {"type", "cx", "cy", "r"}, "disc shape");
    spec.shape = Disc{{get_or(sh, "cx", 0.0), get_or(sh, "cy", 0.0)}, get_or(sh, "r", 0.0)};
  } else if (type == "gaussian_blob") {
    reject_unknown(sh, {"type", "cx", "cy", "sigma"}, "gaussian_blob shape");
    spec.shape = GaussianBlob{{get_or(sh, "cx", 0.0), get_or(sh, "cy", 0.0)},
                              get_or(sh, "sigma", 0.0)};
  } else if (type == "ellipse") {
    reject_unknown(sh, {"type", "cx", "cy", "a", "b", "angle_deg"}, "ellipse shape");
    spec.shape = EllipseShape{{get_or(sh, "cx", 0.0), get_or(sh, "cy", 0.0)},
                              get_or(sh, "a", 0.0),
                              get_or(sh, "b", 0.0),
                              get_or(sh, "angle_deg", 0.0) * 3.14159265358979323846 / 180.0};
  } else {
    throw SchemaError("phantom config: unknown shape type '" + type + "'");
  }
  return spec;
}

SaliencyConfig saliency_config_from_json(std::string_view text) {
  return saliency_from(parse_object(text, "saliency config"));
}

SnakeParams snake_params_from_json(std::string_view text) {
  return snake_from(parse_object(text, "snake config"));
}

int rg_tau_from_json(std::string_view text) {
  json j = parse_object(text, "rg config");
  reject_unknown(j, {"tau"}, "rg config");
  return get_or(j, "tau", 25);
}

AcSegmentConfig ac_config_from_json(std::string_view text) {
  json j = parse_object(text, "ac config");
  std::set<std::string> keys = kSnakeKeys;
  keys.insert("init_radius");
  reject_unknown(j, keys, "ac config");
  AcSegmentConfig cfg;
  cfg.init_radius = get_or(j, "init_radius", cfg.init_radius);
  json snake = j;
  snake.erase("init_radius");
  cfg.snake = snake_from(snake);
  return cfg;
}

CompareConfig compare_config_from_json(std::string_view text) {
  json j = parse_object(text, "compare config");
  reject_unknown(j, {"saliency", "rg_tau", "snake", "ac_init_radius"}, "compare config");
  CompareConfig cfg;
  if (j.contains("saliency")) cfg.saliency = saliency_from(j.at("saliency"));
  cfg.rg_tau = get_or(j, "rg_tau", cfg.rg_tau);
  if (j.contains("snake")) cfg.snake = snake_from(j.at("snake"));
  cfg.ac_init_radius = get_or(j, "ac_init_radius", cfg.ac_init_radius);
  return cfg;
}

}  // namespace mammoseg
