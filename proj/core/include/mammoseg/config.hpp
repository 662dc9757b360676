#pragma once

#include <string_view>

#include "mammoseg/eval.hpp"
#include "mammoseg/phantom.hpp"
#include "mammoseg/segmentation.hpp"

namespace mammoseg {

/// JSON config parsers used by the CLI. Every key is optional and falls
/// back to the documented default; unknown keys are rejected with
/// SchemaError so typos cannot silently change a run.

PhantomSpec phantom_spec_from_json(std::string_view text);

SaliencyConfig saliency_config_from_json(std::string_view text);
SnakeParams snake_params_from_json(std::string_view text);
int rg_tau_from_json(std::string_view text);  // {"tau": int}

/// Snake parameters plus the radius of the initial circle around the seed.
struct AcSegmentConfig {
  SnakeParams snake;
  double init_radius = 40.0;
};
AcSegmentConfig ac_config_from_json(std::string_view text);

CompareConfig compare_config_from_json(std::string_view text);

}  // namespace mammoseg
