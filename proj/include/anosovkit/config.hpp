#pragma once

#include <cstdint>
#include <string>

#include "anosovkit/json_io.hpp"

namespace anosov {

/// Runtime configuration shared by the C API and the CLI. JSON layout:
/// {"monodromy": [["2","1"],["1","1"]], "k": 5, "bound": 3, "samples": 2000,
///  "window": 5, "seed": 424243, "format": "json", "field_amplitude": 0.15,
///  "tolerance": 1e-9}
struct Config {
  IntMatrix2 monodromy = cat_map();
  long long default_k = 5;
  long long bound = 3;
  int samples = 2000;
  long long window = 5;
  std::uint64_t seed = 424243;
  std::string format = "json";
  double field_amplitude = 0.15;
  double tolerance = 1e-9;

  /// Dynamics subcommands need a hyperbolic monodromy.
  void require_hyperbolic() const;
};

Config config_from_json(const Json& j);
Json to_json(const Config& c);

}  // namespace anosov
