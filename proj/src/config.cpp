#include "anosovkit/config.hpp"

namespace anosov {

void Config::require_hyperbolic() const {
  Int tr = monodromy.trace();
  if (tr <= 2 && tr >= -2)
    fail(errc::not_hyperbolic, "monodromy must have |trace| > 2");
}

Config config_from_json(const Json& j) {
  Config c;
  if (!j.is_object()) fail(errc::bad_argument, "config must be a JSON object");
  if (j.contains("monodromy")) c.monodromy = int_matrix2_from_json(j.at("monodromy"));
  if (j.contains("k")) c.default_k = j.at("k").get<long long>();
  if (j.contains("bound")) c.bound = j.at("bound").get<long long>();
  if (j.contains("samples")) c.samples = j.at("samples").get<int>();
  if (j.contains("window")) c.window = j.at("window").get<long long>();
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("format")) c.format = j.at("format").get<std::string>();
  if (j.contains("field_amplitude")) c.field_amplitude = j.at("field_amplitude").get<double>();
  if (j.contains("tolerance")) c.tolerance = j.at("tolerance").get<double>();
  if (c.format != "json" && c.format != "csv")
    fail(errc::bad_argument, "format must be json or csv");
  if (c.bound < 0 || c.samples < 100 || c.window < 0)
    fail(errc::bad_argument, "bound/window must be >= 0 and samples >= 100");
  return c;
}

Json to_json(const Config& c) {
  return {{"monodromy", to_json(c.monodromy)},
          {"k", c.default_k},
          {"bound", c.bound},
          {"samples", c.samples},
          {"window", c.window},
          {"seed", c.seed},
          {"format", c.format},
          {"field_amplitude", c.field_amplitude},
          {"tolerance", c.tolerance}};
}

}  // namespace anosov
