// anosovkit command-line front end; talks to the shared library through the
// C API only.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "anosovkit.h"

namespace {

using nlohmann::json;

struct Options {
  std::string config_path;
  std::string format;  // empty = subcommand default
  long long period = 3;
  long long bound = 3;
  long long k = 0;
  bool k_set = false;
  int samples = 0;
  std::string out_path;
  std::string in_path;
  bool demo = false;
};

int exit_code(ak_status status) {
  switch (status) {
    case AK_OK: return 0;
    case AK_USAGE_ERROR: return 2;
    default: return 1;
  }
}

json load_config_json(const Options& opt) {
  json cfg = json::object();
  if (!opt.config_path.empty()) {
    std::ifstream in(opt.config_path);
    if (!in) {
      std::cerr << "error: cannot open config file " << opt.config_path << "\n";
      std::exit(2);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    cfg = json::parse(buffer.str(), nullptr, false);
    if (cfg.is_discarded() || !cfg.is_object()) {
      std::cerr << "error: config file is not a JSON object\n";
      std::exit(2);
    }
  }
  if (opt.samples > 0) cfg["samples"] = opt.samples;
  if (const char* seed = std::getenv("ANOSOV_KIT_SEED")) cfg["seed"] = std::strtoull(seed, nullptr, 10);
  return cfg;
}

long long effective_k(const Options& opt, const json& cfg) {
  if (opt.k_set) return opt.k;
  if (cfg.contains("k")) return cfg["k"].get<long long>();
  return 5;
}

int report_failure(ak_status status) {
  std::cerr << "error: " << ak_last_error() << "\n";
  return exit_code(status);
}

int print_result(ak_status status, char* payload, const std::string& out_path) {
  if (status != AK_OK && !payload) return report_failure(status);
  std::string text = payload ? payload : "";
  ak_string_free(payload);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    out << text << "\n";
    std::cout << "wrote " << out_path << "\n";
  } else {
    std::cout << text << "\n";
  }
  if (status != AK_OK) {
    std::cerr << "error: " << ak_last_error() << "\n";
    return exit_code(status);
  }
  return 0;
}

int require_format(const Options& opt, std::initializer_list<const char*> allowed) {
  if (opt.format.empty()) return 0;
  for (const char* f : allowed)
    if (opt.format == f) return 0;
  std::cerr << "error: format '" << opt.format << "' is not available for this subcommand\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symmetry and surgery toolkit for the cat-map suspension flow"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--config", opt.config_path, "JSON config file");
  app.add_option("--format", opt.format, "output format (json or csv)")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--samples", opt.samples, "samples per curve segment");

  CLI::App* orbits = app.add_subcommand("orbits", "periodic points grouped into orbits");
  orbits->add_option("--period", opt.period, "period of the iterate")->required();

  CLI::App* nielsen = app.add_subcommand("nielsen", "free-homotopy classification at a period");
  nielsen->add_option("--period", opt.period, "period of the iterate")->required();

  CLI::App* symmetries = app.add_subcommand("symmetries", "normalizer census and quotient group");
  symmetries->add_option("--bound", opt.bound, "max |entry| of the census");

  CLI::App* homology = app.add_subcommand("homology", "H1 of the suspension, exterior and filling");
  homology->add_option("--k", opt.k, "filling slope")->each([&](const std::string&) { opt.k_set = true; });

  CLI::App* orbit_space = app.add_subcommand("orbit-space", "strip-model demo data");
  orbit_space->add_flag("--demo", opt.demo, "emit the demo CSV");

  CLI::App* surgery = app.add_subcommand("surgery-check", "transverse curve and margin for slope k");
  surgery->add_option("--k", opt.k, "filling slope")->each([&](const std::string&) { opt.k_set = true; });

  CLI::App* certificate = app.add_subcommand("certificate", "build the full certificate for slope k");
  certificate->add_option("--k", opt.k, "filling slope")->each([&](const std::string&) { opt.k_set = true; });
  certificate->add_option("--out", opt.out_path, "write the certificate JSON here");

  CLI::App* replay = app.add_subcommand("replay", "re-run all checks of a stored certificate");
  replay->add_option("--in", opt.in_path, "certificate JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  json cfg = load_config_json(opt);
  ak_toolkit* kit = nullptr;
  ak_status status = ak_toolkit_new(cfg.empty() ? nullptr : cfg.dump().c_str(), &kit);
  if (status != AK_OK) return report_failure(status);

  char* payload = nullptr;
  int code = 0;

  if (orbits->parsed()) {
    if ((code = require_format(opt, {"json", "csv"}))) return code;
    status = opt.format == "csv" ? ak_orbits_csv(kit, opt.period, &payload)
                                 : ak_orbits(kit, opt.period, &payload);
    code = print_result(status, payload, "");
  } else if (nielsen->parsed()) {
    if ((code = require_format(opt, {"json"}))) return code;
    status = ak_nielsen(kit, opt.period, &payload);
    code = print_result(status, payload, "");
  } else if (symmetries->parsed()) {
    if ((code = require_format(opt, {"json"}))) return code;
    status = ak_symmetries(kit, opt.bound, &payload);
    code = print_result(status, payload, "");
  } else if (homology->parsed()) {
    if ((code = require_format(opt, {"json"}))) return code;
    status = ak_homology(kit, effective_k(opt, cfg), &payload);
    code = print_result(status, payload, "");
  } else if (orbit_space->parsed()) {
    if ((code = require_format(opt, {"csv"}))) return code;
    if (!opt.demo) {
      std::cerr << "error: orbit-space requires --demo\n";
      code = 2;
    } else {
      status = ak_orbit_space_demo(kit, &payload);
      code = print_result(status, payload, "");
    }
  } else if (surgery->parsed()) {
    if ((code = require_format(opt, {"json", "csv"}))) return code;
    status = opt.format == "csv" ? ak_surgery_curve_csv(kit, effective_k(opt, cfg), &payload)
                                 : ak_surgery_check(kit, effective_k(opt, cfg), &payload);
    code = print_result(status, payload, "");
  } else if (certificate->parsed()) {
    if ((code = require_format(opt, {"json"}))) return code;
    status = ak_certificate(kit, effective_k(opt, cfg), &payload);
    code = print_result(status, payload, opt.out_path);
  } else if (replay->parsed()) {
    if ((code = require_format(opt, {"json"}))) return code;
    std::ifstream in(opt.in_path);
    if (!in) {
      std::cerr << "error: cannot open " << opt.in_path << "\n";
      code = 2;
    } else {
      std::stringstream buffer;
      buffer << in.rdbuf();
      status = ak_replay(kit, buffer.str().c_str(), &payload);
      code = print_result(status, payload, "");
    }
  }

  ak_toolkit_free(kit);
  return code;
}
