#include "anosovkit.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "anosovkit/certificate.hpp"
#include "anosovkit/reports.hpp"

using namespace anosov;

struct ak_toolkit {
  Config config;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ak_status status_of(const Error& e) {
  switch (e.code()) {
    case errc::premise_violated: return AK_PREMISE_VIOLATED;
    case errc::stale_hash: return AK_STALE_HASH;
    case errc::bad_argument:
    case errc::bad_index:
    case errc::zero_slope: return AK_USAGE_ERROR;
    case errc::check_failed:
    case errc::not_closed:
    case errc::not_normalizing:
    case errc::non_invertible:
    case errc::degenerate:
    case errc::degenerate_segment:
    case errc::not_periodic:
    case errc::not_hyperbolic: return AK_CHECK_FAILED;
  }
  return AK_INTERNAL_ERROR;
}

template <typename Fn>
ak_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return AK_INTERNAL_ERROR;
  } catch (...) {
    g_last_error = "unknown error";
    return AK_INTERNAL_ERROR;
  }
}

ak_status emit(char** out, const std::string& payload) {
  if (!out) {
    g_last_error = "null output pointer";
    return AK_USAGE_ERROR;
  }
  *out = dup_string(payload);
  if (!*out) {
    g_last_error = "out of memory";
    return AK_INTERNAL_ERROR;
  }
  return AK_OK;
}

}  // namespace

extern "C" {

ak_status ak_toolkit_new(const char* config_json, ak_toolkit** out) {
  if (!out) {
    g_last_error = "null output pointer";
    return AK_USAGE_ERROR;
  }
  *out = nullptr;
  return guarded([&]() -> ak_status {
    Config cfg;
    if (config_json && *config_json) {
      Json j = Json::parse(config_json, nullptr, false);
      if (j.is_discarded()) fail(errc::bad_argument, "config is not valid JSON");
      cfg = config_from_json(j);
    }
    *out = new ak_toolkit{cfg};
    return AK_OK;
  });
}

void ak_toolkit_free(ak_toolkit* kit) { delete kit; }

const char* ak_version(void) { return "1.0.0"; }

const char* ak_last_error(void) { return g_last_error.c_str(); }

void ak_string_free(char* s) { std::free(s); }

#define AK_REQUIRE_KIT(kit)                  \
  if (!(kit)) {                              \
    g_last_error = "null toolkit handle";    \
    return AK_USAGE_ERROR;                   \
  }

ak_status ak_orbits(ak_toolkit* kit, long long period, char** out_json) {
  AK_REQUIRE_KIT(kit);
  return guarded([&] { return emit(out_json, orbits_report(kit->config, period).dump(2)); });
}

ak_status ak_orbits_csv(ak_toolkit* kit, long long period, char** out_csv) {
  AK_REQUIRE_KIT(kit);
  return guarded([&] { return emit(out_csv, orbits_csv(kit->config, period)); });
}

ak_status ak_nielsen(ak_toolkit* kit, long long period, char** out_json) {
  AK_REQUIRE_KIT(kit);
  return guarded([&] { return emit(out_json, nielsen_report(kit->config, period).dump(2)); });
}

ak_status ak_symmetries(ak_toolkit* kit, long long bound, char** out_json) {
  AK_REQUIRE_KIT(kit);
  return guarded([&] { return emit(out_json, symmetries_report(kit->config, bound).dump(2)); });
}

ak_status ak_homology(ak_toolkit* kit, long long k, char** out_json) {
  AK_REQUIRE_KIT(kit);
  return guarded([&] { return emit(out_json, homology_report(kit->config, k).dump(2)); });
}

ak_status ak_orbit_space_demo(ak_toolkit* kit, char** out_csv) {
  AK_REQUIRE_KIT(kit);
  return guarded([&] { return emit(out_csv, orbit_space_demo_csv(kit->config)); });
}

ak_status ak_surgery_check(ak_toolkit* kit, long long k, char** out_json) {
  AK_REQUIRE_KIT(kit);
  return guarded([&] { return emit(out_json, surgery_check_report(kit->config, k).dump(2)); });
}

ak_status ak_surgery_curve_csv(ak_toolkit* kit, long long k, char** out_csv) {
  AK_REQUIRE_KIT(kit);
  return guarded([&] { return emit(out_csv, surgery_curve_csv(kit->config, k)); });
}

ak_status ak_certificate(ak_toolkit* kit, long long k, char** out_json) {
  AK_REQUIRE_KIT(kit);
  return guarded([&] {
    Certificate cert = build_certificate(k);
    return emit(out_json, certificate_to_json(cert).dump(2));
  });
}

ak_status ak_replay(ak_toolkit* kit, const char* certificate_json, char** out_json) {
  AK_REQUIRE_KIT(kit);
  if (!certificate_json) {
    g_last_error = "null certificate";
    return AK_USAGE_ERROR;
  }
  return guarded([&]() -> ak_status {
    Json cert = Json::parse(certificate_json, nullptr, false);
    if (cert.is_discarded()) fail(errc::bad_argument, "certificate is not valid JSON");
    bool ok = replay_certificate(cert);
    Json result{{"replayed", ok}, {"k", cert.value("k", 0LL)}};
    ak_status emitted = emit(out_json, result.dump(2));
    if (emitted != AK_OK) return emitted;
    if (!ok) {
      g_last_error = "certificate checks did not reproduce";
      return AK_CHECK_FAILED;
    }
    return AK_OK;
  });
}

}  // extern "C"
