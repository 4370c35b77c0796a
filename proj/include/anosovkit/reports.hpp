#pragma once

#include <string>

#include "anosovkit/config.hpp"

namespace anosov {

// Structured outputs behind the CLI subcommands and the C API.

/// Fixed points of monodromy^period grouped into orbits of least period.
Json orbits_report(const Config& cfg, long long period);

/// Holonomy classes of the exact-period orbits and their pairwise
/// free-homotopy matrix; each fixed point is its own Nielsen class.
Json nielsen_report(const Config& cfg, long long period);

/// Normalizer census within the entry bound, quotient group modulo the deck
/// group, and the orientation-preserving subgroup.
Json symmetries_report(const Config& cfg, long long bound);

/// H1 of the suspension, the exterior and the k-filling, with the peripheral
/// class bookkeeping.
Json homology_report(const Config& cfg, long long k);

/// Strip-model samples: leaves, half-step orbit of a seed point, seeded
/// random points with their images, deck-model fixed points.
std::string orbit_space_demo_csv(const Config& cfg);

/// Transverse curve of class (1, k) with its sampled transversality margin
/// and the fibration compatibility data.
Json surgery_check_report(const Config& cfg, long long k);

/// Sampled points of the transverse curve for external plotting.
std::string surgery_curve_csv(const Config& cfg, long long k);

std::string orbits_csv(const Config& cfg, long long period);

}  // namespace anosov
