#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>

#include "anosovkit/blowup.hpp"
#include "anosovkit/homology.hpp"
#include "anosovkit/orbit_space.hpp"
#include "anosovkit/symmetry.hpp"
#include "anosovkit/toral.hpp"

namespace anosov {

using Json = nlohmann::json;

// matrices and holonomy vectors as decimal strings, rationals as "p/q"

Json to_json(const IntMatrix2& m);
IntMatrix2 int_matrix2_from_json(const Json& j);

Json to_json(const IntVec2& v);
IntVec2 int_vec2_from_json(const Json& j);

Json to_json(const TorusPoint& p);
TorusPoint torus_point_from_json(const Json& j);

Json to_json(const PeriodicOrbit& orbit);
PeriodicOrbit orbit_from_json(const Json& j);

Json to_json(const FreeHomotopyClass& c);
FreeHomotopyClass homotopy_class_from_json(const Json& j);

Json to_json(const SolSymmetry& s);
SolSymmetry symmetry_from_json(const Json& j, const IntMatrix2& base);

Json to_json(const AbelianGroup& g);
Json to_json(const CurveClass& c);
Json to_json(const GroupTable& table);
Json to_json(const HomotopySearch& search);
Json to_json(const TransversalityReport& report);
Json to_json(const PinchReport& report);
Json to_json(const StripPoint& p);

/// Compact dump with sorted keys; the hashing base for certificates.
std::string canonical_dump(const Json& j);

std::uint64_t canonical_hash(const Json& j);
std::string hash_hex(std::uint64_t h);

}  // namespace anosov
