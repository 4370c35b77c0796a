#include "anosovkit/json_io.hpp"

#include <cstdio>

namespace anosov {

Json to_json(const IntMatrix2& m) {
  return Json::array({Json::array({to_decimal(m.a), to_decimal(m.b)}),
                      Json::array({to_decimal(m.c), to_decimal(m.d)})});
}

IntMatrix2 int_matrix2_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
      !j[1].is_array() || j[1].size() != 2)
    fail(errc::bad_argument, "matrix JSON must be [[a,b],[c,d]]");
  auto entry = [&](const Json& e) {
    if (e.is_string()) return int_from_decimal(e.get<std::string>());
    if (e.is_number_integer()) return Int(e.get<long long>());
    fail(errc::bad_argument, "matrix entries must be decimal strings or integers");
  };
  return {entry(j[0][0]), entry(j[0][1]), entry(j[1][0]), entry(j[1][1])};
}

Json to_json(const IntVec2& v) {
  return Json::array({to_decimal(v.x), to_decimal(v.y)});
}

IntVec2 int_vec2_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    fail(errc::bad_argument, "integer vector JSON must be [x,y]");
  return {int_from_decimal(j[0].get<std::string>()), int_from_decimal(j[1].get<std::string>())};
}

Json to_json(const TorusPoint& p) {
  return Json::array({to_fraction(p.x()), to_fraction(p.y())});
}

TorusPoint torus_point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    fail(errc::bad_argument, "torus point JSON must be [\"p/q\",\"p/q\"]");
  return TorusPoint(rat_from_fraction(j[0].get<std::string>()),
                    rat_from_fraction(j[1].get<std::string>()));
}

Json to_json(const PeriodicOrbit& orbit) {
  Json points = Json::array();
  for (const TorusPoint& p : orbit.points) points.push_back(to_json(p));
  return {{"points", points}, {"period", orbit.period}, {"orientation", orbit.orientation}};
}

PeriodicOrbit orbit_from_json(const Json& j) {
  PeriodicOrbit orbit;
  for (const Json& p : j.at("points")) orbit.points.push_back(torus_point_from_json(p));
  orbit.period = j.at("period").get<long long>();
  orbit.orientation = j.at("orientation").get<int>();
  return orbit;
}

Json to_json(const FreeHomotopyClass& c) {
  return {{"holonomy", to_json(c.holonomy)}, {"winding", c.winding}};
}

FreeHomotopyClass homotopy_class_from_json(const Json& j) {
  return {int_vec2_from_json(j.at("holonomy")), j.at("winding").get<long long>()};
}

Json to_json(const SolSymmetry& s) {
  return {{"matrix", to_json(s.B)},
          {"eps", s.eps},
          {"label", s.label},
          {"det", s.B.det() == 1 ? 1 : -1},
          {"orientation_sign", orientation_sign(s)}};
}

SolSymmetry symmetry_from_json(const Json& j, const IntMatrix2& base) {
  SolSymmetry s(int_matrix2_from_json(j.at("matrix")), base,
                j.value("label", std::string()));
  if (j.contains("eps") && j.at("eps").get<int>() != s.eps)
    fail(errc::bad_argument, "stored eps disagrees with the recomputed one");
  return s;
}

Json to_json(const AbelianGroup& g) {
  return {{"rank", g.rank}, {"torsion", g.torsion}};
}

Json to_json(const CurveClass& c) {
  return Json::array({c.l_coeff, c.m_coeff});
}

Json to_json(const GroupTable& table) {
  Json elements = Json::array();
  for (const MappingClass& mc : table.elements) {
    elements.push_back({{"label", mc.representative.label},
                        {"coset", to_json(mc.coset)},
                        {"representative", to_json(mc.representative.B)},
                        {"eps", mc.representative.eps},
                        {"orientation_sign", mc.orientation_sign},
                        {"boundary_action", Json::array({mc.boundary.sign_l, mc.boundary.sign_m})},
                        {"order", mc.order}});
  }
  Json profile = Json::object();
  for (auto [order, count] : table.order_profile) profile[std::to_string(order)] = count;
  return {{"order", table.elements.size()},
          {"elements", elements},
          {"cayley", table.cayley},
          {"order_profile", profile},
          {"abelian", table.abelian},
          {"identification", table.identification}};
}

Json to_json(const HomotopySearch& search) {
  Json steps = Json::array();
  for (const HomotopySearchStep& s : search.steps)
    steps.push_back({{"shift", s.shift},
                     {"difference", to_json(s.difference)},
                     {"solvable", s.solvable}});
  return {{"winding1", search.winding1},
          {"winding2", search.winding2},
          {"steps", steps},
          {"homotopic", search.homotopic}};
}

Json to_json(const TransversalityReport& report) {
  return {{"margin", report.margin},
          {"samples", report.samples},
          {"lipschitz_slack", report.lipschitz_slack},
          {"certified", report.certified}};
}

Json to_json(const PinchReport& report) {
  Json actions = Json::array();
  for (const FiberActionEntry& entry : report.actions)
    actions.push_back(
        {{"label", entry.label}, {"image", to_json(entry.image)}, {"action", entry.action}});
  return {{"k", report.k},
          {"fiber_class", to_json(report.fiber)},
          {"filled_h1", to_json(report.filled_h1)},
          {"fiber_class_dies", report.fiber_class_dies},
          {"actions", actions}};
}

Json to_json(const StripPoint& p) {
  return Json::array({to_fraction(p.x), to_fraction(p.y)});
}

std::string canonical_dump(const Json& j) { return j.dump(); }

std::uint64_t canonical_hash(const Json& j) {
  std::string s = canonical_dump(j);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace anosov
