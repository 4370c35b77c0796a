#include "anosovkit/reports.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>

#include "anosovkit/blowup.hpp"
#include "anosovkit/orbit_space.hpp"
#include "anosovkit/toral.hpp"

namespace anosov {

namespace {

std::string fmt12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::vector<PeriodicOrbit> group_into_orbits(const IntMatrix2& map,
                                             const std::vector<TorusPoint>& points) {
  std::set<TorusPoint> remaining(points.begin(), points.end());
  std::vector<PeriodicOrbit> orbits;
  while (!remaining.empty()) {
    PeriodicOrbit orbit = orbit_of(map, *remaining.begin());
    for (const TorusPoint& p : orbit.points) remaining.erase(p);
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace

Json orbits_report(const Config& cfg, long long period) {
  cfg.require_hyperbolic();
  std::vector<TorusPoint> points = periodic_points(cfg.monodromy, period);
  std::vector<PeriodicOrbit> orbits = group_into_orbits(cfg.monodromy, points);
  Json orbit_list = Json::array();
  for (const PeriodicOrbit& orbit : orbits) {
    Json entry = to_json(orbit);
    entry["holonomy_class"] = to_json(holonomy_class(cfg.monodromy, orbit));
    orbit_list.push_back(std::move(entry));
  }
  return {{"period", period},
          {"monodromy", to_json(cfg.monodromy)},
          {"fixed_point_count", to_decimal(fixed_point_count(cfg.monodromy, period))},
          {"orbit_count", orbits.size()},
          {"orbits", orbit_list}};
}

std::string orbits_csv(const Config& cfg, long long period) {
  cfg.require_hyperbolic();
  std::vector<TorusPoint> points = periodic_points(cfg.monodromy, period);
  std::vector<PeriodicOrbit> orbits = group_into_orbits(cfg.monodromy, points);
  std::string csv = "orbit,position,period,x,y\n";
  for (std::size_t i = 0; i < orbits.size(); ++i)
    for (std::size_t j = 0; j < orbits[i].points.size(); ++j)
      csv += std::to_string(i) + "," + std::to_string(j) + "," +
             std::to_string(orbits[i].period) + "," + to_fraction(orbits[i].points[j].x()) +
             "," + to_fraction(orbits[i].points[j].y()) + "\n";
  return csv;
}

Json nielsen_report(const Config& cfg, long long period) {
  cfg.require_hyperbolic();
  std::vector<TorusPoint> points = periodic_points(cfg.monodromy, period);
  std::vector<PeriodicOrbit> orbits = group_into_orbits(cfg.monodromy, points);

  // Nielsen separation: distinct fixed points of map^period have distinct
  // holonomy cosets modulo (map^period - I) Z^2
  IntMatrix2 m = mat_pow(cfg.monodromy, period) - IntMatrix2::identity();
  std::set<std::pair<Rat, Rat>> cosets;
  SnfDecomposition snf = smith_normal_form(m);
  bool separated = true;
  auto mod_nonneg = [](const Int& a, const Int& d) { return ((a % d) + d) % d; };
  for (const TorusPoint& p : points) {
    RationalVec2 v = m * p.v;
    // w1 = w2 mod m Z^2 iff U w1 = U w2 componentwise modulo diag(D)
    IntVec2 w{numerator(v.x), numerator(v.y)};
    IntVec2 z = snf.U * w;
    Rat r1 = snf.D.a == 0 ? Rat(z.x) : Rat(mod_nonneg(z.x, snf.D.a)) / Rat(snf.D.a);
    Rat r2 = snf.D.d == 0 ? Rat(z.y) : Rat(mod_nonneg(z.y, snf.D.d)) / Rat(snf.D.d);
    if (!cosets.insert({r1, r2}).second) separated = false;
  }

  std::vector<const PeriodicOrbit*> exact;
  for (const PeriodicOrbit& orbit : orbits)
    if (orbit.period == period) exact.push_back(&orbit);

  Json classes = Json::array();
  std::vector<FreeHomotopyClass> homotopy;
  for (const PeriodicOrbit* orbit : exact) {
    FreeHomotopyClass c = holonomy_class(cfg.monodromy, *orbit);
    homotopy.push_back(c);
    classes.push_back({{"orbit", to_json(*orbit)}, {"class", to_json(c)}});
  }
  Json matrix = Json::array();
  for (std::size_t i = 0; i < homotopy.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < homotopy.size(); ++j)
      row.push_back(freely_homotopic(cfg.monodromy, homotopy[i], homotopy[j]));
    matrix.push_back(std::move(row));
  }
  return {{"period", period},
          {"monodromy", to_json(cfg.monodromy)},
          {"fixed_point_count", to_decimal(fixed_point_count(cfg.monodromy, period))},
          {"nielsen_separated", separated},
          {"classes", classes},
          {"pairwise_freely_homotopic", matrix}};
}

Json symmetries_report(const Config& cfg, long long bound) {
  std::vector<SolSymmetry> syms = enumerate_symmetries(cfg.monodromy, bound);
  Json list = Json::array();
  for (const SolSymmetry& s : syms) {
    Json entry = to_json(s);
    BoundaryAction act = boundary_action(s);
    entry["boundary_action"] = Json::array({act.sign_l, act.sign_m});
    list.push_back(std::move(entry));
  }
  Json out{{"bound", bound},
           {"monodromy", to_json(cfg.monodromy)},
           {"count", syms.size()},
           {"symmetries", list}};
  if (!syms.empty()) {
    GroupTable table = quotient_group(syms, cfg.monodromy);
    out["quotient"] = to_json(table);
    out["orientation_preserving"] = to_json(orientation_preserving_subgroup(table));
  }
  return out;
}

Json homology_report(const Config& cfg, long long k) {
  LongitudeVerdict verdict = longitude_class_in_exterior();
  return {{"k", k},
          {"h1_suspension", to_json(h1_mapping_torus(cfg.monodromy))},
          {"h1_exterior", Json{{"rank", 1}, {"torsion", Json::array()}}},
          {"longitude_class", to_decimal(verdict.h1_value)},
          {"meridian_class", to_decimal(class_in_exterior({0, 1}))},
          {"longitude_trace", verdict.trace},
          {"h1_filling", to_json(h1_filling(k))},
          {"h1_filling_name", h1_filling(k).to_string()}};
}

std::string orbit_space_demo_csv(const Config& cfg) {
  std::string csv = "label,index,x,y\n";
  auto row = [&](const std::string& label, long long index, double x, double y) {
    csv += label + "," + std::to_string(index) + "," + fmt12(x) + "," + fmt12(y) + "\n";
  };

  // leaves through the origin, sampled along their open spans
  for (int i = 0; i <= 40; ++i) {
    double s = -1.0 + 2.0 * i / 40;
    row("stable_leaf", i, 0.98 * s, 0.0);
    row("unstable_leaf", i, 0.0, 0.98 * s);
  }
  // half-step orbit of a seed point
  StripPoint seed(Rat(1, 3), Rat(0));
  for (long long j = -cfg.window; j <= cfg.window; ++j) {
    StripPoint q = eta_pow(seed, j);
    row("eta_orbit", j, q.x.convert_to<double>(), q.y.convert_to<double>());
  }
  // seeded random strip points and their images
  std::mt19937_64 rng(cfg.seed);
  auto uniform = [&rng]() { return (rng() >> 11) * 0x1.0p-53; };
  for (int i = 0; i < 64; ++i) {
    double x = 4.0 * uniform() - 2.0;
    double y = x + (2.0 * uniform() - 1.0) * 0.98;
    row("sample", i, x, y);
    row("sample_eta", i, y + 1.0, x + 1.0);
  }
  // deck-model fixed points on the diagonal
  DeckModel deck(Rat(0), Rat(1, 5));
  for (const DeckFixedPoint& p : deck_fixed_orbits(deck, cfg.window, cfg.tolerance)) {
    row(p.even ? "deck_fixed_even" : "deck_fixed_odd", p.index,
        p.point.x.convert_to<double>(), p.point.y.convert_to<double>());
  }
  return csv;
}

Json surgery_check_report(const Config& cfg, long long k) {
  BoundaryField field(cfg.field_amplitude);
  PolyCurve curve = build_transverse_curve(k, field);
  CurveClass cls = winding_class(curve);
  TransversalityReport report = verify_transverse(curve, field, cfg.samples);
  Json out{{"k", k},
           {"class", to_json(cls)},
           {"margin", report.margin},
           {"samples", report.samples},
           {"lipschitz_slack", report.lipschitz_slack},
           {"certified", report.certified},
           {"field_amplitude", field.amplitude},
           {"closed_orbits", field.closed_orbit_levels()}};
  if (k != 0) out["pinch"] = to_json(pinch_check(k));
  return out;
}

std::string surgery_curve_csv(const Config& cfg, long long k) {
  BoundaryField field(cfg.field_amplitude);
  PolyCurve curve = build_transverse_curve(k, field);
  std::string csv = "segment,theta,t\n";
  int per_segment = std::max(16, cfg.samples / 16);
  for (std::size_t i = 0; i + 1 < curve.vertices.size(); ++i) {
    double x0 = curve.vertices[i].x.convert_to<double>();
    double y0 = curve.vertices[i].y.convert_to<double>();
    double x1 = curve.vertices[i + 1].x.convert_to<double>();
    double y1 = curve.vertices[i + 1].y.convert_to<double>();
    for (int s = 0; s <= per_segment; ++s) {
      double t = static_cast<double>(s) / per_segment;
      double x = x0 + t * (x1 - x0), y = y0 + t * (y1 - y0);
      csv += std::to_string(i) + "," + fmt12(x - std::floor(x)) + "," + fmt12(y - std::floor(y)) + "\n";
    }
  }
  return csv;
}

}  // namespace anosov
