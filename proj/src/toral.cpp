#include "anosovkit/toral.hpp"

#include <algorithm>
#include <set>

namespace anosov {

namespace {

Rat mod_one(const Rat& r) { return r - Rat(rat_floor(r)); }

std::string point_str(const TorusPoint& p) {
  return "(" + to_fraction(p.x()) + "," + to_fraction(p.y()) + ")";
}

}  // namespace

TorusPoint::TorusPoint(Rat x, Rat y) : v{mod_one(x), mod_one(y)} {}

bool TorusPoint::operator<(const TorusPoint& other) const {
  if (v.x != other.v.x) return v.x < other.v.x;
  return v.y < other.v.y;
}

TorusPoint reduce_mod_lattice(const RationalVec2& v) { return TorusPoint(v.x, v.y); }

TorusPoint apply_mod_lattice(const IntMatrix2& m, const TorusPoint& p) {
  return reduce_mod_lattice(m * p.v);
}

bool same_orbit(const PeriodicOrbit& a, const PeriodicOrbit& b) {
  if (a.period != b.period || a.orientation != b.orientation) return false;
  if (a.points.size() != b.points.size()) return false;
  auto start = std::find(b.points.begin(), b.points.end(), a.points.front());
  if (start == b.points.end()) return false;
  std::size_t offset = static_cast<std::size_t>(start - b.points.begin());
  for (std::size_t i = 0; i < a.points.size(); ++i)
    if (!(a.points[i] == b.points[(offset + i) % b.points.size()])) return false;
  return true;
}

void validate_orbit(const IntMatrix2& map, const PeriodicOrbit& orbit) {
  if (orbit.points.empty() || orbit.period != static_cast<long long>(orbit.points.size()))
    fail(errc::bad_argument, "orbit period must equal the number of points");
  if (orbit.orientation != 1 && orbit.orientation != -1)
    fail(errc::bad_argument, "orbit orientation must be +-1");
  std::set<TorusPoint> distinct(orbit.points.begin(), orbit.points.end());
  if (distinct.size() != orbit.points.size())
    fail(errc::bad_argument, "orbit points must be distinct");
  for (std::size_t i = 0; i < orbit.points.size(); ++i) {
    const TorusPoint& next = orbit.points[(i + 1) % orbit.points.size()];
    if (!(apply_mod_lattice(map, orbit.points[i]) == next))
      fail(errc::bad_argument, "orbit is not a cycle of the map at position " +
                                   std::to_string(i));
  }
}

Int fixed_point_count(const IntMatrix2& map, long long n) {
  if (n < 1) fail(errc::bad_argument, "period must be positive");
  Int dt = (mat_pow(map, n) - IntMatrix2::identity()).det();
  if (dt == 0)
    fail(errc::degenerate, "map^" + std::to_string(n) + " - I is singular");
  return abs(dt);
}

std::vector<TorusPoint> periodic_points(const IntMatrix2& map, long long n) {
  if (n < 1) fail(errc::bad_argument, "period must be positive");
  IntMatrix2 m = mat_pow(map, n) - IntMatrix2::identity();
  if (m.det() == 0)
    fail(errc::degenerate, "map^" + std::to_string(n) + " - I is singular");
  SnfDecomposition snf = smith_normal_form(m);
  // solutions of m x in Z^2 modulo Z^2 are V * (i/d1, j/d2)
  Int d1 = snf.D.a, d2 = snf.D.d;
  std::vector<TorusPoint> points;
  for (Int i = 0; i < d1; ++i)
    for (Int j = 0; j < d2; ++j) {
      RationalVec2 w{Rat(i) / Rat(d1), Rat(j) / Rat(d2)};
      points.push_back(reduce_mod_lattice(snf.V * w));
    }
  std::sort(points.begin(), points.end());
  if (Int(points.size()) != abs(m.det()))
    fail(errc::check_failed, "periodic point count does not match the determinant");
  for (const TorusPoint& p : points)
    if (!(apply_mod_lattice(mat_pow(map, n), p) == p))
      fail(errc::check_failed, "periodic point candidate is not fixed by map^n");
  return points;
}

PeriodicOrbit orbit_of(const IntMatrix2& map, const TorusPoint& x) {
  // the orbit stays in the (1/q)-lattice, so it must close within q^2 steps
  Int q = lcm(denominator(x.x()), denominator(x.y()));
  Int bound = q * q;
  const Int hard_cap = 1 << 18;
  if (bound > hard_cap) bound = hard_cap;

  PeriodicOrbit orbit;
  orbit.points.push_back(x);
  TorusPoint current = x;
  for (Int step = 0; step < bound; ++step) {
    current = apply_mod_lattice(map, current);
    if (current == x) {
      orbit.period = static_cast<long long>(orbit.points.size());
      return orbit;
    }
    orbit.points.push_back(current);
  }
  fail(errc::not_periodic,
       "orbit of " + point_str(x) + " did not close within " + bound.str() + " steps");
}

FreeHomotopyClass holonomy_class(const IntMatrix2& map, const PeriodicOrbit& orbit) {
  validate_orbit(map, orbit);
  IntMatrix2 m = mat_pow(map, orbit.period) - IntMatrix2::identity();
  RationalVec2 image = m * orbit.points.front().v;
  if (denominator(image.x) != 1 || denominator(image.y) != 1)
    fail(errc::check_failed, "holonomy vector of a periodic point must be integral");
  return {{numerator(image.x), numerator(image.y)}, orbit.period * orbit.orientation};
}

HomotopySearch freely_homotopic_search(const IntMatrix2& map, const FreeHomotopyClass& c1,
                                       const FreeHomotopyClass& c2) {
  HomotopySearch search;
  search.winding1 = c1.winding;
  search.winding2 = c2.winding;
  if (c1.winding == 0 || c2.winding == 0)
    fail(errc::bad_argument, "fiber winding must be nonzero");
  if (c1.winding != c2.winding) return search;

  long long n = c1.winding < 0 ? -c1.winding : c1.winding;
  IntMatrix2 m = mat_pow(map, n) - IntMatrix2::identity();
  if (m.det() == 0) fail(errc::degenerate, "map^n - I is singular");
  SnfDecomposition snf = smith_normal_form(m);

  IntVec2 shifted = c1.holonomy;
  for (long long shift = 0; shift < n; ++shift) {
    IntVec2 diff{shifted.x - c2.holonomy.x, shifted.y - c2.holonomy.y};
    bool solvable = solve_integer(snf, diff).has_value();
    search.steps.push_back({shift, diff, solvable});
    if (solvable) search.homotopic = true;
    shifted = map * shifted;
  }
  return search;
}

bool freely_homotopic(const IntMatrix2& map, const FreeHomotopyClass& c1,
                      const FreeHomotopyClass& c2) {
  return freely_homotopic_search(map, c1, c2).homotopic;
}

PeriodicOrbit apply_symmetry(const SolSymmetry& s, const PeriodicOrbit& orbit) {
  PeriodicOrbit image;
  image.period = orbit.period;
  image.orientation = orbit.orientation * s.eps;
  image.points.reserve(orbit.points.size());
  for (const TorusPoint& p : orbit.points) image.points.push_back(apply_mod_lattice(s.B, p));
  if (s.eps == -1 && image.points.size() > 1) {
    // B turns forward orbits of A into forward orbits of A^-1; keep the first
    // point and reverse the rest so the forward-map invariant holds again
    std::reverse(image.points.begin() + 1, image.points.end());
  }
  return image;
}

long long fiber_winding(const FreeHomotopyClass& c) { return c.winding; }

}  // namespace anosov
