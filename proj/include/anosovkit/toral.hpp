#pragma once

#include <vector>

#include "anosovkit/exact.hpp"
#include "anosovkit/symmetry.hpp"

namespace anosov {

/// Rational point of the 2-torus, reduced to the fundamental domain [0,1)^2.
struct TorusPoint {
  RationalVec2 v;

  TorusPoint() = default;
  TorusPoint(Rat x, Rat y);

  const Rat& x() const { return v.x; }
  const Rat& y() const { return v.y; }
  bool operator==(const TorusPoint&) const = default;
  bool operator<(const TorusPoint& other) const;
};

TorusPoint reduce_mod_lattice(const RationalVec2& v);
TorusPoint apply_mod_lattice(const IntMatrix2& m, const TorusPoint& p);

/// Finite orbit of a torus point: the map sends points[i] to points[i+1 mod n].
/// orientation = -1 marks the flow-reversed traversal of the same point set.
struct PeriodicOrbit {
  std::vector<TorusPoint> points;
  long long period = 0;
  int orientation = +1;

  bool operator==(const PeriodicOrbit&) const = default;
};

/// Same cyclic orbit regardless of starting point.
bool same_orbit(const PeriodicOrbit& a, const PeriodicOrbit& b);

/// Checks the orbit invariants against the given map.
void validate_orbit(const IntMatrix2& map, const PeriodicOrbit& orbit);

/// Conjugacy-class normal form in Z^2 x| Z: holonomy vector and fiber winding.
/// The pair (v, n) is one choice of invariant; any conjugacy invariant that
/// agrees with it on all orbits of period <= 4 separates the same classes
/// (each fixed point of map^n is its own Nielsen class, see the tests).
struct FreeHomotopyClass {
  IntVec2 holonomy;
  long long winding = 0;  // period * orientation, never 0

  bool operator==(const FreeHomotopyClass&) const = default;
};

/// |det(map^n - I)| = number of fixed points of map^n on the torus.
Int fixed_point_count(const IntMatrix2& map, long long n);

/// All solutions of map^n x = x on the torus, sorted; size = fixed_point_count.
std::vector<TorusPoint> periodic_points(const IntMatrix2& map, long long n);

/// Full cyclic orbit through x with least period, starting at x.
PeriodicOrbit orbit_of(const IntMatrix2& map, const TorusPoint& x);

/// v = (map^n - I) * lift of the first point, winding = period * orientation.
FreeHomotopyClass holonomy_class(const IntMatrix2& map, const PeriodicOrbit& orbit);

struct HomotopySearchStep {
  long long shift;      // the power m of the map applied to v1
  IntVec2 difference;   // map^m v1 - v2
  bool solvable;        // difference in (map^n - I) Z^2
};

struct HomotopySearch {
  long long winding1 = 0, winding2 = 0;
  std::vector<HomotopySearchStep> steps;
  bool homotopic = false;
};

/// Conjugacy test: equal windings n and some m in [0,|n|) with
/// map^m v1 = v2 modulo (map^|n| - I) Z^2. The range [0,|n|) suffices because
/// map^n acts trivially on Z^2 / (map^n - I) Z^2.
HomotopySearch freely_homotopic_search(const IntMatrix2& map, const FreeHomotopyClass& c1,
                                       const FreeHomotopyClass& c2);

bool freely_homotopic(const IntMatrix2& map, const FreeHomotopyClass& c1,
                      const FreeHomotopyClass& c2);

/// Pointwise image of the orbit under the symmetry; eps = -1 reverses the
/// traversal (the point sequence is reordered so that the orbit invariant
/// holds for the forward map) and flips the orientation flag.
PeriodicOrbit apply_symmetry(const SolSymmetry& s, const PeriodicOrbit& orbit);

/// Signed algebraic intersection with a fiber torus.
long long fiber_winding(const FreeHomotopyClass& c);

}  // namespace anosov
