#pragma once

#include <string>
#include <vector>

#include "anosovkit/exact.hpp"
#include "anosovkit/homology.hpp"
#include "anosovkit/symmetry.hpp"

namespace anosov {

/// Direction at the blown-up fixed point: angle in [0,1) on the unit circle
/// of rays (the double cover of the projective line).
struct DirectionPoint {
  double theta = 0.0;
};

DirectionPoint normalize_direction(double theta);

/// Angle of B * (cos 2 pi theta, sin 2 pi theta); requires det B != 0.
DirectionPoint circle_map(const IntMatrix2& m, const DirectionPoint& theta);

/// Degree of the induced circle map on a uniform grid, plus monotonicity of
/// the lift. Degree is sign(det) for unimodular input.
struct CircleMapDegree {
  int degree;
  bool monotone;
};
CircleMapDegree circle_map_degree(const IntMatrix2& m, int grid);

struct FixedDirection {
  DirectionPoint direction;
  double multiplier;  // derivative of the projectivized map: other/this eigenvalue
  bool attracting() const { return std::abs(multiplier) < 1.0; }
};

/// Rays fixed by the extension of a hyperbolic map to the direction circle:
/// antipodal pairs along the eigenlines with positive eigenvalue (four rays
/// for trace > 2, det = 1). Multipliers alternate attracting/repelling.
std::vector<FixedDirection> fixed_directions(const IntMatrix2& m);

/// Vector field (drift(theta), 1) on the boundary torus (theta, t); the four
/// vertical circles at the drift zeros {0, 1/4, 1/2, 3/4} are the closed
/// orbits, alternately attracting and repelling across the bands.
struct BoundaryField {
  double amplitude = 0.15;

  explicit BoundaryField(double amplitude_ = 0.15);

  /// drift(theta) = -amplitude * sin(4 pi theta); the sign fixes the phase so
  /// that curves of positive slope wind inside the first band (0, 1/4).
  double drift(double theta) const;
  std::vector<double> closed_orbit_levels() const { return {0.0, 0.25, 0.5, 0.75}; }
};

/// Closed piecewise-linear curve on the (theta, t) torus, held as a vertex
/// chain in the universal cover whose endpoint difference is the declared
/// homology class (l winds theta, m winds t). Corners are rounded with the
/// given radius when sampled.
struct PolyCurve {
  std::vector<RationalVec2> vertices;  // size n+1, last = first + class
  long long class_l = 0;
  long long class_m = 0;
  Rat corner_radius = Rat(1, 64);
};

/// Endpoint difference of the vertex chain; must match the declared class.
CurveClass winding_class(const PolyCurve& curve);

/// Curve of class (1, k) transverse to the field: k vertical windings in a
/// band where the drift is bounded away from 0, joined by horizontal
/// traverses crossing the closed orbits.
PolyCurve build_transverse_curve(long long k, const BoundaryField& field);

struct TransversalityReport {
  double margin = 0.0;        // min |cross(unit tangent, unit field)| over samples
  long long samples = 0;      // total samples taken
  double lipschitz_slack = 0; // sampling-gap bound on how much the margin can drop
  bool certified = false;     // margin - slack > 0
};

/// Samples segments and rounded corners; samples_per_segment >= 100.
TransversalityReport verify_transverse(const PolyCurve& curve, const BoundaryField& field,
                                       int samples_per_segment);

struct FiberActionEntry {
  std::string label;
  CurveClass image;
  std::string action;  // preserved | negated | mismatch
};

struct PinchReport {
  long long k = 0;
  CurveClass fiber;
  AbelianGroup filled_h1;
  bool fiber_class_dies = false;
  std::vector<FiberActionEntry> actions;
};

/// Compatibility data for collapsing the fiber circles of slope l + km:
/// the fiber class dies in the filled homology, and each standard symmetry
/// either preserves the fibration class, negates it, or breaks it.
PinchReport pinch_check(long long k);

}  // namespace anosov
