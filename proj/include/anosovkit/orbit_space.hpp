#pragma once

#include <vector>

#include "anosovkit/exact.hpp"

namespace anosov {

/// Point of the diagonal strip O = {(x,y) : |x-y| < 1}, the orbit space of a
/// lifted skew R-covered flow: stable leaves horizontal, unstable vertical.
struct StripPoint {
  Rat x, y;

  StripPoint(Rat x_, Rat y_);
  bool operator==(const StripPoint&) const = default;
};

enum class LeafKind { stable, unstable };

/// Stable leaf at level c = {(x,c) : c-1 < x < c+1}; unstable symmetric.
struct Leaf {
  LeafKind kind;
  Rat level;

  Rat lower_end() const { return level - 1; }
  Rat upper_end() const { return level + 1; }
  bool operator==(const Leaf&) const = default;
};

Leaf leaf_through(const StripPoint& p, LeafKind kind);

/// Intersection point of a stable and an unstable leaf (must meet in the strip).
StripPoint intersect(const Leaf& stable, const Leaf& unstable);

/// Half-step-up map. Computed twice: from the geometric definition (upper
/// boundary leaves of the two leaf families through p) and from the closed
/// form (y+1, x+1); the two must agree.
StripPoint eta(const StripPoint& p);

StripPoint eta_inverse(const StripPoint& p);
StripPoint eta_pow(const StripPoint& p, long long j);

/// eta swaps the two leaf families and raises the level by one.
Leaf leaf_image_under_eta(const Leaf& leaf);

/// 1-d model deck transformation f(x) = x + c sin^2(pi (x - axis)):
/// an increasing homeomorphism commuting with x -> x+1, Fix(f) = axis + Z.
struct DeckModel {
  Rat axis;
  Rat amplitude;  // 0 < amplitude, amplitude * pi < 1

  DeckModel(Rat axis_, Rat amplitude_);

  double f(double x) const;
  /// diagonal action g(x,y) = (f(x), f(y)) on the strip
  double gx(double x) const { return f(x); }
};

struct DeckFixedPoint {
  StripPoint point;
  long long index;  // the point equals eta^index(axis, axis)
  bool even;        // even index: freely homotopic to the base orbit;
                    // odd: to its inverse
};

/// Fixed points of the diagonal deck action inside the strip, |index| <= window.
/// Detection is numeric with the given tolerance; the grid scan rejects
/// spurious fixed points between lattice translates.
std::vector<DeckFixedPoint> deck_fixed_orbits(const DeckModel& d, long long window,
                                              double tolerance = 1e-9,
                                              int grid_per_unit = 2000);

/// min of f(x2)-f(x1) over consecutive grid points; positive means increasing.
double deck_monotonicity_margin(const DeckModel& d, int grid_points);

}  // namespace anosov
