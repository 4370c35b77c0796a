#include "anosovkit/orbit_space.hpp"

#include <cmath>

namespace anosov {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

Rat abs_rat(const Rat& r) { return r < 0 ? Rat(-r) : r; }

}  // namespace

StripPoint::StripPoint(Rat x_, Rat y_) : x(std::move(x_)), y(std::move(y_)) {
  if (abs_rat(x - y) >= 1)
    fail(errc::bad_argument,
         "point (" + to_fraction(x) + "," + to_fraction(y) + ") is outside the strip |x-y| < 1");
}

Leaf leaf_through(const StripPoint& p, LeafKind kind) {
  return {kind, kind == LeafKind::stable ? p.y : p.x};
}

StripPoint intersect(const Leaf& stable, const Leaf& unstable) {
  if (stable.kind != LeafKind::stable || unstable.kind != LeafKind::unstable)
    fail(errc::bad_argument, "intersect expects a stable and an unstable leaf");
  if (abs_rat(stable.level - unstable.level) >= 1)
    fail(errc::bad_argument, "the two leaves do not meet inside the strip");
  return StripPoint(unstable.level, stable.level);
}

StripPoint eta(const StripPoint& p) {
  // The unstable leaves crossing the stable leaf of p have levels in
  // (y-1, y+1); the upper boundary of that family is the unstable leaf at
  // level y+1. Symmetrically the stable family through the unstable leaf of p
  // is bounded above by the stable leaf at level x+1.
  Leaf stable_of_p = leaf_through(p, LeafKind::stable);
  Leaf unstable_of_p = leaf_through(p, LeafKind::unstable);
  Leaf upper_unstable{LeafKind::unstable, stable_of_p.upper_end()};
  Leaf upper_stable{LeafKind::stable, unstable_of_p.upper_end()};
  StripPoint geometric = intersect(upper_stable, upper_unstable);

  StripPoint closed_form(p.y + 1, p.x + 1);
  if (!(geometric == closed_form))
    fail(errc::check_failed, "half-step map: geometric construction disagrees with (y+1, x+1)");
  return closed_form;
}

StripPoint eta_inverse(const StripPoint& p) { return StripPoint(p.y - 1, p.x - 1); }

StripPoint eta_pow(const StripPoint& p, long long j) {
  StripPoint q = p;
  for (long long i = 0; i < (j < 0 ? -j : j); ++i) q = j > 0 ? eta(q) : eta_inverse(q);
  return q;
}

Leaf leaf_image_under_eta(const Leaf& leaf) {
  return {leaf.kind == LeafKind::stable ? LeafKind::unstable : LeafKind::stable,
          leaf.level + 1};
}

DeckModel::DeckModel(Rat axis_, Rat amplitude_)
    : axis(std::move(axis_)), amplitude(std::move(amplitude_)) {
  if (amplitude <= 0) fail(errc::bad_argument, "deck model amplitude must be positive");
  double c = amplitude.convert_to<double>();
  if (c * kPi >= 1.0)
    fail(errc::bad_argument, "deck model amplitude must satisfy c * pi < 1");
}

double DeckModel::f(double x) const {
  double s = std::sin(kPi * (x - axis.convert_to<double>()));
  return x + amplitude.convert_to<double>() * s * s;
}

std::vector<DeckFixedPoint> deck_fixed_orbits(const DeckModel& d, long long window,
                                              double tolerance, int grid_per_unit) {
  if (window < 0) fail(errc::bad_argument, "window must be nonnegative");

  std::vector<DeckFixedPoint> fixed;
  for (long long j = -window; j <= window; ++j) {
    Rat coordinate = d.axis + Rat(j);
    double x = coordinate.convert_to<double>();
    if (std::fabs(d.f(x) - x) > tolerance)
      fail(errc::check_failed, "lattice translate of the axis is not fixed within tolerance");
    StripPoint p(coordinate, coordinate);
    // the diagonal fixed point with index j is exactly eta^j of the axis point
    if (!(eta_pow(StripPoint(d.axis, d.axis), j) == p))
      fail(errc::check_failed, "deck fixed point does not match the eta orbit");
    fixed.push_back({p, j, (j % 2) == 0});
  }

  // no other fixed points: away from the lattice translates f(x) - x stays
  // above tolerance on the scan grid
  double x0 = d.axis.convert_to<double>();
  double lo = x0 - static_cast<double>(window) - 0.5;
  long long total = (2 * window + 1) * grid_per_unit;
  for (long long i = 0; i <= total; ++i) {
    double x = lo + static_cast<double>(i) / grid_per_unit;
    double nearest = std::round(x - x0);
    if (std::fabs(x - x0 - nearest) < 1e-3) continue;
    if (d.f(x) - x <= tolerance)
      fail(errc::check_failed, "deck model has a spurious fixed point near x = " +
                                   std::to_string(x));
  }
  return fixed;
}

double deck_monotonicity_margin(const DeckModel& d, int grid_points) {
  if (grid_points < 2) fail(errc::bad_argument, "need at least two grid points");
  double margin = 1e300;
  double prev = d.f(d.axis.convert_to<double>() - 1.0);
  for (int i = 1; i <= grid_points; ++i) {
    double x = d.axis.convert_to<double>() - 1.0 + 2.0 * i / grid_points;
    double fx = d.f(x);
    margin = std::min(margin, fx - prev);
    prev = fx;
  }
  return margin;
}

}  // namespace anosov
