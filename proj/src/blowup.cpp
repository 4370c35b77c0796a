#include "anosovkit/blowup.hpp"

#include <algorithm>
#include <cmath>

namespace anosov {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

struct Vec2d {
  double x, y;
};

Vec2d operator+(Vec2d a, Vec2d b) { return {a.x + b.x, a.y + b.y}; }
Vec2d operator-(Vec2d a, Vec2d b) { return {a.x - b.x, a.y - b.y}; }
Vec2d operator*(double s, Vec2d a) { return {s * a.x, s * a.y}; }
double cross2(Vec2d a, Vec2d b) { return a.x * b.y - a.y * b.x; }
double dot2(Vec2d a, Vec2d b) { return a.x * b.x + a.y * b.y; }
double norm2(Vec2d a) { return std::sqrt(dot2(a, a)); }
Vec2d unit(Vec2d a) { return (1.0 / norm2(a)) * a; }
Vec2d rot90(Vec2d a) { return {-a.y, a.x}; }

Vec2d to_double(const RationalVec2& v) {
  return {v.x.convert_to<double>(), v.y.convert_to<double>()};
}

}  // namespace

DirectionPoint normalize_direction(double theta) {
  double t = theta - std::floor(theta);
  if (t >= 1.0) t = 0.0;
  return {t};
}

DirectionPoint circle_map(const IntMatrix2& m, const DirectionPoint& theta) {
  if (m.det() == 0) fail(errc::bad_argument, "circle map requires an invertible matrix");
  double a = m.a.convert_to<double>(), b = m.b.convert_to<double>();
  double c = m.c.convert_to<double>(), d = m.d.convert_to<double>();
  double x = std::cos(2 * kPi * theta.theta), y = std::sin(2 * kPi * theta.theta);
  double xi = a * x + b * y, yi = c * x + d * y;
  return normalize_direction(std::atan2(yi, xi) / (2 * kPi));
}

CircleMapDegree circle_map_degree(const IntMatrix2& m, int grid) {
  if (grid < 8) fail(errc::bad_argument, "grid too coarse for a degree computation");
  double winding = 0.0;
  bool monotone = true;
  double prev = circle_map(m, {0.0}).theta;
  int direction = 0;
  for (int i = 1; i <= grid; ++i) {
    double image = circle_map(m, {static_cast<double>(i) / grid}).theta;
    double step = image - prev;
    // wrap the increment to (-1/2, 1/2]
    step -= std::round(step);
    if (step > 1e-12) {
      if (direction < 0) monotone = false;
      direction = 1;
    } else if (step < -1e-12) {
      if (direction > 0) monotone = false;
      direction = -1;
    }
    winding += step;
    prev = image;
  }
  return {static_cast<int>(std::lround(winding)), monotone};
}

std::vector<FixedDirection> fixed_directions(const IntMatrix2& m) {
  Int tr = m.trace();
  if (tr <= 2 && tr >= -2)
    fail(errc::not_hyperbolic, "|trace| <= 2: no hyperbolic splitting");
  double trace = tr.convert_to<double>();
  double det = m.det().convert_to<double>();
  double disc = trace * trace - 4 * det;
  if (disc <= 0) fail(errc::not_hyperbolic, "eigenvalues are not real");

  double sq = std::sqrt(disc);
  double lambda[2] = {(trace + sq) / 2, (trace - sq) / 2};
  double a = m.a.convert_to<double>(), b = m.b.convert_to<double>();
  double c = m.c.convert_to<double>(), d = m.d.convert_to<double>();

  std::vector<FixedDirection> rays;
  for (int i = 0; i < 2; ++i) {
    double l = lambda[i], other = lambda[1 - i];
    if (l <= 0) continue;  // negative eigenvalue swaps the antipodes, no fixed ray
    // kernel of (m - l I)
    Vec2d v = std::fabs(b) + std::fabs(l - a) > 1e-12 ? Vec2d{b, l - a} : Vec2d{l - d, c};
    double theta = std::atan2(v.y, v.x) / (2 * kPi);
    double multiplier = other / l;
    rays.push_back({normalize_direction(theta), multiplier});
    rays.push_back({normalize_direction(theta + 0.5), multiplier});
  }
  std::sort(rays.begin(), rays.end(), [](const FixedDirection& p, const FixedDirection& q) {
    return p.direction.theta < q.direction.theta;
  });
  return rays;
}

BoundaryField::BoundaryField(double amplitude_) : amplitude(amplitude_) {
  if (!(amplitude > 0))
    fail(errc::bad_argument, "boundary field amplitude must be positive");
}

double BoundaryField::drift(double theta) const {
  return -amplitude * std::sin(4 * kPi * theta);
}

CurveClass winding_class(const PolyCurve& curve) {
  if (curve.vertices.size() < 2) fail(errc::bad_argument, "curve needs at least two vertices");
  RationalVec2 diff = curve.vertices.back() - curve.vertices.front();
  if (denominator(diff.x) != 1 || denominator(diff.y) != 1)
    fail(errc::bad_argument, "curve endpoint difference is not integral");
  CurveClass cls{numerator(diff.x).convert_to<long long>(),
                 numerator(diff.y).convert_to<long long>()};
  if (cls.l_coeff != curve.class_l || cls.m_coeff != curve.class_m)
    fail(errc::check_failed, "winding count disagrees with the declared class");
  return cls;
}

PolyCurve build_transverse_curve(long long k, const BoundaryField& field) {
  PolyCurve curve;
  curve.class_l = 1;
  curve.class_m = k;
  if (k == 0) {
    curve.vertices = {{Rat(0), Rat(1, 2)}, {Rat(1), Rat(1, 2)}};
    return curve;
  }
  // wind where the drift sign matches the winding direction: upward windings
  // need drift < 0 at the band center, downward ones drift > 0, otherwise the
  // corner fillets sweep through the field direction
  Rat band(0);
  for (int eighth : {1, 3, 5, 7}) {
    double g = field.drift(eighth / 8.0);
    if ((k > 0 && g < 0) || (k < 0 && g > 0)) {
      band = Rat(eighth, 8);
      break;
    }
  }
  if (band == 0) fail(errc::check_failed, "no winding band with the required drift sign");
  curve.vertices = {{Rat(0), Rat(0)}, {band, Rat(0)}, {band, Rat(k)}, {Rat(1), Rat(k)}};
  winding_class(curve);
  return curve;
}

TransversalityReport verify_transverse(const PolyCurve& curve, const BoundaryField& field,
                                       int samples_per_segment) {
  if (samples_per_segment < 100)
    fail(errc::bad_argument, "need at least 100 samples per segment");
  const std::size_t n = curve.vertices.size() - 1;
  if (n < 1) fail(errc::bad_argument, "curve needs at least one segment");

  std::vector<Vec2d> verts;
  verts.reserve(curve.vertices.size());
  for (const RationalVec2& v : curve.vertices) verts.push_back(to_double(v));

  std::vector<Vec2d> dirs(n);
  std::vector<double> lengths(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec2d d = verts[i + 1] - verts[i];
    lengths[i] = norm2(d);
    if (lengths[i] < 1e-12)
      fail(errc::degenerate_segment, "segment " + std::to_string(i) + " has zero length");
    dirs[i] = unit(d);
  }

  const double rho = curve.corner_radius.convert_to<double>();
  auto field_unit = [&](double theta) {
    double g = field.drift(theta - std::floor(theta));
    double inv = 1.0 / std::sqrt(1.0 + g * g);
    return Vec2d{g * inv, inv};
  };

  double margin = 1e300;
  long long samples = 0;
  double max_gap_straight = 0.0, max_gap_arc = 0.0;
  auto take = [&](Vec2d pos, Vec2d tangent) {
    margin = std::min(margin, std::fabs(cross2(tangent, field_unit(pos.x))));
    ++samples;
  };

  // corner j sits at vertex j between segment j-1 (mod n) and segment j
  std::vector<double> trim_start(n, 0.0), trim_end(n, 0.0);
  struct Corner {
    std::size_t vertex;
    std::size_t in_seg, out_seg;
  };
  std::vector<Corner> corners;
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t in_seg = (j + n - 1) % n;
    Vec2d u = dirs[in_seg], w = dirs[j];
    if (std::fabs(cross2(u, w)) < 1e-12 && dot2(u, w) > 0) continue;  // straight junction
    if (dot2(u, w) <= -1.0 + 1e-12)
      fail(errc::degenerate_segment, "curve reverses direction at vertex " + std::to_string(j));
    double offset = rho * std::tan(std::acos(std::clamp(dot2(u, w), -1.0, 1.0)) / 2);
    trim_end[in_seg] = offset;
    trim_start[j] = offset;
    corners.push_back({j, in_seg, j});
  }

  for (std::size_t i = 0; i < n; ++i) {
    double lo = trim_start[i], hi = lengths[i] - trim_end[i];
    if (hi <= lo)
      fail(errc::degenerate_segment,
           "segment " + std::to_string(i) + " is shorter than its corner fillets");
    double span = hi - lo;
    max_gap_straight = std::max(max_gap_straight, span / samples_per_segment);
    for (int s = 0; s <= samples_per_segment; ++s) {
      double t = lo + span * s / samples_per_segment;
      take(verts[i] + t * dirs[i], dirs[i]);
    }
  }

  int corner_samples = std::max(100, samples_per_segment / 4);
  for (const Corner& corner : corners) {
    Vec2d u = dirs[corner.in_seg], w = dirs[corner.out_seg];
    double alpha = std::acos(std::clamp(dot2(u, w), -1.0, 1.0));
    double offset = rho * std::tan(alpha / 2);
    double turn = cross2(u, w) > 0 ? 1.0 : -1.0;
    Vec2d p = verts[corner.vertex];
    Vec2d t1 = p - offset * u;
    Vec2d center = t1 + turn * rho * rot90(u);
    Vec2d r1 = t1 - center;
    double phi1 = std::atan2(r1.y, r1.x);
    max_gap_arc = std::max(max_gap_arc, rho * alpha / corner_samples);
    for (int s = 0; s <= corner_samples; ++s) {
      double phi = phi1 + turn * alpha * s / corner_samples;
      Vec2d radial{std::cos(phi), std::sin(phi)};
      Vec2d pos = center + rho * radial;
      Vec2d tangent = turn > 0 ? rot90(radial) : (-1.0) * rot90(radial);
      take(pos, tangent);
    }
  }

  // field direction rotates at most 4 pi amplitude per unit of arclength;
  // the tangent rotates at 1/rho on the fillets
  double field_rate = 4 * kPi * field.amplitude;
  double slack = std::max(max_gap_straight / 2 * field_rate,
                          max_gap_arc / 2 * (field_rate + 1.0 / rho));

  TransversalityReport report;
  report.margin = margin;
  report.samples = samples;
  report.lipschitz_slack = slack;
  report.certified = margin - slack > 0;
  return report;
}

PinchReport pinch_check(long long k) {
  if (k == 0) fail(errc::zero_slope, "pinching requires a nonzero filling slope");
  PinchReport report;
  report.k = k;
  report.fiber = {1, k};
  report.filled_h1 = h1_filling(k);
  // the fiber class evaluates to k in H1(exterior) = Z<m>, which is 0 mod k
  Int value = class_in_exterior(report.fiber);
  long long modulus = k < 0 ? -k : k;
  report.fiber_class_dies = (value % modulus) == 0;

  for (const SolSymmetry& s : standard_generators()) {
    CurveClass image = slope_image(s, k);
    std::string action = "mismatch";
    if (image == report.fiber)
      action = "preserved";
    else if (image == CurveClass{-1, -k})
      action = "negated";
    report.actions.push_back({s.label, image, action});
  }
  return report;
}

}  // namespace anosov
