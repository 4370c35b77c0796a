#include "anosovkit/homology.hpp"

namespace anosov {

Int AbelianGroup::order() const {
  Int n = 1;
  for (long long d : torsion) n *= d;
  return n;
}

std::string AbelianGroup::to_string() const {
  std::string s;
  auto append = [&](const std::string& part) {
    if (!s.empty()) s += " + ";
    s += part;
  };
  if (rank == 1) append("Z");
  if (rank > 1) append("Z^" + std::to_string(rank));
  for (long long d : torsion) append("Z/" + std::to_string(d));
  return s.empty() ? "trivial" : s;
}

AbelianGroup cokernel(const IntMatrix2& m) {
  SnfDecomposition snf = smith_normal_form(m);
  AbelianGroup g;
  for (const Int& d : {snf.D.a, snf.D.d}) {
    if (d == 0) {
      g.rank += 1;
    } else if (d >= 2) {
      g.torsion.push_back(d.convert_to<long long>());
    }
  }
  return g;
}

AbelianGroup h1_mapping_torus(const IntMatrix2& monodromy) {
  AbelianGroup g = cokernel(monodromy - IntMatrix2::identity());
  g.rank += 1;  // the section loop crossing every fiber once
  return g;
}

Int class_in_exterior(const CurveClass& c) { return Int(c.m_coeff); }

LongitudeVerdict longitude_class_in_exterior() {
  LongitudeVerdict v;
  v.longitude = {1, 0};
  v.h1_value = class_in_exterior(v.longitude);

  IntMatrix2 fiber_action = cat_map() - IntMatrix2::identity();
  SnfDecomposition snf = smith_normal_form(fiber_action);
  v.trace.push_back(
      "l bounds in the fiber: it is the boundary of the once-punctured torus "
      "fiber, a commutator, hence 0 in H1(fiber) = Z^2");
  v.trace.push_back("coker(monodromy - I) vanishes: Smith form of ((1,1),(1,0)) is diag(" +
                    to_decimal(snf.D.a) + "," + to_decimal(snf.D.d) + ")");
  v.trace.push_back(
      "H1(exterior) = Z, generated by m, which crosses every fiber once; "
      "a*l + b*m maps to b");
  if (v.h1_value != 0) fail(errc::check_failed, "longitude class did not vanish");
  return v;
}

AbelianGroup h1_filling(long long k) {
  // presentation of Z<m> by the single relation k*m = 0
  if (k == 0) return {1, {}};
  long long d = k < 0 ? -k : k;
  if (d == 1) return {0, {}};
  return {0, {d}};
}

CurveClass slope_image(const SolSymmetry& s, long long k) {
  BoundaryAction act = boundary_action(s);
  return {act.sign_l, act.sign_m * k};
}

bool extends_to_filling(const SolSymmetry& s, long long k) {
  if (k == 0) fail(errc::zero_slope, "filling slope requires k != 0");
  CurveClass image = slope_image(s, k);
  CurveClass slope{1, k};
  CurveClass neg{-1, -k};
  return image == slope || image == neg;
}

}  // namespace anosov
