#pragma once

#include <string>
#include <vector>

#include "anosovkit/exact.hpp"
#include "anosovkit/symmetry.hpp"

namespace anosov {

/// a*l + b*m on the boundary torus of the knot exterior.
struct CurveClass {
  long long l_coeff = 0;
  long long m_coeff = 0;
  bool operator==(const CurveClass&) const = default;
};

/// Finitely generated abelian group in canonical form: Z^rank + sum Z/d_i
/// with d_i >= 2 and d_1 | d_2 | ...
struct AbelianGroup {
  int rank = 0;
  std::vector<long long> torsion;

  bool operator==(const AbelianGroup&) const = default;
  bool finite() const { return rank == 0; }
  /// Order of the torsion part (group order when finite).
  Int order() const;
  std::string to_string() const;
};

/// Canonical form of Z^2 / m Z^2.
AbelianGroup cokernel(const IntMatrix2& m);

/// H1 of the mapping torus of the given torus automorphism:
/// coker(monodromy - I) plus the free class of a section loop.
AbelianGroup h1_mapping_torus(const IntMatrix2& monodromy);

/// Value of a peripheral class in H1(exterior) = Z<m>; l is null-homologous.
Int class_in_exterior(const CurveClass& c);

struct LongitudeVerdict {
  CurveClass longitude;
  Int h1_value;
  std::vector<std::string> trace;
};

/// Certifies [l] = 0 in H1 of the fibered exterior, with the reason chain.
LongitudeVerdict longitude_class_in_exterior();

/// H1 of the k-filling: quotient of H1(exterior) by the slope l + km.
AbelianGroup h1_filling(long long k);

/// Image of the slope l + km under the boundary action of the symmetry:
/// (det B) l + (eps k) m.
CurveClass slope_image(const SolSymmetry& s, long long k);

/// A symmetry extends over the filling solid torus iff it sends the filling
/// slope to +-(l + km), which for k != 0 happens iff det B = eps.
bool extends_to_filling(const SolSymmetry& s, long long k);

}  // namespace anosov
