#pragma once

#include <map>
#include <string>
#include <vector>

#include "anosovkit/exact.hpp"

namespace anosov {

/// Linear symmetry of the mapping torus: pair (B, eps) with B A B^-1 = A^eps.
/// eps = +1 acts fiber-preserving (t -> t), eps = -1 reverses (t -> 1-t).
struct SolSymmetry {
  IntMatrix2 B;
  int eps;  // +1 or -1
  std::string label;

  /// Verifies det B = +-1 and B A B^-1 in {A, A^-1}; determines eps.
  SolSymmetry(const IntMatrix2& B, const IntMatrix2& base, std::string label = "");

  bool operator==(const SolSymmetry& other) const {
    return B == other.B && eps == other.eps;
  }
};

SolSymmetry make_symmetry(const IntMatrix2& B, const IntMatrix2& base,
                          std::string label = "");

/// det(B) * eps: sign of the induced map on the orientation of the 3-manifold.
int orientation_sign(const SolSymmetry& s);

struct BoundaryAction {
  int sign_l;  // degree on the direction circle of the blown-up fixed point
  int sign_m;  // fiber direction
  bool operator==(const BoundaryAction&) const = default;
};

/// (det B, eps): induced signs on the peripheral curves (l, m) of the exterior.
BoundaryAction boundary_action(const SolSymmetry& s);

/// All B with max |entry| <= bound, det = +-1, normalizing <A>; sorted.
std::vector<SolSymmetry> enumerate_symmetries(const IntMatrix2& base, long long bound);

/// Is C a power of A (including negative powers and the identity)?
bool is_power_of(const IntMatrix2& base, const IntMatrix2& candidate);

/// Representative of B<A> minimizing max |entry|, ties broken lexicographically.
IntMatrix2 coset_canonical(const IntMatrix2& B, const IntMatrix2& base);

bool same_coset(const IntMatrix2& b1, const IntMatrix2& b2, const IntMatrix2& base);

/// Isotopy-class data of a symmetry modulo the deck group <A>.
struct MappingClass {
  SolSymmetry representative;
  IntMatrix2 coset;  // canonical coset representative
  int orientation_sign;
  BoundaryAction boundary;
  int order = 0;  // order in the quotient group
};

struct GroupTable {
  std::vector<MappingClass> elements;
  std::vector<std::vector<int>> cayley;  // cayley[i][j] = index of element i*j
  std::map<int, int> order_profile;      // element order -> count
  std::string identification;            // trivial | Z2 | Z2+Z2 | Z4 | D4 | other
  bool abelian = false;

  int identity_index() const;
};

/// Cosets modulo <A>, Cayley table, order profile and group identification.
/// Input must be closed under products modulo <A>.
GroupTable quotient_group(const std::vector<SolSymmetry>& symmetries,
                          const IntMatrix2& base);

GroupTable orientation_preserving_subgroup(const GroupTable& table);

/// The five standard generators g0..g4 for the cat-map mapping torus:
/// g0 = id, g1 = ((-1,0),(1,1)) reversing, g2 = -I, g3 = ((1,0),(-1,-1))
/// reversing, g4 = ((0,1),(-1,0)) reversing.
std::vector<SolSymmetry> standard_generators();

SolSymmetry standard_generator(int i);

}  // namespace anosov
