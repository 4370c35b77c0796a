#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "anosovkit/toral.hpp"

using namespace anosov;

namespace {

// independent oracle: scan the (1/q)-lattice and count solutions of
// map^n x = x directly, with machine integers
long long brute_force_fixed_count(const IntMatrix2& map, long long n, long long q,
                                  std::vector<TorusPoint>* found = nullptr) {
  IntMatrix2 p = mat_pow(map, n);
  long long a = p.a.convert_to<long long>(), b = p.b.convert_to<long long>();
  long long c = p.c.convert_to<long long>(), d = p.d.convert_to<long long>();
  long long count = 0;
  for (long long i = 0; i < q; ++i)
    for (long long j = 0; j < q; ++j) {
      long long x = a * i + b * j - i;
      long long y = c * i + d * j - j;
      if (x % q == 0 && y % q == 0) {
        ++count;
        if (found) found->push_back(TorusPoint(Rat(i) / Rat(q), Rat(j) / Rat(q)));
      }
    }
  return count;
}

FreeHomotopyClass class_of_point(const IntMatrix2& map, Rat x, Rat y) {
  return holonomy_class(map, orbit_of(map, TorusPoint(std::move(x), std::move(y))));
}

}  // namespace

TEST_CASE("fixed point counts match the determinant and the lattice scan") {
  IntMatrix2 a = cat_map();
  long long expected[] = {0, 1, 5, 16, 45, 121};
  for (long long n = 1; n <= 5; ++n) {
    Int count = fixed_point_count(a, n);
    CHECK(count == expected[n]);
    CHECK(brute_force_fixed_count(a, n, expected[n]) == expected[n]);
  }
  CHECK_THROWS_AS(fixed_point_count(IntMatrix2::identity(), 2), Error);
}

TEST_CASE("fixed point counts follow the Lucas numbers") {
  // |det(A^n - I)| = L(2n) - 2 where L is the Lucas sequence
  IntMatrix2 a = cat_map();
  std::vector<long long> lucas{2, 1};
  for (int i = 2; i <= 20; ++i) lucas.push_back(lucas[i - 1] + lucas[i - 2]);
  for (long long n = 1; n <= 10; ++n)
    CHECK(fixed_point_count(a, n) == lucas[2 * n] - 2);
}

TEST_CASE("periodic points: worked examples") {
  IntMatrix2 a = cat_map();
  std::vector<TorusPoint> fixed = periodic_points(a, 1);
  REQUIRE(fixed.size() == 1);
  CHECK(fixed[0] == TorusPoint(Rat(0), Rat(0)));

  std::vector<TorusPoint> p2 = periodic_points(a, 2);
  CHECK(p2.size() == 5);
  CHECK(std::count(p2.begin(), p2.end(), TorusPoint(Rat(0), Rat(0))) == 1);

  std::vector<TorusPoint> p3 = periodic_points(a, 3);
  CHECK(p3.size() == 16);
  CHECK(std::count(p3.begin(), p3.end(), TorusPoint(Rat(1, 4), Rat(0))) == 1);
}

TEST_CASE("periodic points agree with the lattice scan for small periods") {
  IntMatrix2 a = cat_map();
  for (long long n = 1; n <= 5; ++n) {
    Int q_big = fixed_point_count(a, n);
    long long q = q_big.convert_to<long long>();
    std::vector<TorusPoint> scanned;
    brute_force_fixed_count(a, n, q, &scanned);
    std::vector<TorusPoint> computed = periodic_points(a, n);
    std::sort(scanned.begin(), scanned.end());
    CHECK(computed == scanned);
    // every point genuinely satisfies map^n x = x
    IntMatrix2 p = mat_pow(a, n);
    for (const TorusPoint& x : computed) CHECK(apply_mod_lattice(p, x) == x);
  }
}

TEST_CASE("orbit through a seed point, in seed-first order") {
  IntMatrix2 a = cat_map();
  PeriodicOrbit omega = orbit_of(a, TorusPoint(Rat(0), Rat(0)));
  CHECK(omega.period == 1);
  CHECK(omega.points == std::vector<TorusPoint>{TorusPoint(Rat(0), Rat(0))});

  PeriodicOrbit beta1 = orbit_of(a, TorusPoint(Rat(1, 4), Rat(0)));
  CHECK(beta1.period == 3);
  CHECK(beta1.points == std::vector<TorusPoint>{TorusPoint(Rat(1, 4), Rat(0)),
                                                TorusPoint(Rat(1, 2), Rat(1, 4)),
                                                TorusPoint(Rat(1, 4), Rat(3, 4))});

  PeriodicOrbit beta2 = orbit_of(a, TorusPoint(Rat(3, 4), Rat(0)));
  CHECK(beta2.period == 3);
  CHECK(beta2.points == std::vector<TorusPoint>{TorusPoint(Rat(3, 4), Rat(0)),
                                                TorusPoint(Rat(1, 2), Rat(3, 4)),
                                                TorusPoint(Rat(3, 4), Rat(1, 4))});
  validate_orbit(a, beta1);
  validate_orbit(a, beta2);
}

TEST_CASE("preperiodic points of a non-invertible map are rejected") {
  IntMatrix2 doubling{2, 0, 0, 2};
  CHECK_THROWS_AS(orbit_of(doubling, TorusPoint(Rat(1, 2), Rat(0))), Error);
  // while genuinely periodic points still work
  CHECK(orbit_of(doubling, TorusPoint(Rat(1, 3), Rat(0))).period == 2);
}

TEST_CASE("holonomy classes of the named orbits") {
  IntMatrix2 a = cat_map();
  FreeHomotopyClass omega = class_of_point(a, Rat(0), Rat(0));
  CHECK(omega.holonomy == IntVec2{0, 0});
  CHECK(omega.winding == 1);

  FreeHomotopyClass beta1 = class_of_point(a, Rat(1, 4), Rat(0));
  CHECK(beta1.holonomy == IntVec2{3, 2});
  CHECK(beta1.winding == 3);

  FreeHomotopyClass beta2 = class_of_point(a, Rat(3, 4), Rat(0));
  CHECK(beta2.holonomy == IntVec2{9, 6});
  CHECK(beta2.winding == 3);
}

TEST_CASE("the two period-3 orbits moved by the central symmetry are not freely homotopic") {
  IntMatrix2 a = cat_map();
  FreeHomotopyClass beta1 = class_of_point(a, Rat(1, 4), Rat(0));
  FreeHomotopyClass beta2 = class_of_point(a, Rat(3, 4), Rat(0));

  HomotopySearch search = freely_homotopic_search(a, beta1, beta2);
  CHECK_FALSE(search.homotopic);
  REQUIRE(search.steps.size() == 3);
  for (const HomotopySearchStep& step : search.steps) CHECK_FALSE(step.solvable);

  CHECK(freely_homotopic(a, beta1, beta1));
  CHECK(freely_homotopic(a, beta2, beta2));
}

TEST_CASE("holonomy does not depend on the starting point of the orbit") {
  IntMatrix2 a = cat_map();
  FreeHomotopyClass from_seed = class_of_point(a, Rat(1, 4), Rat(0));
  FreeHomotopyClass from_next = class_of_point(a, Rat(1, 2), Rat(1, 4));
  CHECK(from_next.holonomy == a * from_seed.holonomy);
  CHECK(freely_homotopic(a, from_seed, from_next));
}

TEST_CASE("free homotopy is an equivalence relation on the period-3 classes") {
  IntMatrix2 a = cat_map();
  std::vector<FreeHomotopyClass> classes;
  for (const TorusPoint& p : periodic_points(a, 3)) {
    PeriodicOrbit orbit = orbit_of(a, p);
    if (orbit.period == 3) classes.push_back(holonomy_class(a, orbit));
  }
  REQUIRE(classes.size() == 15);
  const std::size_t n = classes.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = freely_homotopic(a, classes[i], classes[j]);
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(rel[i][i]);
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(rel[i][j] == rel[j][i]);
      for (std::size_t k = 0; k < n; ++k)
        if (rel[i][j] && rel[j][k]) CHECK(rel[i][k]);
    }
  }
  // the 15 points fall into 5 orbits, hence 5 classes of size 3
  for (std::size_t i = 0; i < n; ++i)
    CHECK(std::count(rel[i].begin(), rel[i].end(), true) == 3);
}

TEST_CASE("distinct fixed points have distinct holonomy cosets (Nielsen separation)") {
  IntMatrix2 a = cat_map();
  for (long long n = 1; n <= 4; ++n) {
    IntMatrix2 m = mat_pow(a, n) - IntMatrix2::identity();
    SnfDecomposition snf = smith_normal_form(m);
    std::vector<TorusPoint> points = periodic_points(a, n);
    for (std::size_t i = 0; i < points.size(); ++i)
      for (std::size_t j = i + 1; j < points.size(); ++j) {
        RationalVec2 vi = m * points[i].v, vj = m * points[j].v;
        IntVec2 diff{numerator(vi.x) - numerator(vj.x), numerator(vi.y) - numerator(vj.y)};
        CHECK_FALSE(solve_integer(snf, diff).has_value());
      }
  }
}

TEST_CASE("symmetries act on orbits") {
  IntMatrix2 a = cat_map();
  std::vector<SolSymmetry> g = standard_generators();
  PeriodicOrbit beta1 = orbit_of(a, TorusPoint(Rat(1, 4), Rat(0)));
  PeriodicOrbit beta2 = orbit_of(a, TorusPoint(Rat(3, 4), Rat(0)));
  PeriodicOrbit omega = orbit_of(a, TorusPoint(Rat(0), Rat(0)));

  CHECK(apply_symmetry(g[0], beta1) == beta1);
  CHECK(apply_symmetry(g[2], beta1) == beta2);  // pointwise, seed to seed
  PeriodicOrbit omega_reversed = apply_symmetry(g[1], omega);
  CHECK(omega_reversed.points == omega.points);
  CHECK(omega_reversed.orientation == -1);
}

TEST_CASE("reversing symmetries yield valid forward orbits with flipped orientation") {
  IntMatrix2 a = cat_map();
  std::vector<SolSymmetry> g = standard_generators();
  for (const TorusPoint& p : periodic_points(a, 3)) {
    PeriodicOrbit orbit = orbit_of(a, p);
    for (int i : {1, 2, 3, 4}) {
      PeriodicOrbit image = apply_symmetry(g[i], orbit);
      validate_orbit(a, image);  // point order satisfies the forward-map invariant
      CHECK(image.period == orbit.period);
      CHECK(image.orientation == g[i].eps);
    }
  }
}

TEST_CASE("symmetries permute the period-n point set") {
  IntMatrix2 a = cat_map();
  std::vector<SolSymmetry> g = standard_generators();
  for (long long n : {2LL, 3LL}) {
    std::vector<TorusPoint> points = periodic_points(a, n);
    std::set<TorusPoint> point_set(points.begin(), points.end());
    for (const SolSymmetry& s : g) {
      std::set<TorusPoint> image;
      for (const TorusPoint& p : points) image.insert(apply_mod_lattice(s.B, p));
      CHECK(image == point_set);
    }
  }
}

TEST_CASE("fiber winding is the signed period") {
  IntMatrix2 a = cat_map();
  PeriodicOrbit omega = orbit_of(a, TorusPoint(Rat(0), Rat(0)));
  CHECK(fiber_winding(holonomy_class(a, omega)) == 1);
  PeriodicOrbit reversed = apply_symmetry(standard_generator(1), omega);
  CHECK(fiber_winding(holonomy_class(a, reversed)) == -1);
  CHECK(fiber_winding(class_of_point(a, Rat(1, 4), Rat(0))) == 3);
}

TEST_CASE("classes of opposite orientation are never freely homotopic") {
  IntMatrix2 a = cat_map();
  PeriodicOrbit beta1 = orbit_of(a, TorusPoint(Rat(1, 4), Rat(0)));
  FreeHomotopyClass forward = holonomy_class(a, beta1);
  FreeHomotopyClass backward = holonomy_class(a, apply_symmetry(standard_generator(1), beta1));
  CHECK(backward.winding == -3);
  CHECK_FALSE(freely_homotopic(a, forward, backward));
}
