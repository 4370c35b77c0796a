#include <doctest.h>

#include <cmath>
#include <random>

#include "anosovkit/orbit_space.hpp"

using namespace anosov;

namespace {

StripPoint random_rational_strip_point(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-2000, 2000);
  std::uniform_int_distribution<int> den(1, 97);
  Rat x = Rat(num(rng)) / Rat(den(rng));
  // pick y inside (x-1, x+1)
  int q = den(rng);
  std::uniform_int_distribution<int> offset(-q + 1, q - 1);
  Rat y = x + Rat(offset(rng)) / Rat(q);
  return StripPoint(x, y);
}

}  // namespace

TEST_CASE("strip membership is enforced") {
  CHECK_NOTHROW(StripPoint(Rat(0), Rat(0)));
  CHECK_NOTHROW(StripPoint(Rat(1, 2), Rat(-1, 4)));
  CHECK_THROWS_AS(StripPoint(Rat(1), Rat(0)), Error);
  CHECK_THROWS_AS(StripPoint(Rat(5, 2), Rat(1, 2)), Error);
}

TEST_CASE("half-step map on the worked points") {
  StripPoint image = eta(StripPoint(Rat(0), Rat(0)));
  CHECK(image == StripPoint(Rat(1), Rat(1)));
  CHECK(eta(StripPoint(Rat(1, 2), Rat(0))) == StripPoint(Rat(1), Rat(3, 2)));
}

TEST_CASE("the geometric construction agrees with the closed form on random points") {
  // eta() itself recomputes both routes and throws on disagreement
  std::mt19937 rng(424243);
  for (int i = 0; i < 10000; ++i) {
    StripPoint p = random_rational_strip_point(rng);
    StripPoint q = eta(p);
    CHECK(q.x == p.y + 1);
    CHECK(q.y == p.x + 1);
  }
}

TEST_CASE("the half-step map has no fixed point") {
  std::mt19937 rng(7);
  for (int i = 0; i < 2000; ++i) {
    StripPoint p = random_rational_strip_point(rng);
    CHECK_FALSE(eta(p) == p);
  }
}

TEST_CASE("the square of the half-step map is the diagonal translation") {
  std::mt19937 rng(11);
  for (int i = 0; i < 1000; ++i) {
    StripPoint p = random_rational_strip_point(rng);
    StripPoint q = eta(eta(p));
    CHECK(q.x == p.x + 2);
    CHECK(q.y == p.y + 2);
  }
  StripPoint p(Rat(1, 3), Rat(-1, 5));
  CHECK(eta_pow(p, -1) == eta_inverse(p));
  CHECK(eta(eta_inverse(p)) == p);
  CHECK(eta_pow(p, 4) == StripPoint(p.x + 4, p.y + 4));
  CHECK(eta_pow(p, -3) == StripPoint(p.y - 3, p.x - 3));
}

TEST_CASE("even powers of the half-step map are pairwise distinct") {
  StripPoint p(Rat(2, 7), Rat(1, 7));
  for (long long k1 = -10; k1 <= 10; ++k1)
    for (long long k2 = k1 + 1; k2 <= 10; ++k2)
      CHECK_FALSE(eta_pow(p, 2 * k1) == eta_pow(p, 2 * k2));
}

TEST_CASE("leaves through a point and their images") {
  StripPoint origin(Rat(0), Rat(0));
  Leaf stable = leaf_through(origin, LeafKind::stable);
  CHECK(stable.level == 0);
  CHECK(stable.lower_end() == -1);
  CHECK(stable.upper_end() == 1);

  Leaf unstable = leaf_through(StripPoint(Rat(1, 2), Rat(0)), LeafKind::unstable);
  CHECK(unstable.level == Rat(1, 2));
  CHECK(unstable.lower_end() == Rat(-1, 2));
  CHECK(unstable.upper_end() == Rat(3, 2));

  // eta exchanges the two families and raises the level by one
  Leaf image = leaf_image_under_eta(stable);
  CHECK(image.kind == LeafKind::unstable);
  CHECK(image.level == 1);
  // pointwise: points of the stable leaf at level 0 map onto the unstable
  // leaf at level 1
  for (int i = -9; i <= 9; ++i) {
    StripPoint on_leaf(Rat(i, 10), Rat(0));
    StripPoint mapped = eta(on_leaf);
    CHECK(mapped.x == image.level);
    CHECK(mapped.y > image.lower_end());
    CHECK(mapped.y < image.upper_end());
  }
}

TEST_CASE("leaf intersection demands one leaf of each kind inside the strip") {
  Leaf stable{LeafKind::stable, Rat(0)};
  Leaf unstable{LeafKind::unstable, Rat(1, 2)};
  CHECK(intersect(stable, unstable) == StripPoint(Rat(1, 2), Rat(0)));
  Leaf far_unstable{LeafKind::unstable, Rat(3)};
  CHECK_THROWS_AS(intersect(stable, far_unstable), Error);
  CHECK_THROWS_AS(intersect(unstable, unstable), Error);
}

TEST_CASE("deck model validation") {
  CHECK_NOTHROW(DeckModel(Rat(0), Rat(1, 5)));
  CHECK_THROWS_AS(DeckModel(Rat(0), Rat(0)), Error);
  CHECK_THROWS_AS(DeckModel(Rat(0), Rat(1, 3)), Error);  // pi/3 > 1
  CHECK_THROWS_AS(DeckModel(Rat(0), Rat(-1, 5)), Error);
}

TEST_CASE("deck model is an increasing homeomorphism commuting with the translation") {
  DeckModel deck(Rat(1, 3), Rat(1, 5));
  CHECK(deck_monotonicity_margin(deck, 10000) > 0);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> real(-8.0, 8.0);
  for (int i = 0; i < 1000; ++i) {
    double x = real(rng);
    CHECK(deck.f(x + 1.0) == doctest::Approx(deck.f(x) + 1.0).epsilon(1e-12));
    // commutation with the half-step on the diagonal action:
    // g(eta(x,y)) = (f(y)+1, f(x)+1) = eta(g(x,y))
    double y = x + 0.37;
    double gx = deck.f(y + 1.0), gy = deck.f(x + 1.0);
    CHECK(gx == doctest::Approx(deck.f(y) + 1.0).epsilon(1e-12));
    CHECK(gy == doctest::Approx(deck.f(x) + 1.0).epsilon(1e-12));
  }
}

TEST_CASE("deck fixed points are the half-step orbit of the axis with alternating parity") {
  DeckModel deck(Rat(0), Rat(1, 5));
  std::vector<DeckFixedPoint> fixed = deck_fixed_orbits(deck, 2);
  REQUIRE(fixed.size() == 5);
  for (long long j = -2; j <= 2; ++j) {
    const DeckFixedPoint& p = fixed[static_cast<std::size_t>(j + 2)];
    CHECK(p.index == j);
    CHECK(p.point == StripPoint(Rat(j), Rat(j)));
    CHECK(p.even == (j % 2 == 0));
  }
  CHECK(deck_fixed_orbits(deck, 0).size() == 1);

  DeckModel shifted(Rat(1, 4), Rat(1, 6));
  std::vector<DeckFixedPoint> fixed_shifted = deck_fixed_orbits(shifted, 5);
  CHECK(fixed_shifted.size() == 11);
  for (const DeckFixedPoint& p : fixed_shifted)
    CHECK(p.point == StripPoint(Rat(1, 4) + p.index, Rat(1, 4) + p.index));
}
