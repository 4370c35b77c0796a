#include <doctest.h>

#include <random>

#include "anosovkit/exact.hpp"

using namespace anosov;

namespace {

IntMatrix2 random_matrix(std::mt19937& rng, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  return {entry(rng), entry(rng), entry(rng), entry(rng)};
}

IntMatrix2 random_unimodular(std::mt19937& rng, int bound) {
  for (;;) {
    IntMatrix2 m = random_matrix(rng, bound);
    if (m.is_unimodular()) return m;
  }
}

}  // namespace

TEST_CASE("matrix product against hand multiplication") {
  IntMatrix2 a = cat_map();
  CHECK(a * a == IntMatrix2{5, 3, 3, 2});
  CHECK(IntMatrix2::identity() * a == a);
  IntMatrix2 f = cat_map_sqrt();
  CHECK(f * f == a);
}

TEST_CASE("integer inverse and powers") {
  IntMatrix2 a = cat_map();
  CHECK(a.inverse() == IntMatrix2{1, -1, -1, 2});
  CHECK(a * a.inverse() == IntMatrix2::identity());
  CHECK(mat_pow(a, 0) == IntMatrix2::identity());
  CHECK(mat_pow(a, 3) == a * a * a);
  CHECK(mat_pow(a, -2) == a.inverse() * a.inverse());
  IntMatrix2 doubling{2, 0, 0, 2};
  CHECK_THROWS_AS(doubling.inverse(), Error);
}

TEST_CASE("conjugation sends the monodromy to its inverse for the reversing matrices") {
  IntMatrix2 a = cat_map();
  IntMatrix2 b1{-1, 0, 1, 1};
  IntMatrix2 b2{-1, 0, 0, -1};
  IntMatrix2 b4{0, 1, -1, 0};
  CHECK(conjugate(b1, a) == a.inverse());
  CHECK(conjugate(b2, a) == a);
  CHECK(conjugate(b4, a) == a.inverse());
  IntMatrix2 not_unimodular{2, 0, 0, 1};
  CHECK_THROWS_AS(conjugate(not_unimodular, a), Error);
}

TEST_CASE("conjugation round-trips through the inverse matrix") {
  std::mt19937 rng(2024);
  IntMatrix2 a = cat_map();
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix2 b = random_unimodular(rng, 9);
    CHECK(conjugate(b, conjugate(b.inverse(), a)) == a);
  }
}

TEST_CASE("Smith normal form of the worked examples") {
  SnfDecomposition snf = smith_normal_form({12, 8, 8, 4});
  CHECK(snf.D == IntMatrix2{4, 0, 0, 4});
  CHECK(smith_normal_form(IntMatrix2::identity()).D == IntMatrix2::identity());
  CHECK(smith_normal_form({1, 1, 1, 0}).D == IntMatrix2::identity());
}

TEST_CASE("Smith normal form properties on random matrices") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 400; ++trial) {
    IntMatrix2 m = random_matrix(rng, 50);
    SnfDecomposition snf = smith_normal_form(m);
    CHECK(snf.U * m * snf.V == snf.D);
    CHECK(snf.U.is_unimodular());
    CHECK(snf.V.is_unimodular());
    CHECK(snf.D.b == 0);
    CHECK(snf.D.c == 0);
    CHECK(snf.D.a >= 0);
    CHECK(snf.D.d >= 0);
    CHECK(abs(snf.D.det()) == abs(m.det()));
    if (snf.D.a != 0) CHECK(snf.D.d % snf.D.a == 0);
    if (snf.D.a == 0) CHECK(snf.D.d == 0);
  }
}

TEST_CASE("integer solving through the Smith form matches the rational inverse") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-40, 40);
  for (int trial = 0; trial < 300; ++trial) {
    IntMatrix2 m = random_matrix(rng, 12);
    if (m.det() == 0) continue;
    SnfDecomposition snf = smith_normal_form(m);
    IntVec2 w{entry(rng), entry(rng)};
    auto solution = solve_integer(snf, w);
    // oracle: solve exactly over the rationals and test integrality
    Rat det(m.det());
    Rat y1 = (Rat(m.d) * Rat(w.x) - Rat(m.b) * Rat(w.y)) / det;
    Rat y2 = (Rat(m.a) * Rat(w.y) - Rat(m.c) * Rat(w.x)) / det;
    bool integral = denominator(y1) == 1 && denominator(y2) == 1;
    CHECK(solution.has_value() == integral);
    if (solution) {
      CHECK(m * *solution == w);
    }
  }
}

TEST_CASE("decimal and fraction serialization round-trips") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<long long> wide(-1000000000000LL, 1000000000000LL);
  for (int trial = 0; trial < 100; ++trial) {
    Int n = Int(wide(rng)) * Int(wide(rng));
    CHECK(int_from_decimal(to_decimal(n)) == n);
    Int den = Int(wide(rng));
    if (den == 0) continue;
    Rat r = Rat(n) / Rat(den);
    CHECK(rat_from_fraction(to_fraction(r)) == r);
  }
  CHECK(to_fraction(Rat(3) / Rat(-4)) == "-3/4");
  CHECK(rat_from_fraction("7") == Rat(7));
  CHECK_THROWS_AS(int_from_decimal("12x"), Error);
  CHECK_THROWS_AS(rat_from_fraction("1/0"), Error);
}

TEST_CASE("rational floor") {
  CHECK(rat_floor(Rat(7) / Rat(2)) == 3);
  CHECK(rat_floor(Rat(-7) / Rat(2)) == -4);
  CHECK(rat_floor(Rat(-4) / Rat(2)) == -2);
  CHECK(rat_floor(Rat(0)) == 0);
}
