#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "anosovkit/errors.hpp"

namespace anosov {

// Unbounded exact arithmetic throughout; entries of matrix powers grow
// geometrically, so fixed-width integers are not an option.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct IntVec2 {
  Int x{0}, y{0};
  bool operator==(const IntVec2&) const = default;
};

/// 2x2 integer matrix ((a,b),(c,d)), row-major.
struct IntMatrix2 {
  Int a{0}, b{0}, c{0}, d{0};

  static IntMatrix2 identity() { return {1, 0, 0, 1}; }

  Int det() const { return a * d - b * c; }
  Int trace() const { return a + d; }
  bool is_unimodular() const {
    Int dt = det();
    return dt == 1 || dt == -1;
  }
  Int max_abs_entry() const;

  /// Integer inverse; exists iff det = +-1.
  IntMatrix2 inverse() const;

  bool operator==(const IntMatrix2&) const = default;
};

IntMatrix2 operator*(const IntMatrix2& m, const IntMatrix2& n);
IntMatrix2 operator+(const IntMatrix2& m, const IntMatrix2& n);
IntMatrix2 operator-(const IntMatrix2& m, const IntMatrix2& n);
IntMatrix2 operator-(const IntMatrix2& m);
IntVec2 operator*(const IntMatrix2& m, const IntVec2& v);

IntMatrix2 mat_mul(const IntMatrix2& m, const IntMatrix2& n);

/// m^n, with negative exponents allowed for unimodular m.
IntMatrix2 mat_pow(const IntMatrix2& m, long long n);

/// B A B^-1 for unimodular B.
IntMatrix2 conjugate(const IntMatrix2& symmetry, const IntMatrix2& base);

/// The Anosov automorphism ((2,1),(1,1)) of the 2-torus (Arnold cat map).
IntMatrix2 cat_map();

/// ((1,1),(1,0)); squares to cat_map().
IntMatrix2 cat_map_sqrt();

struct RationalVec2 {
  Rat x{0}, y{0};
  bool operator==(const RationalVec2&) const = default;
};

RationalVec2 operator*(const IntMatrix2& m, const RationalVec2& v);
RationalVec2 operator+(const RationalVec2& u, const RationalVec2& v);
RationalVec2 operator-(const RationalVec2& u, const RationalVec2& v);

/// U * source * V = D with U, V unimodular, D = diag(d1, d2), 0 <= d1, d1 | d2.
struct SnfDecomposition {
  IntMatrix2 U, V, D, source;
};

SnfDecomposition smith_normal_form(const IntMatrix2& m);

/// Integer solution y of source * y = w, if one exists.
std::optional<IntVec2> solve_integer(const SnfDecomposition& snf, const IntVec2& w);

Int rat_floor(const Rat& r);

std::string to_decimal(const Int& n);
Int int_from_decimal(const std::string& s);

/// "p/q" with q > 0 and gcd(p,q) = 1; parses "p" as p/1.
std::string to_fraction(const Rat& r);
Rat rat_from_fraction(const std::string& s);

}  // namespace anosov
