#include "anosovkit/exact.hpp"

#include <array>
#include <cctype>
#include <tuple>

namespace anosov {

const char* errc_name(errc code) {
  switch (code) {
    case errc::bad_argument: return "BadArgument";
    case errc::non_invertible: return "NonInvertible";
    case errc::not_normalizing: return "NotNormalizing";
    case errc::degenerate: return "Degenerate";
    case errc::not_periodic: return "NotPeriodic";
    case errc::not_closed: return "NotClosed";
    case errc::zero_slope: return "ZeroSlope";
    case errc::bad_index: return "BadIndex";
    case errc::not_hyperbolic: return "NotHyperbolic";
    case errc::degenerate_segment: return "DegenerateSegment";
    case errc::premise_violated: return "PremiseViolated";
    case errc::check_failed: return "CheckFailed";
    case errc::stale_hash: return "StaleHash";
  }
  return "Error";
}

Int IntMatrix2::max_abs_entry() const {
  Int m = abs(a);
  if (abs(b) > m) m = abs(b);
  if (abs(c) > m) m = abs(c);
  if (abs(d) > m) m = abs(d);
  return m;
}

IntMatrix2 IntMatrix2::inverse() const {
  Int dt = det();
  if (dt != 1 && dt != -1)
    fail(errc::non_invertible, "integer inverse requires det = +-1, got det = " + to_decimal(dt));
  // adjugate divided by det; det = +-1 keeps entries integral
  return {d / dt, -b / dt, -c / dt, a / dt};
}

IntMatrix2 operator*(const IntMatrix2& m, const IntMatrix2& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
          m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

IntMatrix2 operator+(const IntMatrix2& m, const IntMatrix2& n) {
  return {m.a + n.a, m.b + n.b, m.c + n.c, m.d + n.d};
}

IntMatrix2 operator-(const IntMatrix2& m, const IntMatrix2& n) {
  return {m.a - n.a, m.b - n.b, m.c - n.c, m.d - n.d};
}

IntMatrix2 operator-(const IntMatrix2& m) { return {-m.a, -m.b, -m.c, -m.d}; }

IntVec2 operator*(const IntMatrix2& m, const IntVec2& v) {
  return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
}

IntMatrix2 mat_mul(const IntMatrix2& m, const IntMatrix2& n) { return m * n; }

IntMatrix2 mat_pow(const IntMatrix2& m, long long n) {
  IntMatrix2 base = m;
  if (n < 0) {
    base = m.inverse();
    n = -n;
  }
  IntMatrix2 result = IntMatrix2::identity();
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

IntMatrix2 conjugate(const IntMatrix2& symmetry, const IntMatrix2& base) {
  return symmetry * base * symmetry.inverse();
}

IntMatrix2 cat_map() { return {2, 1, 1, 1}; }

IntMatrix2 cat_map_sqrt() { return {1, 1, 1, 0}; }

RationalVec2 operator*(const IntMatrix2& m, const RationalVec2& v) {
  return {Rat(m.a) * v.x + Rat(m.b) * v.y, Rat(m.c) * v.x + Rat(m.d) * v.y};
}

RationalVec2 operator+(const RationalVec2& u, const RationalVec2& v) {
  return {u.x + v.x, u.y + v.y};
}

RationalVec2 operator-(const RationalVec2& u, const RationalVec2& v) {
  return {u.x - v.x, u.y - v.y};
}

namespace {

// g = s*a + t*b, g >= 0
std::tuple<Int, Int, Int> egcd(Int a, Int b) {
  Int s0 = 1, t0 = 0, s1 = 0, t1 = 1;
  while (b != 0) {
    Int q = a / b;  // truncated division is fine for the invariants
    Int r = a - q * b;
    a = b;
    b = r;
    Int s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = s1;
    t0 = t1;
    s1 = s2;
    t1 = t2;
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  return {a, s0, t0};
}

}  // namespace

SnfDecomposition smith_normal_form(const IntMatrix2& m) {
  IntMatrix2 U = IntMatrix2::identity();
  IntMatrix2 V = IntMatrix2::identity();
  IntMatrix2 D = m;

  auto clear_offdiagonal = [&]() {
    while (D.b != 0 || D.c != 0) {
      if (D.a == 0) {
        // bring a nonzero entry to the pivot
        IntMatrix2 swap{0, 1, 1, 0};
        if (D.c != 0) {
          D = swap * D;
          U = swap * U;
        } else {
          D = D * swap;
          V = V * swap;
        }
      } else if (D.c != 0) {
        if (D.c % D.a == 0) {
          // plain shear; leaves the first row alone
          IntMatrix2 T{1, 0, -D.c / D.a, 1};
          D = T * D;
          U = T * U;
        } else {
          // pivot strictly shrinks to gcd(a, c)
          auto [g, s, t] = egcd(D.a, D.c);
          IntMatrix2 T{s, t, -D.c / g, D.a / g};  // det = 1
          D = T * D;
          U = T * U;
        }
      } else {
        if (D.b % D.a == 0) {
          IntMatrix2 T{1, -D.b / D.a, 0, 1};
          D = D * T;
          V = V * T;
        } else {
          auto [g, s, t] = egcd(D.a, D.b);
          IntMatrix2 T{s, -D.b / g, t, D.a / g};  // det = 1
          D = D * T;
          V = V * T;
        }
      }
    }
  };

  clear_offdiagonal();

  if (D.a == 0 && D.d != 0) {
    // move the nonzero elementary divisor first
    IntMatrix2 swap{0, 1, 1, 0};
    D = swap * D * swap;
    U = swap * U;
    V = V * swap;
  }
  while (D.a != 0 && D.d % D.a != 0) {
    // mix the diagonal entries and rerun so that d1 | d2; the pivot shrinks
    // to a proper divisor each pass
    IntMatrix2 T{1, 0, 1, 1};  // column 1 += column 2
    D = D * T;
    V = V * T;
    clear_offdiagonal();
  }
  if (D.a < 0) {
    IntMatrix2 T{-1, 0, 0, 1};
    D = T * D;
    U = T * U;
  }
  if (D.d < 0) {
    IntMatrix2 T{1, 0, 0, -1};
    D = T * D;
    U = T * U;
  }

  SnfDecomposition snf{U, V, D, m};
  if (!(U * m * V == D) || !U.is_unimodular() || !V.is_unimodular())
    fail(errc::check_failed, "Smith normal form transform verification failed");
  if (D.d != 0 && D.a != 0 && D.d % D.a != 0)
    fail(errc::check_failed, "Smith normal form divisibility chain failed");
  return snf;
}

std::optional<IntVec2> solve_integer(const SnfDecomposition& snf, const IntVec2& w) {
  // source = U^-1 D V^-1, so source*y = w iff D z = U w with z = V^-1 y
  IntVec2 rhs = snf.U * w;
  Int d1 = snf.D.a, d2 = snf.D.d;
  IntVec2 z;
  if (d1 == 0) {
    if (rhs.x != 0) return std::nullopt;
    z.x = 0;
  } else {
    if (rhs.x % d1 != 0) return std::nullopt;
    z.x = rhs.x / d1;
  }
  if (d2 == 0) {
    if (rhs.y != 0) return std::nullopt;
    z.y = 0;
  } else {
    if (rhs.y % d2 != 0) return std::nullopt;
    z.y = rhs.y / d2;
  }
  return snf.V * z;
}

Int rat_floor(const Rat& r) {
  Int num = numerator(r), den = denominator(r);  // den > 0 canonically
  Int q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

std::string to_decimal(const Int& n) { return n.str(); }

Int int_from_decimal(const std::string& s) {
  if (s.empty()) fail(errc::bad_argument, "empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) fail(errc::bad_argument, "bare sign in integer literal '" + s + "'");
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      fail(errc::bad_argument, "malformed integer literal '" + s + "'");
  return Int(s);
}

std::string to_fraction(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rat rat_from_fraction(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(int_from_decimal(s));
  Int num = int_from_decimal(s.substr(0, slash));
  Int den = int_from_decimal(s.substr(slash + 1));
  if (den == 0) fail(errc::bad_argument, "zero denominator in '" + s + "'");
  return Rat(num) / Rat(den);
}

}  // namespace anosov
