#include "anosovkit/symmetry.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <tuple>

namespace anosov {

namespace {

std::string mat_str(const IntMatrix2& m) {
  return "((" + to_decimal(m.a) + "," + to_decimal(m.b) + "),(" + to_decimal(m.c) + "," +
         to_decimal(m.d) + "))";
}

using EntryKey = std::tuple<Int, Int, Int, Int, Int>;  // (max_abs, a, b, c, d)

EntryKey entry_key(const IntMatrix2& m) { return {m.max_abs_entry(), m.a, m.b, m.c, m.d}; }

}  // namespace

SolSymmetry::SolSymmetry(const IntMatrix2& B_, const IntMatrix2& base, std::string label_)
    : B(B_), eps(0), label(std::move(label_)) {
  if (!B.is_unimodular())
    fail(errc::non_invertible, "symmetry matrix must have det = +-1, got " + mat_str(B));
  IntMatrix2 conj = conjugate(B, base);
  if (conj == base) {
    eps = +1;
  } else if (base.is_unimodular() && conj == base.inverse()) {
    eps = -1;
  } else {
    fail(errc::not_normalizing,
         mat_str(B) + " conjugates the monodromy to " + mat_str(conj) +
             ", which is neither it nor its inverse");
  }
}

SolSymmetry make_symmetry(const IntMatrix2& B, const IntMatrix2& base, std::string label) {
  return SolSymmetry(B, base, std::move(label));
}

int orientation_sign(const SolSymmetry& s) {
  return (s.B.det() == 1 ? 1 : -1) * s.eps;
}

BoundaryAction boundary_action(const SolSymmetry& s) {
  return {s.B.det() == 1 ? 1 : -1, s.eps};
}

std::vector<SolSymmetry> enumerate_symmetries(const IntMatrix2& base, long long bound) {
  std::vector<SolSymmetry> found;
  if (bound < 1) return found;
  for (long long a = -bound; a <= bound; ++a)
    for (long long b = -bound; b <= bound; ++b)
      for (long long c = -bound; c <= bound; ++c)
        for (long long d = -bound; d <= bound; ++d) {
          IntMatrix2 m{a, b, c, d};
          if (!m.is_unimodular()) continue;
          IntMatrix2 conj = conjugate(m, base);
          if (conj == base || (base.is_unimodular() && conj == base.inverse()))
            found.emplace_back(m, base);
        }
  std::sort(found.begin(), found.end(), [](const SolSymmetry& x, const SolSymmetry& y) {
    return entry_key(x.B) < entry_key(y.B);
  });
  return found;
}

bool is_power_of(const IntMatrix2& base, const IntMatrix2& candidate) {
  Int cap = candidate.max_abs_entry();
  IntMatrix2 forward = IntMatrix2::identity();
  while (forward.max_abs_entry() <= cap) {
    if (forward == candidate) return true;
    forward = forward * base;
    if (forward == IntMatrix2::identity()) break;  // finite order, already scanned
  }
  if (!base.is_unimodular()) return false;
  IntMatrix2 inv = base.inverse();
  IntMatrix2 backward = inv;
  while (backward.max_abs_entry() <= cap) {
    if (backward == candidate) return true;
    backward = backward * inv;
  }
  return false;
}

IntMatrix2 coset_canonical(const IntMatrix2& B, const IntMatrix2& base) {
  // entries of B*base^j grow geometrically in both directions, so walk out
  // from j = 0 and stop after a run of non-improvements
  IntMatrix2 best = B;
  EntryKey best_key = entry_key(B);
  for (const IntMatrix2& step : {base, base.inverse()}) {
    IntMatrix2 current = B;
    int stale = 0;
    while (stale < 12) {
      current = current * step;
      EntryKey key = entry_key(current);
      if (key < best_key) {
        best = current;
        best_key = key;
        stale = 0;
      } else {
        ++stale;
      }
    }
  }
  return best;
}

bool same_coset(const IntMatrix2& b1, const IntMatrix2& b2, const IntMatrix2& base) {
  return is_power_of(base, b1.inverse() * b2);
}

int GroupTable::identity_index() const {
  for (std::size_t e = 0; e < elements.size(); ++e) {
    bool ok = true;
    for (std::size_t j = 0; j < elements.size(); ++j)
      if (cayley[e][j] != static_cast<int>(j) || cayley[j][e] != static_cast<int>(j)) {
        ok = false;
        break;
      }
    if (ok) return static_cast<int>(e);
  }
  fail(errc::check_failed, "group table has no identity");
}

namespace {

std::string identify_group(std::size_t order, bool abelian, const std::map<int, int>& profile) {
  auto count = [&](int k) {
    auto it = profile.find(k);
    return it == profile.end() ? 0 : it->second;
  };
  if (order == 1) return "trivial";
  if (order == 2) return "Z2";
  if (order == 4) {
    if (count(4) > 0) return "Z4";
    return "Z2+Z2";
  }
  if (order == 8 && !abelian && count(2) == 5) return "D4";
  return "other";
}

void finish_table(GroupTable& table) {
  const std::size_t n = table.elements.size();
  // Latin square check
  for (std::size_t i = 0; i < n; ++i) {
    std::set<int> row(table.cayley[i].begin(), table.cayley[i].end());
    std::set<int> col;
    for (std::size_t j = 0; j < n; ++j) col.insert(table.cayley[j][i]);
    if (row.size() != n || col.size() != n)
      fail(errc::check_failed, "Cayley table is not a Latin square");
  }
  if (n <= 16) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (table.cayley[table.cayley[i][j]][k] != table.cayley[i][table.cayley[j][k]])
            fail(errc::check_failed, "Cayley table is not associative");
  }

  int e = table.identity_index();
  table.order_profile.clear();
  for (std::size_t i = 0; i < n; ++i) {
    int power = static_cast<int>(i), order = 1;
    while (power != e) {
      power = table.cayley[power][static_cast<int>(i)];
      ++order;
      if (order > static_cast<int>(n)) fail(errc::check_failed, "element order exceeds group order");
    }
    table.elements[i].order = order;
    table.order_profile[order] += 1;
  }
  table.abelian = true;
  for (std::size_t i = 0; i < n && table.abelian; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (table.cayley[i][j] != table.cayley[j][i]) {
        table.abelian = false;
        break;
      }
  table.identification = identify_group(n, table.abelian, table.order_profile);
}

}  // namespace

GroupTable quotient_group(const std::vector<SolSymmetry>& symmetries, const IntMatrix2& base) {
  if (symmetries.empty()) fail(errc::bad_argument, "empty symmetry list");

  // bucket the input into cosets modulo <A>
  std::vector<MappingClass> classes;
  for (const SolSymmetry& s : symmetries) {
    IntMatrix2 canon = coset_canonical(s.B, base);
    bool known = false;
    for (MappingClass& mc : classes) {
      if (mc.coset == canon) {
        known = true;
        // orientation sign and boundary action are class functions
        if (mc.orientation_sign != orientation_sign(s) || !(mc.boundary == boundary_action(s)))
          fail(errc::check_failed, "coset members disagree on orientation data");
        if (entry_key(s.B) < entry_key(mc.representative.B)) mc.representative = s;
        break;
      }
    }
    if (!known)
      classes.push_back({s, canon, orientation_sign(s), boundary_action(s), 0});
  }

  // identity coset first, the rest ordered by canonical representative
  IntMatrix2 id_coset = coset_canonical(IntMatrix2::identity(), base);
  std::sort(classes.begin(), classes.end(), [&](const MappingClass& x, const MappingClass& y) {
    if ((x.coset == id_coset) != (y.coset == id_coset)) return x.coset == id_coset;
    return entry_key(x.coset) < entry_key(y.coset);
  });

  const std::size_t n = classes.size();
  GroupTable table;
  table.elements = classes;
  table.cayley.assign(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix2 product = classes[i].representative.B * classes[j].representative.B;
      IntMatrix2 canon = coset_canonical(product, base);
      int index = -1;
      for (std::size_t k = 0; k < n; ++k)
        if (classes[k].coset == canon) {
          index = static_cast<int>(k);
          break;
        }
      if (index < 0)
        fail(errc::not_closed, "product of cosets " + mat_str(classes[i].coset) + " and " +
                                   mat_str(classes[j].coset) + " falls outside the input: " +
                                   mat_str(canon));
      table.cayley[i][j] = index;
    }

  finish_table(table);
  return table;
}

GroupTable orientation_preserving_subgroup(const GroupTable& table) {
  std::vector<int> keep;
  for (std::size_t i = 0; i < table.elements.size(); ++i)
    if (table.elements[i].orientation_sign == +1) keep.push_back(static_cast<int>(i));

  std::vector<int> position(table.elements.size(), -1);
  for (std::size_t p = 0; p < keep.size(); ++p) position[keep[p]] = static_cast<int>(p);

  GroupTable sub;
  for (int i : keep) sub.elements.push_back(table.elements[i]);
  sub.cayley.assign(keep.size(), std::vector<int>(keep.size(), -1));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) {
      int product = table.cayley[keep[i]][keep[j]];
      if (position[product] < 0)
        fail(errc::not_closed, "orientation-preserving classes are not closed under product");
      sub.cayley[i][j] = position[product];
    }
  finish_table(sub);
  return sub;
}

std::vector<SolSymmetry> standard_generators() {
  IntMatrix2 base = cat_map();
  return {
      SolSymmetry(IntMatrix2::identity(), base, "g0"),
      SolSymmetry({-1, 0, 1, 1}, base, "g1"),
      SolSymmetry({-1, 0, 0, -1}, base, "g2"),
      SolSymmetry({1, 0, -1, -1}, base, "g3"),
      SolSymmetry({0, 1, -1, 0}, base, "g4"),
  };
}

SolSymmetry standard_generator(int i) {
  if (i < 0 || i > 4) fail(errc::bad_index, "standard generator index must be 0..4");
  return standard_generators()[static_cast<std::size_t>(i)];
}

}  // namespace anosov
