#include "semico/oracle.hpp"

#include <string>

namespace semico::oracle {

namespace {

using Bits = SubsetMask::Bits;

void check_size(int n, int bound) {
  if (n > bound)
    throw CapacityError("oracle supports at most " + std::to_string(bound) +
                            " components, got " + std::to_string(n),
                        static_cast<std::uint64_t>(bound));
}

void check_family(const SetFamily& family) {
  check_size(family.n(), kMaxComponents);
  if (family.size() > static_cast<std::size_t>(kMaxFamilySize))
    throw CapacityError("oracle supports at most " +
                            std::to_string(kMaxFamilySize) + " sets",
                        kMaxFamilySize);
}

bool is_subset(Bits a, Bits b) { return (a & ~b) == 0; }

int cardinality(Bits m) {
  int count = 0;
  for (; m != 0; m >>= 1) count += static_cast<int>(m & 1U);
  return count;
}

// Proper subsets of m, found by scanning every mask below 2^n.
template <typename Visit>
bool all_proper_subsets(Bits m, int n, Visit&& ok) {
  for (Bits sub = 0; sub < (Bits{1} << n); ++sub)
    if (sub != m && is_subset(sub, m) && !ok(sub)) return false;
  return true;
}

}  // namespace

void for_each_semicoherent(int n,
                           const std::function<void(const TruthTable&)>& visit) {
  if (n < 1) throw InputError("need at least one component");
  check_size(n, kMaxEnumeratedComponents);
  const std::size_t points = std::size_t{1} << n;
  const std::uint64_t functions = std::uint64_t{1} << points;
  std::vector<std::uint8_t> values(points);
  for (std::uint64_t code = 0; code < functions; ++code) {
    for (std::size_t m = 0; m < points; ++m) values[m] = (code >> m) & 1U;
    if (values[0] != 0 || values[points - 1] != 1) continue;
    bool monotone = true;
    for (Bits a = 0; a < points && monotone; ++a)
      for (Bits b = 0; b < points && monotone; ++b)
        if (is_subset(a, b) && values[a] > values[b]) monotone = false;
    if (monotone) visit(TruthTable(n, values));
  }
}

std::vector<TruthTable> enumerate_semicoherent(int n) {
  std::vector<TruthTable> out;
  for_each_semicoherent(n, [&](const TruthTable& t) { out.push_back(t); });
  return out;
}

MultilinearForm simple_form(const TruthTable& t) {
  check_size(t.n(), kMaxComponents);
  const int n = t.n();
  const Bits full = (Bits{1} << n) - 1;
  std::vector<Coefficient> coeff(std::size_t{1} << n, 0);
  for (Bits a = 0; a <= full; ++a) {
    if (!t[SubsetMask(a)]) continue;
    // prod_{i not in A} (1 - x_i) = sum over S within C\A of (-1)^|S| x^S.
    const Bits rest = full & ~a;
    for (Bits s = 0; s <= full; ++s) {
      if (!is_subset(s, rest)) continue;
      coeff[a | s] += (cardinality(s) % 2 == 0) ? 1 : -1;
    }
  }
  MultilinearForm::Terms terms;
  for (Bits m = 0; m <= full; ++m)
    if (coeff[m] != 0) terms.emplace(SubsetMask(m), coeff[m]);
  return MultilinearForm(n, std::move(terms));
}

FormationCounts formations(const SetFamily& paths, SubsetMask a) {
  check_family(paths);
  const std::size_t r = paths.size();
  FormationCounts counts;
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << r); ++pick) {
    Bits union_bits = 0;
    int chosen = 0;
    for (std::size_t j = 0; j < r; ++j) {
      if ((pick >> j) & 1U) {
        union_bits |= paths[j].bits();
        ++chosen;
      }
    }
    if (union_bits != a.bits()) continue;
    if (chosen % 2 == 1)
      ++counts.odd;
    else
      ++counts.even;
  }
  return counts;
}

SetFamily minimal_path_sets(const TruthTable& t) {
  check_size(t.n(), kMaxComponents);
  const int n = t.n();
  std::vector<SubsetMask> out;
  for (Bits p = 0; p < (Bits{1} << n); ++p) {
    if (!t[SubsetMask(p)]) continue;
    if (all_proper_subsets(p, n, [&](Bits q) { return !t[SubsetMask(q)]; }))
      out.emplace_back(p);
  }
  return SetFamily(n, std::move(out));
}

SetFamily minimal_cut_sets(const TruthTable& t) {
  check_size(t.n(), kMaxComponents);
  const int n = t.n();
  const Bits full = (Bits{1} << n) - 1;
  std::vector<SubsetMask> out;
  for (Bits k = 0; k <= full; ++k) {
    if (t[SubsetMask(full & ~k)]) continue;
    if (all_proper_subsets(k, n,
                           [&](Bits q) { return t[SubsetMask(full & ~q)]; }))
      out.emplace_back(k);
  }
  return SetFamily(n, std::move(out));
}

bool coproduct_of_paths(const SetFamily& paths, SubsetMask a) {
  int all_fail = 1;
  for (SubsetMask p : paths) {
    int works = 1;
    for (int i = 1; i <= paths.n(); ++i)
      if (p.contains(i)) works *= a.contains(i) ? 1 : 0;
    all_fail *= 1 - works;
  }
  return 1 - all_fail == 1;
}

bool product_of_cuts(const SetFamily& cuts, SubsetMask a) {
  int all_hold = 1;
  for (SubsetMask k : cuts) {
    int all_down = 1;
    for (int i = 1; i <= cuts.n(); ++i)
      if (k.contains(i)) all_down *= 1 - (a.contains(i) ? 1 : 0);
    all_hold *= 1 - all_down;
  }
  return all_hold == 1;
}

TruthTable table_from_paths(const SetFamily& paths) {
  check_family(paths);
  return TruthTable::from_predicate(
      paths.n(), [&](SubsetMask a) { return coproduct_of_paths(paths, a); });
}

TruthTable table_from_cuts(const SetFamily& cuts) {
  check_family(cuts);
  return TruthTable::from_predicate(
      cuts.n(), [&](SubsetMask a) { return product_of_cuts(cuts, a); });
}

TruthTable dual_table(const TruthTable& t) {
  const int n = t.n();
  return TruthTable::from_predicate(n, [&](SubsetMask a) {
    // x -> 1 - x flips every coordinate.
    Bits flipped = 0;
    for (int i = 1; i <= n; ++i)
      if (!a.contains(i)) flipped |= Bits{1} << (i - 1);
    return !t[SubsetMask(flipped)];
  });
}

SmallCounts small_counts(const TruthTable& t) {
  const SetFamily paths = minimal_path_sets(t);
  const SetFamily cuts = minimal_cut_sets(t);
  auto census = [](const SetFamily& family, int size) {
    Coefficient count = 0;
    for (SubsetMask m : family)
      if (cardinality(m.bits()) == size) ++count;
    return count;
  };
  return {census(paths, 1), census(paths, 2), census(cuts, 1),
          census(cuts, 2)};
}

Rational reliability(const TruthTable& t, std::span<const Rational> p) {
  check_size(t.n(), kMaxComponents);
  if (p.size() != static_cast<std::size_t>(t.n()))
    throw InputError("probability vector has the wrong length");
  Rational total = 0;
  for (Bits a = 0; a < (Bits{1} << t.n()); ++a) {
    if (!t[SubsetMask(a)]) continue;
    Rational term = 1;
    for (int i = 1; i <= t.n(); ++i)
      term *= SubsetMask(a).contains(i) ? p[i - 1] : Rational(1) - p[i - 1];
    total += term;
  }
  return total;
}

SignatureVector signature(const TruthTable& t) {
  check_size(t.n(), kMaxComponents);
  const int n = t.n();
  std::vector<Coefficient> working(n + 1, 0);
  std::vector<Coefficient> total(n + 1, 0);
  for (Bits a = 0; a < (Bits{1} << n); ++a) {
    const int size = cardinality(a);
    ++total[size];
    if (t[SubsetMask(a)]) ++working[size];
  }
  auto share = [&](int size) {
    return Rational(working[size]) / Rational(total[size]);
  };
  std::vector<Rational> s(n);
  for (int k = 1; k <= n; ++k) s[k - 1] = share(n - k + 1) - share(n - k);
  return SignatureVector(n, std::move(s));
}

}  // namespace semico::oracle
