#include "semico/transform.hpp"

#include <algorithm>
#include <iterator>
#include <string>
#include <unordered_map>

#include "subfamily.hpp"

namespace semico {

namespace detail {

SetFamily as_antichain(const SetFamily& family, const char* operation) {
  if (family.is_antichain()) return family;
  SetFamily minimal = family.minimized();
  warn(std::string(operation) + ": family is not an antichain; using its " +
       std::to_string(minimal.size()) + " minimal members");
  return minimal;
}

void check_r_limit(std::size_t r, const Limits& limits) {
  if (r > static_cast<std::size_t>(limits.max_r))
    throw CapacityError("family of " + std::to_string(r) +
                            " sets exceeds max-r " +
                            std::to_string(limits.max_r),
                        static_cast<std::uint64_t>(limits.max_r));
}

}  // namespace detail

namespace {

void require_nonempty(const SetFamily& family, const char* what) {
  if (family.empty())
    throw InputError(std::string("at least one ") + what + " set required");
}

MultilinearForm expand_inclusion_exclusion(const SetFamily& family) {
  std::unordered_map<SubsetMask::Bits, Coefficient> acc;
  detail::for_each_subfamily(family.members(),
                             [&](SubsetMask u, int sign) {
                               acc[u.bits()] += sign;
                             });
  MultilinearForm::Terms terms;
  for (const auto& [bits, c] : acc)
    if (c != 0) terms.emplace(SubsetMask(bits), c);
  return MultilinearForm(family.n(), std::move(terms));
}

// Inclusion-exclusion up to max-r members, the lattice route beyond that.
MultilinearForm simple_form_of_family(const SetFamily& family,
                                      const Limits& limits) {
  if (family.size() <= static_cast<std::size_t>(limits.max_r))
    return expand_inclusion_exclusion(family);
  if (family.n() > limits.max_n)
    detail::check_r_limit(family.size(), limits);
  return mobius_transform(table_from_paths(family, limits));
}

}  // namespace

TruthTable dualize_table(const TruthTable& t) {
  const auto src = t.values();
  const std::size_t full = src.size() - 1;
  std::vector<std::uint8_t> values(src.size());
  for (std::size_t m = 0; m < src.size(); ++m) values[m] = 1 - src[full ^ m];
  return TruthTable(t.n(), std::move(values));
}

SetFamily minimal_path_sets(const TruthTable& t) {
  require_semicoherent(t);
  const auto values = t.values();
  std::vector<SubsetMask> minimal;
  for (SubsetMask::Bits m = 0; m < values.size(); ++m) {
    if (!values[m]) continue;
    bool is_minimal = true;
    // Monotone, so checking the lower covers suffices.
    for (SubsetMask::Bits rest = m; rest != 0 && is_minimal; rest &= rest - 1)
      if (values[m & ~(rest & (~rest + 1))]) is_minimal = false;
    if (is_minimal) minimal.push_back(SubsetMask(m));
  }
  return SetFamily(t.n(), std::move(minimal));
}

SetFamily minimal_cut_sets(const TruthTable& t) {
  require_semicoherent(t);
  return minimal_path_sets(dualize_table(t));
}

TruthTable table_from_paths(const SetFamily& paths, const Limits& limits) {
  require_nonempty(paths, "path");
  detail::check_n_limit(paths.n(), limits);
  std::vector<std::uint8_t> values(std::size_t{1} << paths.n(), 0);
  for (SubsetMask p : paths) values[p.bits()] = 1;
  for (int i = 0; i < paths.n(); ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t m = 0; m < values.size(); ++m)
      if (m & bit) values[m] |= values[m ^ bit];
  }
  return TruthTable(paths.n(), std::move(values));
}

TruthTable table_from_cuts(const SetFamily& cuts, const Limits& limits) {
  require_nonempty(cuts, "cut");
  return dualize_table(table_from_paths(cuts, limits));
}

MultilinearForm simple_form_from_paths(const SetFamily& paths,
                                       const Limits& limits) {
  require_nonempty(paths, "path");
  return simple_form_of_family(
      detail::as_antichain(paths, "simple_form_from_paths"), limits);
}

MultilinearForm dual_simple_form_from_cuts(const SetFamily& cuts,
                                           const Limits& limits) {
  require_nonempty(cuts, "cut");
  return simple_form_of_family(
      detail::as_antichain(cuts, "dual_simple_form_from_cuts"), limits);
}

SetFamily paths_from_simple_form(const MultilinearForm& f) {
  if (f.coefficient(SubsetMask{}) != 0)
    throw InconsistentFormError(
        "inconsistent simple form: nonzero constant term");
  // Terms iterate size-first; a monomial is minimal iff no earlier minimal
  // monomial is contained in it.
  std::vector<SubsetMask> minimal;
  for (const auto& [mask, c] : f.terms()) {
    const bool dominated =
        std::any_of(minimal.begin(), minimal.end(),
                    [m = mask](SubsetMask p) { return p.is_subset_of(m); });
    if (dominated) continue;
    if (c != 1)
      throw InconsistentFormError("inconsistent simple form: minimal monomial " +
                                  format_subset(mask) + " has coefficient " +
                                  std::to_string(c));
    minimal.push_back(mask);
  }
  if (minimal.empty())
    throw InconsistentFormError("inconsistent simple form: no monomials");
  return SetFamily(f.n(), std::move(minimal));
}

SetFamily cuts_from_paths(const SetFamily& paths, const Limits& limits) {
  require_nonempty(paths, "path");
  const SetFamily family = detail::as_antichain(paths, "cuts_from_paths");
  return paths_from_simple_form(
      mobius_transform(dualize_table(table_from_paths(family, limits))));
}

Coefficient formation_balance(const SetFamily& paths, SubsetMask a,
                              const Limits& limits) {
  const SetFamily family = detail::as_antichain(paths, "formation_balance");
  // Only members inside A can take part in a formation of A.
  std::vector<SubsetMask> inside;
  std::copy_if(family.begin(), family.end(), std::back_inserter(inside),
               [a](SubsetMask p) { return p.is_subset_of(a); });
  detail::check_r_limit(inside.size(), limits);
  Coefficient balance = 0;
  detail::for_each_subfamily(inside, [&](SubsetMask u, int sign) {
    if (u == a) balance += sign;
  });
  return balance;
}

}  // namespace semico
