#include "semico/reliability.hpp"

#include <string>

#include "semico/transform.hpp"
#include "subfamily.hpp"

namespace semico {

namespace {

template <typename Scalar>
void check_probabilities(int n, std::span<const Scalar> p) {
  if (p.size() != static_cast<std::size_t>(n))
    throw InputError("expected " + std::to_string(n) +
                     " component probabilities, got " +
                     std::to_string(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!(p[i] >= Scalar(0) && p[i] <= Scalar(1)))
      throw InputError("probability of component " + std::to_string(i + 1) +
                       " is outside [0,1]");
}

template <typename Scalar>
Scalar product_over(SubsetMask s, std::span<const Scalar> x) {
  Scalar prod(1);
  for (int c : s.components()) prod *= x[c - 1];
  return prod;
}

template <typename Scalar>
Scalar product_of_complements(SubsetMask s, std::span<const Scalar> x) {
  Scalar prod(1);
  for (int c : s.components()) prod *= Scalar(1) - x[c - 1];
  return prod;
}

}  // namespace

template <typename Scalar>
Scalar evaluate_reliability(const MultilinearForm& f,
                            std::span<const Scalar> p) {
  check_probabilities(f.n(), p);
  Scalar total(0);
  for (const auto& [mask, c] : f.terms())
    total += Scalar(c) * product_over(mask, p);
  return total;
}

template <typename Scalar>
Scalar evaluate_inclusion_exclusion(const SetFamily& paths,
                                    std::span<const Scalar> p,
                                    const Limits& limits) {
  check_probabilities(paths.n(), p);
  const SetFamily family =
      detail::as_antichain(paths, "evaluate_inclusion_exclusion");
  detail::check_r_limit(family.size(), limits);
  Scalar total(0);
  detail::for_each_subfamily(family.members(), [&](SubsetMask u, int sign) {
    if (sign > 0)
      total += product_over(u, p);
    else
      total -= product_over(u, p);
  });
  return total;
}

DiagonalPoly diagonal_coefficients(const MultilinearForm& f) {
  if (f.coefficient(SubsetMask{}) != 0)
    throw InputError("diagonal coefficients need d({}) = 0");
  std::vector<Coefficient> d(f.n(), 0);
  for (const auto& [mask, c] : f.terms())
    d[mask.size() - 1] = detail::checked_add(d[mask.size() - 1], c);
  return DiagonalPoly(f.n(), std::move(d));
}

DiagonalPoly diagonal_from_paths(const SetFamily& paths,
                                 const Limits& limits) {
  if (paths.empty()) throw InputError("at least one path set required");
  const SetFamily family = detail::as_antichain(paths, "diagonal_from_paths");
  detail::check_r_limit(family.size(), limits);
  std::vector<Coefficient> d(family.n(), 0);
  detail::for_each_subfamily(family.members(), [&](SubsetMask u, int sign) {
    d[u.size() - 1] += sign;
  });
  return DiagonalPoly(family.n(), std::move(d));
}

template <typename Scalar>
Scalar evaluate_diagonal(const DiagonalPoly& d, const Scalar& x) {
  Scalar acc(0);
  for (int k = d.n(); k >= 1; --k) acc = (acc + Scalar(d.coefficient(k))) * x;
  return acc;
}

template <typename Scalar>
Scalar evaluate_table_form(TableForm form, const TruthTable& t,
                           std::span<const Scalar> x) {
  check_probabilities(t.n(), x);
  const std::size_t count = t.size();
  auto subset = [](std::size_t m) {
    return SubsetMask(static_cast<SubsetMask::Bits>(m));
  };

  switch (form) {
    case TableForm::kSelfDescriptive: {
      Scalar total(0);
      for (std::size_t m = 0; m < count; ++m)
        if (t[subset(m)])
          total += product_over(subset(m), x) *
                   product_of_complements(subset(m).complement(t.n()), x);
      return total;
    }
    case TableForm::kDualSelfDescriptive: {
      const TruthTable dual = dualize_table(t);
      Scalar total(0);
      for (std::size_t m = 0; m < count; ++m)
        if (dual[subset(m)])
          total += product_of_complements(subset(m), x) *
                   product_over(subset(m).complement(t.n()), x);
      return Scalar(1) - total;
    }
    case TableForm::kSimple:
      return evaluate_reliability(mobius_transform(t), x);
    case TableForm::kDualSimple: {
      const MultilinearForm dual_form = mobius_transform(dualize_table(t));
      Scalar total(0);
      for (const auto& [mask, c] : dual_form.terms())
        total += Scalar(c) * (Scalar(1) - product_of_complements(mask, x));
      return total;
    }
    case TableForm::kDisjunctiveNormal: {
      Scalar none_works(1);
      for (std::size_t m = 0; m < count; ++m)
        if (t[subset(m)]) none_works *= Scalar(1) - product_over(subset(m), x);
      return Scalar(1) - none_works;
    }
    case TableForm::kConjunctiveNormal: {
      const TruthTable dual = dualize_table(t);
      Scalar all_hold(1);
      for (std::size_t m = 0; m < count; ++m)
        if (dual[subset(m)])
          all_hold *= Scalar(1) - product_of_complements(subset(m), x);
      return all_hold;
    }
  }
  throw InputError("unknown table form");
}

#define SEMICO_INSTANTIATE(Scalar)                                          \
  template Scalar evaluate_reliability<Scalar>(const MultilinearForm&,      \
                                               std::span<const Scalar>);    \
  template Scalar evaluate_inclusion_exclusion<Scalar>(                     \
      const SetFamily&, std::span<const Scalar>, const Limits&);            \
  template Scalar evaluate_diagonal<Scalar>(const DiagonalPoly&,            \
                                            const Scalar&);                 \
  template Scalar evaluate_table_form<Scalar>(TableForm, const TruthTable&, \
                                              std::span<const Scalar>);

SEMICO_INSTANTIATE(double)
SEMICO_INSTANTIATE(Rational)

#undef SEMICO_INSTANTIATE

}  // namespace semico
