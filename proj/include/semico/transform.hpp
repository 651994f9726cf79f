#pragma once

/// @file transform.hpp
/// Conversions among truth tables, simple forms, and minimal path/cut set
/// families.
///
/// Operations that expect a family of minimal sets accept any family: a
/// non-antichain input is reduced to its minimal members and a warning is
/// emitted through semico::warn.

#include "semico/core.hpp"

namespace semico {

/// phi^D(A) = 1 - phi(C \ A).
TruthTable dualize_table(const TruthTable& t);

/// Inclusion-minimal A with phi(A) = 1. Throws NotSemicoherentError.
SetFamily minimal_path_sets(const TruthTable& t);

/// Inclusion-minimal K with phi(C \ K) = 0; the minimal path sets of the
/// dual. Throws NotSemicoherentError.
SetFamily minimal_cut_sets(const TruthTable& t);

/// phi(A) = 1 iff A contains some member. Throws InputError for an empty
/// family.
TruthTable table_from_paths(const SetFamily& paths, const Limits& limits = {});

/// phi(A) = 1 iff A meets every member.
TruthTable table_from_cuts(const SetFamily& cuts, const Limits& limits = {});

/// Simple form by signed inclusion-exclusion over nonempty subfamilies:
/// each B adds (-1)^{|B|-1} to the coefficient of the union of its members.
/// Families larger than limits.max_r go through table_from_paths and
/// mobius_transform instead.
MultilinearForm simple_form_from_paths(const SetFamily& paths,
                                       const Limits& limits = {});

/// The same expansion over minimal cut sets; yields the simple form of the
/// dual structure function.
MultilinearForm dual_simple_form_from_cuts(const SetFamily& cuts,
                                           const Limits& limits = {});

/// Minimal monomials of a simple form. Throws InconsistentFormError when a
/// minimal monomial has a coefficient other than +1.
SetFamily paths_from_simple_form(const MultilinearForm& f);

/// Minimal cut sets from minimal path sets by way of the dual's simple
/// form. Applied to cuts it returns paths.
SetFamily cuts_from_paths(const SetFamily& paths, const Limits& limits = {});

/// Odd formations of A minus even formations of A; equals d(A).
Coefficient formation_balance(const SetFamily& paths, SubsetMask a,
                              const Limits& limits = {});

namespace detail {

/// Returns the family itself when it is an antichain, otherwise warns and
/// returns its minimal members.
SetFamily as_antichain(const SetFamily& family, const char* operation);

/// Throws CapacityError when the family exceeds limits.max_r.
void check_r_limit(std::size_t r, const Limits& limits);

}  // namespace detail

}  // namespace semico
