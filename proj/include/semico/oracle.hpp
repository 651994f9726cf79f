#pragma once

/// @file oracle.hpp
/// Brute-force reference implementations written straight from the
/// definitions. Nothing here calls into the transform, reliability or
/// signature modules; only the core value types are shared.

#include <functional>
#include <span>

#include "semico/core.hpp"
#include "semico/signature.hpp"

namespace semico::oracle {

/// Largest n accepted by enumerate_semicoherent.
inline constexpr int kMaxEnumeratedComponents = 4;
/// Largest n for the other brute-force routines (they are 3^n or worse).
inline constexpr int kMaxComponents = 12;
/// Largest family handled by subfamily enumeration.
inline constexpr int kMaxFamilySize = 20;

/// Visits every semicoherent structure function on n components exactly
/// once, in increasing order of the table read as a binary number.
/// Throws CapacityError for n > kMaxEnumeratedComponents.
void for_each_semicoherent(int n,
                           const std::function<void(const TruthTable&)>& visit);

std::vector<TruthTable> enumerate_semicoherent(int n);

/// Expands every term phi(A) prod_A x_i prod_{C\A}(1 - x_i) and collects
/// monomials.
MultilinearForm simple_form(const TruthTable& t);

struct FormationCounts {
  Coefficient odd = 0;
  Coefficient even = 0;

  Coefficient balance() const noexcept { return odd - even; }
};

/// Classifies every nonempty subfamily whose union is exactly A.
FormationCounts formations(const SetFamily& paths, SubsetMask a);

/// P with phi(P) = 1 and phi(P') = 0 for every proper subset P'.
SetFamily minimal_path_sets(const TruthTable& t);

/// K with phi(C\K) = 0 and phi(C\K') = 1 for every proper subset K'.
SetFamily minimal_cut_sets(const TruthTable& t);

/// Evaluates 1 - prod_j (1 - prod_{i in P_j} x_i) at the 0/1 point A.
bool coproduct_of_paths(const SetFamily& paths, SubsetMask a);

/// Evaluates prod_j (1 - prod_{i in K_j} (1 - x_i)) at the 0/1 point A.
bool product_of_cuts(const SetFamily& cuts, SubsetMask a);

TruthTable table_from_paths(const SetFamily& paths);
TruthTable table_from_cuts(const SetFamily& cuts);

/// 1 - phi(1 - x) evaluated point by point.
TruthTable dual_table(const TruthTable& t);

/// Direct size census of the brute-force minimal path and cut sets.
SmallCounts small_counts(const TruthTable& t);

/// Self-descriptive sum phi(A) prod_A p_i prod_{C\A} (1 - p_i).
Rational reliability(const TruthTable& t, std::span<const Rational> p);

/// Boland's formula evaluated by listing the subsets of each size.
SignatureVector signature(const TruthTable& t);

}  // namespace semico::oracle
