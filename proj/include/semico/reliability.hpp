#pragma once

/// @file reliability.hpp
/// Multilinear extension (reliability function) evaluation and the
/// diagonal section's coefficients.
///
/// Evaluators are instantiated for two scalars: Rational for exact
/// comparisons and double for quick numbers. Floating-point results can
/// lose digits to cancellation between large alternating terms.

#include <span>

#include "semico/core.hpp"

namespace semico {

/// sum_A d(A) prod_{i in A} p_i. Throws InputError unless p has n entries,
/// each in [0,1].
template <typename Scalar>
Scalar evaluate_reliability(const MultilinearForm& f,
                            std::span<const Scalar> p);

/// sum over nonempty subfamilies B of (-1)^{|B|-1} prod_{i in union B} p_i.
template <typename Scalar>
Scalar evaluate_inclusion_exclusion(const SetFamily& paths,
                                    std::span<const Scalar> p,
                                    const Limits& limits = {});

/// d_k = sum of d(A) over |A| = k. Throws InputError if d(empty) != 0.
DiagonalPoly diagonal_coefficients(const MultilinearForm& f);

/// d_k = sum of (-1)^{|B|-1} over subfamilies whose union has k elements.
/// Given minimal cut sets this yields the dual coefficients d_k^D.
DiagonalPoly diagonal_from_paths(const SetFamily& paths,
                                 const Limits& limits = {});

/// sum_k d_k x^k.
template <typename Scalar>
Scalar evaluate_diagonal(const DiagonalPoly& d, const Scalar& x);

/// The six classical ways of writing phi and its extension.
enum class TableForm {
  kSelfDescriptive,      ///< sum phi(A) prod_A x_i prod_{C\A} (1-x_i)
  kDualSelfDescriptive,  ///< 1 - sum phi^D(A) prod_A (1-x_i) prod_{C\A} x_i
  kSimple,               ///< sum d(A) prod_A x_i
  kDualSimple,           ///< sum d^D(A) coprod_A x_i
  kDisjunctiveNormal,    ///< coprod over phi(A)=1 of prod_A x_i
  kConjunctiveNormal,    ///< prod over phi^D(A)=1 of coprod_A x_i
};

/// Evaluates one of the forms, each from its own coefficients. The first
/// four equal the multilinear extension on [0,1]^n; the two normal forms
/// agree with phi only on {0,1}^n.
template <typename Scalar>
Scalar evaluate_table_form(TableForm form, const TruthTable& t,
                           std::span<const Scalar> x);

}  // namespace semico
