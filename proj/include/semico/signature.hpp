#pragma once

/// @file signature.hpp
/// Structural signatures and the counts of minimal path/cut sets of size one
/// and two that they determine.

#include "semico/core.hpp"

namespace semico {

/// alpha_k = minimal path sets of size k, beta_k = minimal cut sets of
/// size k.
struct SmallCounts {
  Coefficient alpha1 = 0;
  Coefficient alpha2 = 0;
  Coefficient beta1 = 0;
  Coefficient beta2 = 0;

  friend bool operator==(const SmallCounts&, const SmallCounts&) = default;
};

/// d_1, d_2 of phi and d_1^D, d_2^D of its dual.
struct LowCoefficients {
  Coefficient d1 = 0;
  Coefficient d2 = 0;
  Coefficient d1_dual = 0;
  Coefficient d2_dual = 0;

  friend bool operator==(const LowCoefficients&,
                         const LowCoefficients&) = default;
};

/// Exact binomial coefficient; zero when k > n.
BigInt binomial(unsigned n, unsigned k);

/// s_k from the size census of path sets: the share of working
/// (n-k+1)-subsets minus the share of working (n-k)-subsets.
/// Throws NotSemicoherentError.
SignatureVector signature_boland(const TruthTable& t);

/// s_k = sum_{j=1}^{n-k+1} C(n-k, j-1) / C(n, j) * d_j.
SignatureVector signature_from_diagonal(const DiagonalPoly& d);

/// s^D_k = s_{n+1-k}.
SignatureVector dual_signature(const SignatureVector& s);

/// alpha_1 = d_1, alpha_2 = C(d_1,2) + d_2 and the dual pair for beta.
/// Throws InconsistentCoefficientsError when a count comes out negative.
SmallCounts small_counts_from_coefficients(const LowCoefficients& c);

/// d_1 = n s_n, d_2 = C(n,2)(s_{n-1} - s_n), d_1^D = n s_1,
/// d_2^D = C(n,2)(s_2 - s_1). Throws InconsistentCoefficientsError when any
/// of these is not an integer.
LowCoefficients coefficients_from_signature(const SignatureVector& s);

/// small_counts_from_coefficients(coefficients_from_signature(s)).
SmallCounts small_counts_from_signature(const SignatureVector& s);

/// Signature straight from minimal path sets via diagonal_from_paths.
SignatureVector signature_from_paths(const SetFamily& paths,
                                     const Limits& limits = {});

}  // namespace semico
