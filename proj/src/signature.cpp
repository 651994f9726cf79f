#include "semico/signature.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "semico/reliability.hpp"

namespace semico {

namespace {

Rational ratio(const BigInt& num, const BigInt& den) { return Rational(num, den); }

Coefficient to_coefficient(const Rational& q, const char* what) {
  if (boost::multiprecision::denominator(q) != 1)
    throw InconsistentCoefficientsError(
        std::string("not a structural signature of any system of this size: ") +
        what + " = " + format_rational(q) + " is not an integer");
  const BigInt value = boost::multiprecision::numerator(q);
  if (value > std::numeric_limits<Coefficient>::max() ||
      value < std::numeric_limits<Coefficient>::min())
    throw OverflowError(std::string(what) + " does not fit in 64 bits");
  return static_cast<Coefficient>(value);
}

// C(m, 2) for m >= 0.
Coefficient choose_two(Coefficient m) {
  if (m < 2) return 0;
  return detail::checked_mul(m, m - 1) / 2;
}

}  // namespace

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

SignatureVector signature_boland(const TruthTable& t) {
  require_semicoherent(t);
  const int n = t.n();
  std::vector<BigInt> working(n + 1, 0);
  const auto values = t.values();
  for (std::size_t m = 0; m < values.size(); ++m)
    if (values[m])
      ++working[std::popcount(static_cast<SubsetMask::Bits>(m))];

  auto share = [&](int size) {
    return ratio(working[size], binomial(n, size));
  };
  std::vector<Rational> s(n);
  for (int k = 1; k <= n; ++k) s[k - 1] = share(n - k + 1) - share(n - k);
  return SignatureVector(n, std::move(s));
}

SignatureVector signature_from_diagonal(const DiagonalPoly& d) {
  const int n = d.n();
  std::vector<Rational> s(n);
  for (int k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= n - k + 1; ++j)
      acc += ratio(binomial(n - k, j - 1), binomial(n, j)) * d.coefficient(j);
    s[k - 1] = acc;
  }
  return SignatureVector(n, std::move(s));
}

SignatureVector dual_signature(const SignatureVector& s) {
  std::vector<Rational> reversed(s.values().rbegin(), s.values().rend());
  return SignatureVector(s.n(), std::move(reversed));
}

SmallCounts small_counts_from_coefficients(const LowCoefficients& c) {
  auto require_count = [](Coefficient v, const char* name) {
    if (v < 0)
      throw InconsistentCoefficientsError(
          std::string("inconsistent coefficients: ") + name + " = " +
          std::to_string(v) + " is negative");
    return v;
  };
  SmallCounts out;
  out.alpha1 = require_count(c.d1, "alpha1");
  out.beta1 = require_count(c.d1_dual, "beta1");
  out.alpha2 =
      require_count(detail::checked_add(choose_two(c.d1), c.d2), "alpha2");
  out.beta2 = require_count(
      detail::checked_add(choose_two(c.d1_dual), c.d2_dual), "beta2");
  return out;
}

LowCoefficients coefficients_from_signature(const SignatureVector& s) {
  const int n = s.n();
  const Rational pairs(binomial(n, 2));
  LowCoefficients c;
  c.d1 = to_coefficient(n * s.at(n), "n*s_n");
  c.d1_dual = to_coefficient(n * s.at(1), "n*s_1");
  if (n >= 2) {
    c.d2 = to_coefficient(pairs * (s.at(n - 1) - s.at(n)),
                          "C(n,2)*(s_{n-1} - s_n)");
    c.d2_dual = to_coefficient(pairs * (s.at(2) - s.at(1)),
                               "C(n,2)*(s_2 - s_1)");
  }
  return c;
}

SmallCounts small_counts_from_signature(const SignatureVector& s) {
  return small_counts_from_coefficients(coefficients_from_signature(s));
}

SignatureVector signature_from_paths(const SetFamily& paths,
                                     const Limits& limits) {
  return signature_from_diagonal(diagonal_from_paths(paths, limits));
}

}  // namespace semico
