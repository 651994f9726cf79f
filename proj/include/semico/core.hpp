#pragma once

/// @file core.hpp
/// Value types for structure functions over the subset lattice of
/// components {1..n}, plus the zeta/Moebius pair linking truth tables and
/// simple (multilinear) forms.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "semico/error.hpp"

namespace semico {

/// Hard cap on components for anything indexed by a truth table.
inline constexpr int kMaxComponents = 24;
/// Hard cap on family size for 2^r inclusion-exclusion sums.
inline constexpr int kMaxFamilySize = 24;

/// User-tunable bounds; may only tighten the hard caps.
struct Limits {
  int max_n = kMaxComponents;
  int max_r = kMaxFamilySize;

  /// Throws InputError when a bound is non-positive or above its hard cap.
  void validate() const;
};

using Coefficient = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A set of components. Component i (1-based) is bit i-1.
class SubsetMask {
 public:
  using Bits = std::uint32_t;

  constexpr SubsetMask() noexcept = default;
  constexpr explicit SubsetMask(Bits bits) noexcept : bits_(bits) {}

  /// Builds a mask from 1-based component numbers; no range check beyond
  /// the word size.
  static SubsetMask of(std::initializer_list<int> components);

  /// Builds a mask from 1-based component numbers, each required in 1..n.
  static SubsetMask from_components(std::span<const int> components, int n);

  /// The whole component set {1..n}.
  static constexpr SubsetMask full(int n) noexcept {
    return SubsetMask(n >= 32 ? ~Bits{0} : ((Bits{1} << n) - 1));
  }

  constexpr Bits bits() const noexcept { return bits_; }
  int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }

  /// 1-based membership test.
  constexpr bool contains(int component) const noexcept {
    return (bits_ >> (component - 1)) & 1U;
  }
  constexpr bool is_subset_of(SubsetMask other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool fits(int n) const noexcept {
    return (bits_ & ~full(n).bits_) == 0;
  }
  constexpr SubsetMask complement(int n) const noexcept {
    return SubsetMask(full(n).bits_ & ~bits_);
  }

  /// Sorted 1-based component numbers.
  std::vector<int> components() const;

  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) noexcept {
    return SubsetMask(a.bits_ | b.bits_);
  }
  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) noexcept {
    return SubsetMask(a.bits_ & b.bits_);
  }
  friend constexpr bool operator==(SubsetMask, SubsetMask) noexcept = default;

 private:
  Bits bits_ = 0;
};

/// Orders subsets by cardinality, then lexicographically by their sorted
/// component lists ({1,3,5} before {2,3,4}).
struct CanonicalOrder {
  bool operator()(SubsetMask a, SubsetMask b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    const SubsetMask::Bits diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    return (a.bits() & (diff & (~diff + 1))) != 0;
  }
};

/// "{1,3,5}"; the empty set prints as "{}".
std::string format_subset(SubsetMask s);

/// Structure function phi as a dense 0/1 vector indexed by subset mask.
class TruthTable {
 public:
  /// Throws CapacityError for n outside 1..kMaxComponents, InputError for a
  /// length other than 2^n or an entry outside {0,1}.
  TruthTable(int n, std::vector<std::uint8_t> values);

  /// Parses a string of 2^n characters '0'/'1'; character m is phi(mask m).
  static TruthTable from_bit_string(int n, std::string_view bits);

  template <typename Pred>
  static TruthTable from_predicate(int n, Pred&& works) {
    check_component_count(n);
    std::vector<std::uint8_t> values(std::size_t{1} << n);
    for (std::size_t m = 0; m < values.size(); ++m)
      values[m] = works(SubsetMask(static_cast<SubsetMask::Bits>(m))) ? 1 : 0;
    return TruthTable(n, std::move(values));
  }

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool operator[](SubsetMask s) const { return values_[s.bits()] != 0; }
  std::span<const std::uint8_t> values() const noexcept { return values_; }
  std::string to_bit_string() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

  /// Throws CapacityError unless 1 <= n <= kMaxComponents.
  static void check_component_count(int n);

 private:
  int n_;
  std::vector<std::uint8_t> values_;
};

/// Sparse simple form: A -> d(A), zero coefficients never stored.
class MultilinearForm {
 public:
  using Terms = std::map<SubsetMask, Coefficient, CanonicalOrder>;

  explicit MultilinearForm(int n);
  /// Drops zero entries; throws InputError for masks outside {1..n}.
  MultilinearForm(int n, Terms terms);

  int n() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  Coefficient coefficient(SubsetMask s) const;

  friend bool operator==(const MultilinearForm&,
                         const MultilinearForm&) = default;

 private:
  int n_;
  Terms terms_;
};

/// A family of nonempty, distinct subsets kept in canonical order.
class SetFamily {
 public:
  /// Throws InputError for empty members, duplicates, or members outside
  /// {1..n}; CapacityError for n outside 1..kMaxComponents.
  SetFamily(int n, std::vector<SubsetMask> members);

  static SetFamily from_lists(int n,
                              const std::vector<std::vector<int>>& lists);

  int n() const noexcept { return n_; }
  const std::vector<SubsetMask>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  SubsetMask operator[](std::size_t i) const { return members_[i]; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  /// True when no member is a proper subset of another.
  bool is_antichain() const;
  /// The inclusion-minimal members.
  SetFamily minimized() const;

  /// Number of members of the given cardinality.
  std::size_t count_of_size(int k) const;

  std::string to_string() const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  int n_;
  std::vector<SubsetMask> members_;
};

/// Coefficients d_1..d_n of the diagonal section sum_k d_k x^k.
class DiagonalPoly {
 public:
  /// `d` holds d_1..d_n in order.
  DiagonalPoly(int n, std::vector<Coefficient> d);

  int n() const noexcept { return n_; }
  /// 1-based; k in 1..n.
  Coefficient coefficient(int k) const { return d_.at(k - 1); }
  const std::vector<Coefficient>& coefficients() const noexcept { return d_; }
  /// d_1 + ... + d_n, i.e. the value at x = 1.
  Coefficient sum() const;

  friend bool operator==(const DiagonalPoly&, const DiagonalPoly&) = default;

 private:
  int n_;
  std::vector<Coefficient> d_;
};

/// Structural signature (s_1..s_n) in exact rationals.
class SignatureVector {
 public:
  SignatureVector(int n, std::vector<Rational> s);

  int n() const noexcept { return n_; }
  /// 1-based; k in 1..n.
  const Rational& at(int k) const { return s_.at(k - 1); }
  const std::vector<Rational>& values() const noexcept { return s_; }
  /// "(0, 2/3, 1/3, 0)"
  std::string to_string() const;

  friend bool operator==(const SignatureVector&,
                         const SignatureVector&) = default;

 private:
  int n_;
  std::vector<Rational> s_;
};

/// Reduced "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& q);

struct Violation {
  enum class Kind { kEmptySetWorks, kFullSetFails, kNotMonotone };
  Kind kind;
  /// For kNotMonotone: lower is a cover-subset of upper with phi(lower) = 1
  /// and phi(upper) = 0.
  SubsetMask lower;
  SubsetMask upper;

  std::string describe() const;
};

struct ValidationReport {
  std::vector<Violation> violations;
  /// More violations existed than were recorded.
  bool truncated = false;

  bool ok() const noexcept { return violations.empty(); }
  std::string describe() const;
};

/// Checks phi(empty)=0, phi(C)=1 and monotonicity along every cover
/// A -> A + {i}. Records at most `max_violations` witnesses.
ValidationReport validate_semicoherent(const TruthTable& t,
                                       std::size_t max_violations = 32);

/// Throws NotSemicoherentError carrying the first witness.
void require_semicoherent(const TruthTable& t);

/// phi(A) = sum_{B subset of A} d(B). Throws NotStructureFunctionError on
/// the first (by mask) subset whose value falls outside {0,1}.
TruthTable zeta_transform(const MultilinearForm& f, const Limits& limits = {});

/// d(A) = sum_{B subset of A} (-1)^{|A|-|B|} phi(B).
MultilinearForm mobius_transform(const TruthTable& t);

/// Receives library warnings (auto-minimized families and the like).
using WarningHandler = std::function<void(const std::string&)>;

/// Installs a handler and returns the previous one. The default writes to
/// stderr. Passing an empty handler silences warnings.
WarningHandler set_warning_handler(WarningHandler handler);
void warn(const std::string& message);

namespace detail {

Coefficient checked_add(Coefficient a, Coefficient b);
Coefficient checked_mul(Coefficient a, Coefficient b);

/// Throws CapacityError when n exceeds limits.max_n.
void check_n_limit(int n, const Limits& limits);

}  // namespace detail

}  // namespace semico
