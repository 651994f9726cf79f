#include "semico/core.hpp"

#include <algorithm>
#include <iostream>
#include <mutex>
#include <sstream>
#include <utility>

namespace semico {

namespace {

std::mutex& warning_mutex() {
  static std::mutex m;
  return m;
}

WarningHandler& warning_handler() {
  static WarningHandler handler = [](const std::string& message) {
    std::cerr << "warning: " << message << '\n';
  };
  return handler;
}

}  // namespace

WarningHandler set_warning_handler(WarningHandler handler) {
  std::lock_guard lock(warning_mutex());
  return std::exchange(warning_handler(), std::move(handler));
}

void warn(const std::string& message) {
  std::lock_guard lock(warning_mutex());
  if (warning_handler()) warning_handler()(message);
}

namespace detail {

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("integer overflow in coefficient arithmetic");
  return r;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("integer overflow in coefficient arithmetic");
  return r;
}

void check_n_limit(int n, const Limits& limits) {
  if (n > limits.max_n)
    throw CapacityError("component count " + std::to_string(n) +
                            " exceeds max-n " + std::to_string(limits.max_n),
                        static_cast<std::uint64_t>(limits.max_n));
}

}  // namespace detail

void Limits::validate() const {
  if (max_n < 1 || max_n > kMaxComponents)
    throw InputError("max-n must be in 1.." + std::to_string(kMaxComponents));
  if (max_r < 1 || max_r > kMaxFamilySize)
    throw InputError("max-r must be in 1.." + std::to_string(kMaxFamilySize));
}

// SubsetMask -----------------------------------------------------------------

SubsetMask SubsetMask::of(std::initializer_list<int> components) {
  Bits bits = 0;
  for (int c : components) {
    if (c < 1 || c > 32) throw InputError("component out of range");
    bits |= Bits{1} << (c - 1);
  }
  return SubsetMask(bits);
}

SubsetMask SubsetMask::from_components(std::span<const int> components,
                                       int n) {
  Bits bits = 0;
  for (int c : components) {
    if (c < 1 || c > n)
      throw InputError("component " + std::to_string(c) + " outside 1.." +
                       std::to_string(n));
    bits |= Bits{1} << (c - 1);
  }
  return SubsetMask(bits);
}

std::vector<int> SubsetMask::components() const {
  std::vector<int> out;
  out.reserve(size());
  for (Bits rest = bits_; rest != 0; rest &= rest - 1)
    out.push_back(std::countr_zero(rest) + 1);
  return out;
}

std::string format_subset(SubsetMask s) {
  std::string out = "{";
  bool first = true;
  for (int c : s.components()) {
    if (!first) out += ',';
    out += std::to_string(c);
    first = false;
  }
  out += '}';
  return out;
}

// TruthTable -----------------------------------------------------------------

void TruthTable::check_component_count(int n) {
  if (n < 1 || n > kMaxComponents)
    throw CapacityError("component count " + std::to_string(n) +
                            " outside 1.." + std::to_string(kMaxComponents),
                        kMaxComponents);
}

TruthTable::TruthTable(int n, std::vector<std::uint8_t> values)
    : n_(n), values_(std::move(values)) {
  check_component_count(n);
  if (values_.size() != (std::size_t{1} << n))
    throw InputError("truth table for n=" + std::to_string(n) + " needs " +
                     std::to_string(std::size_t{1} << n) + " entries, got " +
                     std::to_string(values_.size()));
  for (std::uint8_t v : values_)
    if (v > 1) throw InputError("truth table entries must be 0 or 1");
}

TruthTable TruthTable::from_bit_string(int n, std::string_view bits) {
  check_component_count(n);
  const std::size_t expected = std::size_t{1} << n;
  if (bits.size() != expected)
    throw InputError("table string for n=" + std::to_string(n) +
                     " must have length " + std::to_string(expected) +
                     ", got " + std::to_string(bits.size()));
  std::vector<std::uint8_t> values(expected);
  for (std::size_t m = 0; m < expected; ++m) {
    if (bits[m] != '0' && bits[m] != '1')
      throw InputError("table string may contain only '0' and '1'");
    values[m] = bits[m] == '1';
  }
  return TruthTable(n, std::move(values));
}

std::string TruthTable::to_bit_string() const {
  std::string out(values_.size(), '0');
  for (std::size_t m = 0; m < values_.size(); ++m)
    if (values_[m]) out[m] = '1';
  return out;
}

// MultilinearForm ------------------------------------------------------------

MultilinearForm::MultilinearForm(int n) : n_(n) {
  TruthTable::check_component_count(n);
}

MultilinearForm::MultilinearForm(int n, Terms terms)
    : n_(n), terms_(std::move(terms)) {
  TruthTable::check_component_count(n);
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [mask, c] : terms_)
    if (!mask.fits(n))
      throw InputError("monomial " + format_subset(mask) +
                       " mentions a component outside 1.." + std::to_string(n));
}

Coefficient MultilinearForm::coefficient(SubsetMask s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? 0 : it->second;
}

// SetFamily ------------------------------------------------------------------

SetFamily::SetFamily(int n, std::vector<SubsetMask> members)
    : n_(n), members_(std::move(members)) {
  TruthTable::check_component_count(n);
  for (SubsetMask m : members_) {
    if (m.empty()) throw InputError("family members must be nonempty");
    if (!m.fits(n))
      throw InputError("set " + format_subset(m) +
                       " mentions a component outside 1.." + std::to_string(n));
  }
  std::sort(members_.begin(), members_.end(), CanonicalOrder{});
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw InputError("family contains duplicate sets");
}

SetFamily SetFamily::from_lists(int n,
                                const std::vector<std::vector<int>>& lists) {
  std::vector<SubsetMask> members;
  members.reserve(lists.size());
  for (const auto& list : lists)
    members.push_back(SubsetMask::from_components(list, n));
  return SetFamily(n, std::move(members));
}

bool SetFamily::is_antichain() const {
  for (std::size_t i = 0; i < members_.size(); ++i)
    for (std::size_t j = 0; j < members_.size(); ++j)
      if (i != j && members_[i].is_subset_of(members_[j])) return false;
  return true;
}

SetFamily SetFamily::minimized() const {
  // Canonical order is size-first, so any subset of a member precedes it.
  std::vector<SubsetMask> kept;
  for (SubsetMask m : members_) {
    bool absorbed = std::any_of(kept.begin(), kept.end(),
                                [m](SubsetMask k) { return k.is_subset_of(m); });
    if (!absorbed) kept.push_back(m);
  }
  return SetFamily(n_, std::move(kept));
}

std::size_t SetFamily::count_of_size(int k) const {
  return static_cast<std::size_t>(std::count_if(
      members_.begin(), members_.end(),
      [k](SubsetMask m) { return m.size() == k; }));
}

std::string SetFamily::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ", ";
    out += format_subset(members_[i]);
  }
  return out;
}

// DiagonalPoly / SignatureVector ---------------------------------------------

DiagonalPoly::DiagonalPoly(int n, std::vector<Coefficient> d)
    : n_(n), d_(std::move(d)) {
  TruthTable::check_component_count(n);
  if (d_.size() != static_cast<std::size_t>(n))
    throw InputError("diagonal polynomial needs exactly n coefficients");
}

Coefficient DiagonalPoly::sum() const {
  Coefficient total = 0;
  for (Coefficient c : d_) total = detail::checked_add(total, c);
  return total;
}

SignatureVector::SignatureVector(int n, std::vector<Rational> s)
    : n_(n), s_(std::move(s)) {
  TruthTable::check_component_count(n);
  if (s_.size() != static_cast<std::size_t>(n))
    throw InputError("signature needs exactly n entries");
}

std::string format_rational(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string SignatureVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < s_.size(); ++i) {
    if (i) out += ", ";
    out += format_rational(s_[i]);
  }
  out += ')';
  return out;
}

// Validation -----------------------------------------------------------------

std::string Violation::describe() const {
  switch (kind) {
    case Kind::kEmptySetWorks:
      return "phi({}) = 1 (must be 0)";
    case Kind::kFullSetFails:
      return "phi(C) = 0 (must be 1)";
    case Kind::kNotMonotone:
      return "not monotone: phi(" + format_subset(lower) + ") = 1 > phi(" +
             format_subset(upper) + ") = 0";
  }
  return {};
}

std::string ValidationReport::describe() const {
  if (ok()) return "ok";
  std::string out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) out += "; ";
    out += violations[i].describe();
  }
  if (truncated) out += "; ...";
  return out;
}

ValidationReport validate_semicoherent(const TruthTable& t,
                                       std::size_t max_violations) {
  ValidationReport report;
  auto record = [&](Violation v) {
    if (report.violations.size() < max_violations)
      report.violations.push_back(v);
    else
      report.truncated = true;
  };
  const SubsetMask full = SubsetMask::full(t.n());
  if (t[SubsetMask{}])
    record({Violation::Kind::kEmptySetWorks, SubsetMask{}, SubsetMask{}});
  if (!t[full]) record({Violation::Kind::kFullSetFails, full, full});

  const auto values = t.values();
  for (SubsetMask::Bits m = 0; m < values.size(); ++m) {
    if (!values[m]) continue;
    for (int i = 0; i < t.n(); ++i) {
      const SubsetMask::Bits up = m | (SubsetMask::Bits{1} << i);
      if (up != m && !values[up])
        record({Violation::Kind::kNotMonotone, SubsetMask(m), SubsetMask(up)});
    }
  }
  return report;
}

void require_semicoherent(const TruthTable& t) {
  ValidationReport report = validate_semicoherent(t, 1);
  if (!report.ok())
    throw NotSemicoherentError("not a semicoherent structure function: " +
                               report.violations.front().describe());
}

// Zeta / Moebius -------------------------------------------------------------

TruthTable zeta_transform(const MultilinearForm& f, const Limits& limits) {
  detail::check_n_limit(f.n(), limits);
  const int n = f.n();
  std::vector<Coefficient> acc(std::size_t{1} << n, 0);
  for (const auto& [mask, c] : f.terms()) acc[mask.bits()] = c;
  for (int i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t m = 0; m < acc.size(); ++m)
      if (m & bit) acc[m] = detail::checked_add(acc[m], acc[m ^ bit]);
  }
  std::vector<std::uint8_t> values(acc.size());
  for (std::size_t m = 0; m < acc.size(); ++m) {
    if (acc[m] != 0 && acc[m] != 1)
      throw NotStructureFunctionError(
          "not a structure function: value " + std::to_string(acc[m]) +
          " at " + format_subset(SubsetMask(static_cast<SubsetMask::Bits>(m))));
    values[m] = static_cast<std::uint8_t>(acc[m]);
  }
  return TruthTable(n, std::move(values));
}

MultilinearForm mobius_transform(const TruthTable& t) {
  const int n = t.n();
  // Partial transforms stay within [-2^n, 2^n], so no overflow is possible.
  std::vector<Coefficient> acc(t.values().begin(), t.values().end());
  for (int i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t m = 0; m < acc.size(); ++m)
      if (m & bit) acc[m] -= acc[m ^ bit];
  }
  MultilinearForm::Terms terms;
  for (std::size_t m = 0; m < acc.size(); ++m)
    if (acc[m] != 0)
      terms.emplace(SubsetMask(static_cast<SubsetMask::Bits>(m)), acc[m]);
  return MultilinearForm(n, std::move(terms));
}

}  // namespace semico
