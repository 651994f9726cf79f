#pragma once

// Named systems and small builders shared by the test binaries.

#include <algorithm>
#include <bit>
#include <random>
#include <utility>
#include <vector>

#include "semico/core.hpp"
#include "semico/oracle.hpp"

namespace semico::testing {

inline SetFamily family(int n, std::vector<std::vector<int>> sets) {
  return SetFamily::from_lists(n, sets);
}

inline MultilinearForm form(
    int n, std::vector<std::pair<std::vector<int>, Coefficient>> terms) {
  MultilinearForm::Terms out;
  for (const auto& [components, c] : terms)
    out.emplace(SubsetMask::from_components(components, n), c);
  return MultilinearForm(n, std::move(out));
}

inline SetFamily bridge_paths() {
  return family(5, {{1, 4}, {2, 5}, {1, 3, 5}, {2, 3, 4}});
}
inline SetFamily bridge_cuts() {
  return family(5, {{1, 2}, {4, 5}, {1, 3, 5}, {2, 3, 4}});
}
// Built by the definitional coproduct, not the fast route.
inline TruthTable bridge_table() {
  return oracle::table_from_paths(bridge_paths());
}

inline MultilinearForm bridge_form() {
  return form(5, {{{1, 4}, 1},
                  {{2, 5}, 1},
                  {{1, 3, 5}, 1},
                  {{2, 3, 4}, 1},
                  {{1, 2, 3, 4}, -1},
                  {{1, 2, 3, 5}, -1},
                  {{1, 2, 4, 5}, -1},
                  {{1, 3, 4, 5}, -1},
                  {{2, 3, 4, 5}, -1},
                  {{1, 2, 3, 4, 5}, 2}});
}

inline SetFamily chain_paths() { return family(4, {{1, 2}, {2, 3}, {3, 4}}); }
inline SetFamily chain_cuts() { return family(4, {{1, 3}, {2, 3}, {2, 4}}); }
inline TruthTable chain_table() {
  return oracle::table_from_paths(chain_paths());
}
inline MultilinearForm chain_form() {
  return form(4, {{{1, 2}, 1},
                  {{2, 3}, 1},
                  {{3, 4}, 1},
                  {{1, 2, 3}, -1},
                  {{2, 3, 4}, -1}});
}
inline MultilinearForm chain_dual_form() {
  return form(4, {{{1, 3}, 1},
                  {{2, 3}, 1},
                  {{2, 4}, 1},
                  {{1, 2, 3}, -1},
                  {{2, 3, 4}, -1}});
}

// phi1 = x1x2 coprod x3x4, phi2 = x1x2 coprod x1x3 coprod x2x3x4.
inline SetFamily phi1_paths() { return family(4, {{1, 2}, {3, 4}}); }
inline SetFamily phi2_paths() { return family(4, {{1, 2}, {1, 3}, {2, 3, 4}}); }
inline TruthTable phi1_table() { return oracle::table_from_paths(phi1_paths()); }
inline TruthTable phi2_table() { return oracle::table_from_paths(phi2_paths()); }

inline TruthTable series(int n) {
  return TruthTable::from_predicate(
      n, [n](SubsetMask a) { return a == SubsetMask::full(n); });
}
inline TruthTable parallel(int n) {
  return TruthTable::from_predicate(n, [](SubsetMask a) { return !a.empty(); });
}
inline TruthTable k_out_of_n(int k, int n) {
  return TruthTable::from_predicate(n, [k](SubsetMask a) { return a.size() >= k; });
}

inline std::vector<Rational> exact_point(std::vector<std::pair<int, int>> p) {
  std::vector<Rational> out;
  for (auto [num, den] : p) out.emplace_back(num, den);
  return out;
}

/// Random antichain on n <= max_n components with at most max_r members.
class AntichainGenerator {
 public:
  explicit AntichainGenerator(std::uint32_t seed) : rng_(seed) {}

  SetFamily operator()(int max_n, int max_r) {
    const int n = std::uniform_int_distribution<int>(1, max_n)(rng_);
    const int r = std::uniform_int_distribution<int>(1, max_r)(rng_);
    const SubsetMask::Bits full = SubsetMask::full(n).bits();
    std::vector<SubsetMask> members;
    // Bias toward small sets so that unions stay varied.
    std::uniform_int_distribution<int> size_dist(1, std::max(1, (n + 1) / 2));
    for (int j = 0; j < r; ++j) {
      const int size = size_dist(rng_);
      SubsetMask::Bits bits = 0;
      while (std::popcount(bits) < size)
        bits |= SubsetMask::Bits{1} << std::uniform_int_distribution<int>(0, n - 1)(rng_);
      bits &= full;
      if (std::find(members.begin(), members.end(), SubsetMask(bits)) ==
          members.end())
        members.emplace_back(bits);
    }
    return SetFamily(n, std::move(members)).minimized();
  }

  std::vector<Rational> point(int n) {
    std::vector<Rational> p;
    std::uniform_int_distribution<int> den_dist(1, 12);
    for (int i = 0; i < n; ++i) {
      const int den = den_dist(rng_);
      p.emplace_back(std::uniform_int_distribution<int>(0, den)(rng_), den);
    }
    return p;
  }

  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace semico::testing
