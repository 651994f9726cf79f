#include <doctest.h>

#include <limits>

#include "named_systems.hpp"
#include "semico/core.hpp"

using namespace semico;
using namespace semico::testing;

TEST_CASE("SubsetMask uses 1-based components") {
  const SubsetMask s = SubsetMask::of({1, 3, 5});
  CHECK(s.bits() == 0b10101);
  CHECK(s.size() == 3);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK(s.components() == std::vector<int>{1, 3, 5});
  CHECK(format_subset(s) == "{1,3,5}");
  CHECK(format_subset(SubsetMask{}) == "{}");
  CHECK(s.complement(5) == SubsetMask::of({2, 4}));
  CHECK_THROWS_AS(SubsetMask::from_components(std::vector<int>{0}, 3),
                  InputError);
  CHECK_THROWS_AS(SubsetMask::from_components(std::vector<int>{4}, 3),
                  InputError);
}

TEST_CASE("canonical order is size first, then lexicographic") {
  CanonicalOrder less;
  CHECK(less(SubsetMask::of({2, 5}), SubsetMask::of({1, 3, 5})));
  CHECK(less(SubsetMask::of({1, 3, 5}), SubsetMask::of({2, 3, 4})));
  CHECK(less(SubsetMask::of({1, 4}), SubsetMask::of({2, 5})));
  CHECK(less(SubsetMask::of({1, 5}), SubsetMask::of({2, 3})));
  CHECK_FALSE(less(SubsetMask::of({2, 3}), SubsetMask::of({2, 3})));

  const SetFamily f = family(5, {{2, 3, 4}, {2, 5}, {1, 3, 5}, {1, 4}});
  CHECK(f.to_string() == "{1,4}, {2,5}, {1,3,5}, {2,3,4}");
}

TEST_CASE("SetFamily validation and minimization") {
  CHECK_THROWS_AS(SetFamily(3, {SubsetMask{}}), InputError);
  CHECK_THROWS_AS(family(3, {{1}, {1}}), InputError);
  CHECK_THROWS_AS(family(2, {{3}}), InputError);
  CHECK_THROWS_AS(family(25, {{1}}), CapacityError);

  const SetFamily f = family(3, {{1}, {1, 2}, {2, 3}});
  CHECK_FALSE(f.is_antichain());
  CHECK(f.minimized() == family(3, {{1}, {2, 3}}));
  CHECK(bridge_paths().is_antichain());
  CHECK(bridge_paths().count_of_size(2) == 2);
}

TEST_CASE("TruthTable construction") {
  CHECK_THROWS_AS(TruthTable::from_bit_string(3, "0001"), InputError);
  CHECK_THROWS_AS(TruthTable::from_bit_string(2, "0021"), InputError);
  CHECK_THROWS_AS(TruthTable(0, {0}), CapacityError);
  CHECK_THROWS_AS(TruthTable(25, {}), CapacityError);
  const TruthTable t = TruthTable::from_bit_string(2, "0001");
  CHECK(t[SubsetMask::of({1, 2})]);
  CHECK_FALSE(t[SubsetMask::of({1})]);
  CHECK(t.to_bit_string() == "0001");
}

TEST_CASE("validate_semicoherent") {
  SUBCASE("bridge is semicoherent") {
    CHECK(validate_semicoherent(bridge_table()).ok());
  }
  SUBCASE("constant zero fails at C") {
    const ValidationReport r =
        validate_semicoherent(TruthTable(3, std::vector<std::uint8_t>(8, 0)));
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].kind == Violation::Kind::kFullSetFails);
    CHECK(r.describe() == "phi(C) = 0 (must be 1)");
  }
  SUBCASE("monotonicity witness names the pair") {
    // n = 3, phi({1}) = 1, phi({1,2}) = 0, phi(C) = 1.
    const TruthTable t = TruthTable::from_bit_string(3, "01000111");
    const ValidationReport r = validate_semicoherent(t);
    REQUIRE_FALSE(r.ok());
    bool found = false;
    for (const Violation& v : r.violations)
      found |= v.kind == Violation::Kind::kNotMonotone &&
               v.lower == SubsetMask::of({1}) && v.upper == SubsetMask::of({1, 2});
    CHECK(found);
    CHECK_THROWS_AS(require_semicoherent(t), NotSemicoherentError);
  }
  SUBCASE("phi(empty) = 1 is reported") {
    const ValidationReport r =
        validate_semicoherent(TruthTable::from_bit_string(1, "11"));
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].kind == Violation::Kind::kEmptySetWorks);
  }
  SUBCASE("report is truncated at the requested size") {
    const ValidationReport r =
        validate_semicoherent(TruthTable::from_bit_string(3, "11111110"), 2);
    CHECK(r.violations.size() == 2);
    CHECK(r.truncated);
  }
}

TEST_CASE("cover check agrees with the all-pairs definition for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const std::size_t points = std::size_t{1} << n;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << points); ++code) {
      std::vector<std::uint8_t> v(points);
      for (std::size_t m = 0; m < points; ++m) v[m] = (code >> m) & 1U;
      bool definitional = v[0] == 0 && v[points - 1] == 1;
      for (std::size_t a = 0; a < points && definitional; ++a)
        for (std::size_t b = 0; b < points && definitional; ++b)
          if ((a & ~b) == 0 && v[a] > v[b]) definitional = false;
      REQUIRE(validate_semicoherent(TruthTable(n, v)).ok() == definitional);
    }
  }
}

TEST_CASE("zeta_transform") {
  SUBCASE("three-path chain simple form") {
    const TruthTable t = zeta_transform(chain_form());
    CHECK(t[SubsetMask::of({1, 2})]);
    CHECK_FALSE(t[SubsetMask::of({1, 3})]);
    CHECK(t[SubsetMask::full(4)]);
    CHECK(t == chain_table());
  }
  SUBCASE("zero form gives the all-zero table, which fails validation") {
    const TruthTable t = zeta_transform(MultilinearForm(3));
    CHECK(t.to_bit_string() == "00000000");
    CHECK_FALSE(validate_semicoherent(t).ok());
  }
  SUBCASE("bridge simple form gives the coproduct table") {
    CHECK(zeta_transform(bridge_form()) == bridge_table());
    CHECK(bridge_table().to_bit_string() == "00000000010101110011011101110111");
  }
  SUBCASE("values outside {0,1} are rejected with the first subset") {
    const MultilinearForm bad = form(2, {{{1}, 1}, {{2}, 1}});
    CHECK_THROWS_WITH_AS(zeta_transform(bad),
                         "not a structure function: value 2 at {1,2}",
                         NotStructureFunctionError);
  }
  SUBCASE("overflow is detected, not wrapped") {
    const Coefficient big = std::numeric_limits<Coefficient>::max();
    const MultilinearForm f = form(2, {{{1}, big}, {{1, 2}, big}});
    CHECK_THROWS_AS(zeta_transform(f), OverflowError);
  }
  SUBCASE("max-n is enforced") {
    Limits limits;
    limits.max_n = 3;
    CHECK_THROWS_AS(zeta_transform(chain_form(), limits), CapacityError);
  }
}

TEST_CASE("mobius_transform") {
  SUBCASE("bridge coefficients") { CHECK(mobius_transform(bridge_table()) == bridge_form()); }
  SUBCASE("identity system") {
    CHECK(mobius_transform(TruthTable::from_bit_string(1, "01")) ==
          form(1, {{{1}, 1}}));
  }
  SUBCASE("every semicoherent n = 3 table round-trips") {
    const auto all = oracle::enumerate_semicoherent(3);
    CHECK(all.size() == 18);
    for (const TruthTable& t : all) CHECK(zeta_transform(mobius_transform(t)) == t);
  }
  SUBCASE("any 0/1 table round-trips, semicoherent or not") {
    for (std::uint32_t code = 0; code < 256; ++code) {
      std::vector<std::uint8_t> v(8);
      for (int m = 0; m < 8; ++m) v[m] = (code >> m) & 1U;
      const TruthTable t(3, v);
      const MultilinearForm f = mobius_transform(t);
      CHECK(zeta_transform(f) == t);
      CHECK(f.coefficient(SubsetMask{}) == v[0]);
      Coefficient total = 0;
      for (const auto& [mask, c] : f.terms()) total += c;
      CHECK(total == v[7]);
    }
  }
}

TEST_CASE("MultilinearForm drops zeros and rejects foreign components") {
  const MultilinearForm f = form(3, {{{1}, 0}, {{2}, 3}});
  CHECK(f.size() == 1);
  CHECK(f.coefficient(SubsetMask::of({2})) == 3);
  CHECK(f.coefficient(SubsetMask::of({1})) == 0);
  MultilinearForm::Terms terms;
  terms.emplace(SubsetMask::of({4}), 1);
  CHECK_THROWS_AS(MultilinearForm(3, terms), InputError);
}

TEST_CASE("Limits validation") {
  Limits ok;
  CHECK_NOTHROW(ok.validate());
  Limits too_big;
  too_big.max_n = kMaxComponents + 1;
  CHECK_THROWS_AS(too_big.validate(), InputError);
  Limits zero_r;
  zero_r.max_r = 0;
  CHECK_THROWS_AS(zero_r.validate(), InputError);
}

TEST_CASE("format_rational reduces") {
  CHECK(format_rational(Rational(4, 6)) == "2/3");
  CHECK(format_rational(Rational(0)) == "0");
  CHECK(format_rational(Rational(-3, 1)) == "-3");
}

TEST_CASE("largest table size is supported") {
  const TruthTable t = TruthTable::from_predicate(
      kMaxComponents, [](SubsetMask a) { return a.contains(1); });
  CHECK(t.size() == (std::size_t{1} << kMaxComponents));
  const MultilinearForm f = mobius_transform(t);
  CHECK(f.size() == 1);
  CHECK(f.coefficient(SubsetMask::of({1})) == 1);
}
