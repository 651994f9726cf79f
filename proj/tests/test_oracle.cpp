#include <doctest.h>

#include <fstream>
#include <map>
#include <sstream>

#include "named_systems.hpp"
#include "semico/oracle.hpp"

using namespace semico;
using namespace semico::testing;

namespace {

std::map<int, std::size_t> read_census() {
  std::ifstream in(SEMICO_GOLDEN_DIR "/census.txt");
  REQUIRE(in);
  std::map<int, std::size_t> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    int n = 0;
    std::size_t count = 0;
    fields >> n >> count;
    out[n] = count;
  }
  return out;
}

}  // namespace

TEST_CASE("census matches the recorded counts") {
  const auto census = read_census();
  REQUIRE(census.size() == 4);
  for (const auto& [n, count] : census)
    CHECK(oracle::enumerate_semicoherent(n).size() == count);
}

TEST_CASE("enumeration of small universes") {
  const auto one = oracle::enumerate_semicoherent(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].to_bit_string() == "01");

  std::vector<std::string> two;
  for (const TruthTable& t : oracle::enumerate_semicoherent(2))
    two.push_back(t.to_bit_string());
  // Ascending when read as a binary number with subset 0 as the low bit:
  // x1x2, x1, x2, x1 or x2.
  CHECK(two == std::vector<std::string>{"0001", "0101", "0011", "0111"});

  CHECK_THROWS_AS(oracle::enumerate_semicoherent(5), CapacityError);
  CHECK_THROWS_AS(oracle::enumerate_semicoherent(0), Error);
}

TEST_CASE("simple form by term expansion") {
  CHECK(oracle::simple_form(bridge_table()) == bridge_form());
  CHECK(oracle::simple_form(chain_table()) == chain_form());
  CHECK(oracle::simple_form(parallel(2)) ==
        form(2, {{{1}, 1}, {{2}, 1}, {{1, 2}, -1}}));
}

TEST_CASE("minimal sets from the definitions") {
  CHECK(oracle::minimal_path_sets(bridge_table()) == bridge_paths());
  CHECK(oracle::minimal_cut_sets(bridge_table()) == bridge_cuts());
  CHECK(oracle::minimal_cut_sets(chain_table()) == chain_cuts());
  CHECK(oracle::minimal_path_sets(oracle::dual_table(chain_table())) ==
        chain_cuts());
}

TEST_CASE("coproduct of paths equals product of cuts") {
  for (std::uint32_t m = 0; m < 32; ++m)
    CHECK(oracle::coproduct_of_paths(bridge_paths(), SubsetMask(m)) ==
          oracle::product_of_cuts(bridge_cuts(), SubsetMask(m)));
  CHECK(oracle::table_from_cuts(bridge_cuts()) == bridge_table());
  CHECK(oracle::table_from_paths(chain_paths()).to_bit_string() ==
        "0001001100011111");
}

TEST_CASE("formations") {
  const auto bridge = oracle::formations(bridge_paths(), SubsetMask::full(5));
  CHECK(bridge.odd == 4);
  CHECK(bridge.even == 2);
  CHECK(bridge.balance() == 2);
  const auto chain = oracle::formations(chain_paths(), SubsetMask::full(4));
  CHECK(chain.odd == 1);
  CHECK(chain.even == 1);
  CHECK(oracle::formations(bridge_paths(), SubsetMask::of({1, 4})).odd == 1);
}

TEST_CASE("small counts and signature") {
  CHECK(oracle::small_counts(bridge_table()) == SmallCounts{0, 2, 0, 2});
  CHECK(oracle::small_counts(chain_table()) == SmallCounts{0, 3, 0, 3});
  CHECK(oracle::signature(bridge_table()).to_string() == "(0, 1/5, 3/5, 1/5, 0)");
  CHECK(oracle::signature(chain_table()).to_string() == "(0, 1/2, 1/2, 0)");
}

TEST_CASE("reliability by the self-descriptive sum") {
  CHECK(oracle::reliability(bridge_table(),
                            std::vector<Rational>(5, Rational(1, 2))) ==
        Rational(1, 2));
  CHECK(oracle::reliability(series(2), exact_point({{1, 2}, {1, 3}})) ==
        Rational(1, 6));
}
