#include <algorithm>
#include <set>

#include <json.hpp>

#include "semico/cli.hpp"
#include "semico/transform.hpp"

namespace semico::cli {

namespace {

using nlohmann::json;

const std::set<std::string> kRepresentationKeys = {"paths", "cuts", "table",
                                                   "simple_form"};

std::vector<int> parse_components(const json& value, int n,
                                  const std::string& field,
                                  bool allow_empty) {
  if (!value.is_array())
    throw InputError(field + ": expected a list of component numbers");
  std::vector<int> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const json& c = value[i];
    const std::string where = field + "[" + std::to_string(i) + "]";
    if (!c.is_number_integer())
      throw InputError(where + ": component must be an integer");
    const auto k = c.get<std::int64_t>();
    if (k < 1 || k > n)
      throw InputError(where + ": component " + std::to_string(k) +
                       " outside 1.." + std::to_string(n));
    if (std::find(out.begin(), out.end(), k) != out.end())
      throw InputError(where + ": component " + std::to_string(k) +
                       " repeated");
    out.push_back(static_cast<int>(k));
  }
  if (out.empty() && !allow_empty) throw InputError(field + ": empty set");
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> parse_family(const json& value, int n,
                                           const std::string& key,
                                           const char* noun) {
  if (!value.is_array()) throw InputError(key + ": expected a list of sets");
  if (value.empty())
    throw InputError(key + ": at least one " + noun + " set required");
  std::vector<std::vector<int>> sets;
  for (std::size_t j = 0; j < value.size(); ++j) {
    const std::string field = key + "[" + std::to_string(j) + "]";
    auto set = parse_components(value[j], n, field, false);
    if (std::find(sets.begin(), sets.end(), set) != sets.end())
      throw InputError(field + ": duplicate set");
    sets.push_back(std::move(set));
  }
  return sets;
}

SimpleFormTerms parse_simple_form(const json& value, int n) {
  if (!value.is_array())
    throw InputError("simple_form: expected a list of terms");
  SimpleFormTerms out;
  for (std::size_t j = 0; j < value.size(); ++j) {
    const json& term = value[j];
    const std::string field = "simple_form[" + std::to_string(j) + "]";
    if (!term.is_object())
      throw InputError(field + ": expected {\"subset\": [...], \"coefficient\": k}");
    for (const auto& [key, unused] : term.items())
      if (key != "subset" && key != "coefficient")
        throw InputError(field + ": unknown field \"" + key + "\"");
    if (!term.contains("subset") || !term.contains("coefficient"))
      throw InputError(field + ": needs both \"subset\" and \"coefficient\"");
    if (!term["coefficient"].is_number_integer())
      throw InputError(field + ".coefficient: expected an integer");
    auto subset = parse_components(term["subset"], n, field + ".subset", true);
    for (const auto& [seen, unused] : out.terms)
      if (seen == subset) throw InputError(field + ": duplicate monomial");
    out.terms.emplace_back(std::move(subset),
                           term["coefficient"].get<Coefficient>());
  }
  return out;
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + byte, '\n'));
}

}  // namespace

SystemSpec parse_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError("line " + std::to_string(line_of(text, e.byte)) +
                     ": malformed document (" + e.what() + ")");
  }
  if (!doc.is_object()) throw InputError("document must be a JSON object");

  std::vector<std::string> present;
  for (const auto& [key, unused] : doc.items()) {
    if (kRepresentationKeys.count(key))
      present.push_back(key);
    else if (key != "n" && key != "name")
      throw InputError("unknown field \"" + key + "\"");
  }

  SystemSpec spec;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw InputError("name: expected a string");
    spec.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw InputError("n: required integer component count");
  const auto n = doc["n"].get<std::int64_t>();
  if (n < 1 || n > kMaxComponents)
    throw CapacityError("n: component count " + std::to_string(n) +
                            " outside 1.." + std::to_string(kMaxComponents),
                        kMaxComponents);
  spec.n = static_cast<int>(n);

  if (present.empty())
    throw InputError(
        "one of \"paths\", \"cuts\", \"table\", \"simple_form\" is required");
  if (present.size() > 1)
    throw InputError("exactly one representation allowed, found " +
                     std::to_string(present.size()));

  const std::string& key = present.front();
  const json& value = doc[key];
  if (key == "paths") {
    spec.representation = PathList{parse_family(value, spec.n, key, "path")};
  } else if (key == "cuts") {
    spec.representation = CutList{parse_family(value, spec.n, key, "cut")};
  } else if (key == "table") {
    if (!value.is_string()) throw InputError("table: expected a string");
    std::string bits = value.get<std::string>();
    const std::size_t expected = std::size_t{1} << spec.n;
    if (bits.size() != expected)
      throw InputError("table: length " + std::to_string(bits.size()) +
                       " but n=" + std::to_string(spec.n) + " needs " +
                       std::to_string(expected));
    if (bits.find_first_not_of("01") != std::string::npos)
      throw InputError("table: only '0' and '1' allowed");
    spec.representation = TableBits{std::move(bits)};
  } else {
    spec.representation = parse_simple_form(value, spec.n);
  }
  return spec;
}

TruthTable to_table(const SystemSpec& spec, const Limits& limits) {
  detail::check_n_limit(spec.n, limits);
  const TruthTable table = std::visit(
      [&](const auto& rep) -> TruthTable {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, PathList>) {
          return table_from_paths(SetFamily::from_lists(spec.n, rep.sets),
                                  limits);
        } else if constexpr (std::is_same_v<T, CutList>) {
          return table_from_cuts(SetFamily::from_lists(spec.n, rep.sets),
                                 limits);
        } else if constexpr (std::is_same_v<T, TableBits>) {
          return TruthTable::from_bit_string(spec.n, rep.bits);
        } else {
          MultilinearForm::Terms terms;
          for (const auto& [components, c] : rep.terms)
            terms.emplace(SubsetMask::from_components(components, spec.n), c);
          return zeta_transform(MultilinearForm(spec.n, std::move(terms)),
                                limits);
        }
      },
      spec.representation);
  require_semicoherent(table);
  return table;
}

Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw InputError("not a number: \"" + std::string(text) + "\"");
  };
  if (text.empty()) return fail();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational num = parse_rational(text.substr(0, slash));
    const Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
    return num / den;
  }

  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  BigInt digits = 0;
  BigInt scale = 1;
  bool seen_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (ch == '.' && !seen_point) {
      seen_point = true;
    } else if (ch >= '0' && ch <= '9') {
      digits = digits * 10 + (ch - '0');
      if (seen_point) scale *= 10;
      seen_digit = true;
    } else {
      return fail();
    }
  }
  if (!seen_digit) return fail();
  Rational value(digits, scale);
  return negative ? Rational(-value) : value;
}

}  // namespace semico::cli
