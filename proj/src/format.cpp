#include "semico/format.hpp"

#include <cstdlib>
#include <utility>
#include <vector>

namespace semico {

namespace {

// Joins (coefficient, monomial) pairs with explicit signs.
std::string join_terms(
    const std::vector<std::pair<Coefficient, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [c, monomial] = terms[i];
    if (i == 0)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    // Magnitude as unsigned so INT64_MIN prints correctly.
    const std::uint64_t magnitude =
        c < 0 ? ~static_cast<std::uint64_t>(c) + 1 : static_cast<std::uint64_t>(c);
    if (magnitude != 1 || monomial.empty()) out += std::to_string(magnitude);
    out += monomial;
  }
  return out;
}

}  // namespace

std::string format_simple_form(const MultilinearForm& f) {
  std::vector<std::pair<Coefficient, std::string>> terms;
  for (const auto& [mask, c] : f.terms()) {
    std::string monomial;
    for (int i : mask.components()) monomial += "x" + std::to_string(i);
    terms.emplace_back(c, std::move(monomial));
  }
  return join_terms(terms);
}

std::string format_diagonal(const DiagonalPoly& d) {
  std::vector<std::pair<Coefficient, std::string>> terms;
  for (int k = 1; k <= d.n(); ++k) {
    if (d.coefficient(k) == 0) continue;
    terms.emplace_back(d.coefficient(k),
                       k == 1 ? "x" : "x^" + std::to_string(k));
  }
  return join_terms(terms);
}

std::string format_coefficients(const DiagonalPoly& d) {
  std::string out = "(";
  for (int k = 1; k <= d.n(); ++k) {
    if (k > 1) out += ", ";
    out += std::to_string(d.coefficient(k));
  }
  return out + ")";
}

}  // namespace semico
