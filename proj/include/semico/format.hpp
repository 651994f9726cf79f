#pragma once

#include <string>

#include "semico/core.hpp"

namespace semico {

/// "x1x4 + x2x5 - x1x2x3x4 + 2x1x2x3x4x5"; terms by degree, then
/// lexicographically; unit coefficients suppressed; "0" when empty.
std::string format_simple_form(const MultilinearForm& f);

/// "2x^2 + 2x^3 - 5x^4 + 2x^5".
std::string format_diagonal(const DiagonalPoly& d);

/// "(0, 2, 2, -5, 2)".
std::string format_coefficients(const DiagonalPoly& d);

}  // namespace semico
