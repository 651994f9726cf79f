#pragma once

#include <cstddef>
#include <span>

#include "semico/core.hpp"

namespace semico::detail {

/// Calls visit(union, sign) once for every nonempty subfamily B of
/// `members`, with sign = (-1)^{|B|-1}.
template <typename Visit>
void for_each_subfamily(std::span<const SubsetMask> members, Visit&& visit) {
  auto rec = [&](auto& self, std::size_t start, SubsetMask acc,
                 int sign) -> void {
    for (std::size_t j = start; j < members.size(); ++j) {
      const SubsetMask next = acc | members[j];
      visit(next, sign);
      self(self, j + 1, next, -sign);
    }
  };
  rec(rec, 0, SubsetMask{}, 1);
}

}  // namespace semico::detail
