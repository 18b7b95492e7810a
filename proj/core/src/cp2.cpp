#include "psigroups/cp2.hpp"

#include <algorithm>

#include "psigroups/omega.hpp"

namespace psigroups {

Cp2Report is_cp2_pairwise(const FiniteGroup& g) {
  const auto orders = g.element_orders();
  const std::size_t n = g.order();
  for (std::size_t x = 0; x < n; ++x) {
    const auto row = g.row(static_cast<Element>(x));
    for (std::size_t y = 0; y < n; ++y) {
      const std::uint32_t bound = std::max(orders[x], orders[y]);
      if (orders[row[y]] > bound) {
        return {false, Cp2Method::kPairwise,
                Cp2Witness{static_cast<Element>(x), static_cast<Element>(y),
                           orders[x], orders[y], orders[row[y]]},
                std::nullopt};
      }
    }
  }
  return {true, Cp2Method::kPairwise, std::nullopt, std::nullopt};
}

Cp2Report is_cp2_omega(const FiniteGroup& g) {
  const auto f = omega_filtration(g);
  for (unsigned i = 0; i < f.levels.size(); ++i) {
    if (!f.levels[i].set_is_subgroup) {
      return {false, Cp2Method::kOmegaCriterion, std::nullopt, i};
    }
  }
  return {true, Cp2Method::kOmegaCriterion, std::nullopt, std::nullopt};
}

}  // namespace psigroups
