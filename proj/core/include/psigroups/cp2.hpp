#pragma once

#include <cstdint>
#include <optional>

#include "psigroups/finite_group.hpp"

namespace psigroups {

enum class Cp2Method { kPairwise, kOmegaCriterion };

// A pair violating o(xy) <= max(o(x), o(y)).
struct Cp2Witness {
  Element x;
  Element y;
  std::uint32_t order_x;
  std::uint32_t order_y;
  std::uint32_t order_xy;
};

struct Cp2Report {
  bool is_cp2;
  Cp2Method method;
  std::optional<Cp2Witness> witness;      // pairwise failures only
  std::optional<unsigned> failing_level;  // omega-criterion failures only
};

// Definitional O(n^2) test over all ordered pairs; works for any finite
// group. The witness is the lexicographically first failing (x, y).
Cp2Report is_cp2_pairwise(const FiniteGroup& g);

// p-groups only: CP2 iff every Omega-set is already a subgroup. Reports the
// lowest level where the set is not closed.
Cp2Report is_cp2_omega(const FiniteGroup& g);

}  // namespace psigroups
