#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "psigroups/finite_group.hpp"

namespace psigroups {

// Sum of element orders. 64 bits suffice: psi(G) <= |G| exp(G) <= |G|^2,
// below 2^32 for every representable table.
struct PsiValue {
  std::uint64_t value = 0;
  auto operator<=>(const PsiValue&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, PsiValue v) {
  return os << v.value;
}

struct OmegaLevel {
  std::size_t set_size;       // |{x : x^(p^i) = 1}|
  std::size_t subgroup_size;  // |Omega_i(G)|
  bool set_is_subgroup;
};

// Levels 0..m where exp(G) = p^m; level 0 is the trivial subgroup.
struct OmegaFiltration {
  std::uint64_t p;
  unsigned m;
  std::vector<OmegaLevel> levels;

  std::vector<std::size_t> subgroup_sizes() const;
  std::vector<std::size_t> set_sizes() const;
  bool all_sets_closed() const;
};

// Throws NotPGroup unless |G| = p^n with n >= 1.
std::uint64_t prime_of(const FiniteGroup& g);
std::uint64_t exponent(const FiniteGroup& g);
// log_p(exp(G)).
unsigned exponent_log(const FiniteGroup& g);

std::vector<Element> omega_set(const FiniteGroup& g, unsigned level);
Subgroup omega_subgroup(const FiniteGroup& g, unsigned level);
OmegaFiltration omega_filtration(const FiniteGroup& g);

PsiValue psi_brute(const FiniteGroup& g);
PsiValue psi_subset(const FiniteGroup& g, std::span<const Element> subset);

}  // namespace psigroups
