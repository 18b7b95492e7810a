#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "psigroups/cp2.hpp"
#include "psigroups/finite_group.hpp"
#include "psigroups/omega.hpp"

namespace psigroups {

struct CatalogEntry {
  std::string name;
  FiniteGroup group;
  std::uint64_t prime;
  bool abelian;  // built from C terms only
  OmegaFiltration filtration;
  Cp2Report cp2;  // omega criterion
  PsiValue psi;
};

struct Catalog {
  std::vector<std::uint64_t> primes;
  std::size_t max_order = 0;
  // Sorted by (prime, order, name).
  std::vector<CatalogEntry> entries;

  const CatalogEntry* find(std::string_view name) const;
};

// Computes the cached invariants for `group`. Throws NotPGroup.
CatalogEntry make_entry(FiniteGroup group, bool abelian = false);

// All abelian p-groups of order p^k <= max_order (one per partition of k),
// D and Q 2-groups of order >= 8, H p^3 and M p^j for odd p, the nonabelian
// families times cyclic factors, and for p = 2 with max_order >= 256 the pair
// D16*C2*C2*C2*C2 / C4*C4*C4*C4. Throws DomainError on a non-prime or on
// max_order above `table_limit`.
Catalog build_catalog(std::span<const std::uint64_t> primes,
                      std::size_t max_order,
                      std::size_t table_limit = kDefaultMaxOrder);

// Adds a group (e.g. imported from GT1), keeping the entry order and names
// unique. Throws DomainError on a duplicate name.
void add_to_catalog(Catalog& catalog, FiniteGroup group, bool abelian = false);

// Partitions of k in non-increasing order, lexicographically descending.
std::vector<std::vector<unsigned>> partitions(unsigned k);

// "C<p^a>*C<p^b>*..." for a partition (a, b, ...).
std::string abelian_name(std::uint64_t p, std::span<const unsigned> partition);

}  // namespace psigroups
