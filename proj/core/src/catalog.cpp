#include "psigroups/catalog.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "psigroups/error.hpp"
#include "psigroups/expr.hpp"
#include "psigroups/number.hpp"

namespace psigroups {

namespace {

void partitions_into(unsigned remaining, unsigned largest,
                     std::vector<unsigned>& current,
                     std::vector<std::vector<unsigned>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (unsigned part = std::min(remaining, largest); part >= 1; --part) {
    current.push_back(part);
    partitions_into(remaining - part, part, current, out);
    current.pop_back();
  }
}

bool entry_less(const CatalogEntry& a, const CatalogEntry& b) {
  return std::forward_as_tuple(a.prime, a.group.order(), a.name) <
         std::forward_as_tuple(b.prime, b.group.order(), b.name);
}

}  // namespace

std::vector<std::vector<unsigned>> partitions(unsigned k) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current;
  partitions_into(k, k, current, out);
  return out;
}

std::string abelian_name(std::uint64_t p, std::span<const unsigned> partition) {
  std::string name;
  for (unsigned part : partition) {
    if (!name.empty()) name += '*';
    name += "C" + std::to_string(ipow(p, part));
  }
  return name;
}

const CatalogEntry* Catalog::find(std::string_view name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

CatalogEntry make_entry(FiniteGroup group, bool abelian) {
  const std::uint64_t p = prime_of(group);
  auto filtration = omega_filtration(group);
  auto cp2 = is_cp2_omega(group);
  const PsiValue psi = psi_brute(group);
  std::string name = group.name();
  return CatalogEntry{std::move(name), std::move(group), p, abelian,
                      std::move(filtration), cp2, psi};
}

void add_to_catalog(Catalog& catalog, FiniteGroup group, bool abelian) {
  if (catalog.find(group.name()) != nullptr) {
    throw DomainError("duplicate catalog entry " + group.name());
  }
  auto entry = make_entry(std::move(group), abelian);
  const auto pos = std::upper_bound(catalog.entries.begin(), catalog.entries.end(),
                                    entry, entry_less);
  catalog.entries.insert(pos, std::move(entry));
}

Catalog build_catalog(std::span<const std::uint64_t> primes, std::size_t max_order,
                      std::size_t table_limit) {
  if (max_order < 1) throw DomainError("max order must be at least 1");
  if (max_order > table_limit) {
    throw DomainError("max order " + std::to_string(max_order) +
                      " exceeds the table limit " + std::to_string(table_limit));
  }
  Catalog catalog;
  catalog.max_order = max_order;
  std::set<std::uint64_t> distinct;
  for (std::uint64_t p : primes) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    distinct.insert(p);
  }
  catalog.primes.assign(distinct.begin(), distinct.end());

  const BuildOptions options{max_order};
  std::set<std::string> seen;
  auto add = [&](const std::string& expr, bool abelian) {
    if (!seen.insert(expr).second) return;
    catalog.entries.push_back(make_entry(build_group(expr, options), abelian));
  };

  for (std::uint64_t p : catalog.primes) {
    unsigned top = 0;
    while (ipow(p, top + 1) <= max_order) ++top;

    for (unsigned k = 1; k <= top; ++k) {
      for (const auto& part : partitions(k)) add(abelian_name(p, part), true);
    }

    std::vector<std::string> nonabelian;
    if (p == 2) {
      for (unsigned k = 3; k <= top; ++k) {
        nonabelian.push_back("D" + std::to_string(ipow(2, k)));
        nonabelian.push_back("Q" + std::to_string(ipow(2, k)));
      }
    } else {
      if (top >= 3) nonabelian.push_back("H" + std::to_string(ipow(p, 3)));
      for (unsigned k = 3; k <= top; ++k) {
        nonabelian.push_back("M" + std::to_string(ipow(p, k)));
      }
    }
    for (const auto& base : nonabelian) {
      add(base, false);
      const std::uint64_t base_order = parse_group_expr(base).as_leaf().param;
      for (unsigned j = 1; base_order * ipow(p, j) <= max_order; ++j) {
        add(base + "*C" + std::to_string(ipow(p, j)), false);
      }
    }

    if (p == 2 && max_order >= 256) {
      add("D16*C2*C2*C2*C2", false);
      add("C4*C4*C4*C4", true);
    }
  }
  std::sort(catalog.entries.begin(), catalog.entries.end(), entry_less);
  return catalog;
}

}  // namespace psigroups
