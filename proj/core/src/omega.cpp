#include "psigroups/omega.hpp"

#include <numeric>

#include "psigroups/error.hpp"
#include "psigroups/number.hpp"

namespace psigroups {

std::vector<std::size_t> OmegaFiltration::subgroup_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& l : levels) out.push_back(l.subgroup_size);
  return out;
}

std::vector<std::size_t> OmegaFiltration::set_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& l : levels) out.push_back(l.set_size);
  return out;
}

bool OmegaFiltration::all_sets_closed() const {
  for (const auto& l : levels) {
    if (!l.set_is_subgroup) return false;
  }
  return true;
}

std::uint64_t prime_of(const FiniteGroup& g) {
  const auto pp = as_prime_power(g.order());
  if (!pp) {
    throw NotPGroup(g.name() + " has order " + std::to_string(g.order()) +
                    ", not a prime power");
  }
  return pp->prime;
}

std::uint64_t exponent(const FiniteGroup& g) {
  std::uint64_t e = 1;
  for (std::uint32_t o : g.element_orders()) e = std::lcm(e, std::uint64_t{o});
  return e;
}

unsigned exponent_log(const FiniteGroup& g) {
  const std::uint64_t p = prime_of(g);
  std::uint64_t e = exponent(g);
  unsigned m = 0;
  while (e > 1) {
    e /= p;
    ++m;
  }
  return m;
}

std::vector<Element> omega_set(const FiniteGroup& g, unsigned level) {
  const std::uint64_t p = prime_of(g);
  // Beyond the exponent every element qualifies; clamp so p^level fits.
  const unsigned m = exponent_log(g);
  const std::uint64_t q = ipow(p, std::min(level, m));
  std::vector<Element> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (g.power(static_cast<Element>(x), q) == 0) out.push_back(static_cast<Element>(x));
  }
  return out;
}

Subgroup omega_subgroup(const FiniteGroup& g, unsigned level) {
  return closure(g, omega_set(g, level));
}

OmegaFiltration omega_filtration(const FiniteGroup& g) {
  OmegaFiltration f{prime_of(g), exponent_log(g), {}};
  for (unsigned i = 0; i <= f.m; ++i) {
    const auto set = omega_set(g, i);
    const auto sub = closure(g, set);
    f.levels.push_back({set.size(), sub.size(), set.size() == sub.size()});
  }
  return f;
}

PsiValue psi_brute(const FiniteGroup& g) {
  PsiValue v;
  for (std::uint32_t o : g.element_orders()) v.value += o;
  return v;
}

PsiValue psi_subset(const FiniteGroup& g, std::span<const Element> subset) {
  PsiValue v;
  for (Element x : subset) v.value += element_order(g, x);
  return v;
}

}  // namespace psigroups
