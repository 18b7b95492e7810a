#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "psigroups/finite_group.hpp"
#include "psigroups/omega.hpp"

namespace psigroups {

// Top recursion on M = Omega_{m-1}(G):
//   psi(G) = psi(M) + |M| p^m (|G|/|M| - 1),
// descending through restricted tables to the trivial group. Throws
// Inapplicable as soon as some step has Omega_{m-1} equal to the whole group.
PsiValue psi_top_recursion(const FiniteGroup& g);

// Bottom recursion through quotients by N = Omega_1(G), |N| = p^r:
//   psi(G) = 1 - p + p^(r+1) psi(G/N).
// Every group along the way must be CP2 (throws NotCp2 otherwise).
PsiValue psi_bottom_recursion(const FiniteGroup& g);

// psi(G) = 1 + sum_{j=1..m} (|Omega_j| - |Omega_{j-1}|) p^j, valid for CP2
// p-groups only.
PsiValue psi_filtration(const FiniteGroup& g);
PsiValue psi_filtration(const OmegaFiltration& f);

// Same order, same prime, both CP2: true iff the Omega filtrations have equal
// subgroup sizes at every level.
bool psi_equal_via_omega(const FiniteGroup& p, const FiniteGroup& q);

enum class Relation { kLess, kEqual, kGreater };
char relation_symbol(Relation r);
Relation compare_values(PsiValue a, PsiValue b);

enum class Theorem { kNone, kT1_1, kT1_2, kT1_3 };
const char* theorem_name(Theorem t);

struct Hypothesis {
  std::string description;
  bool passed;
};

struct PsiComparison {
  PsiValue psi_p;
  PsiValue psi_q;
  Relation relation;
  std::optional<Relation> predicted;
  Theorem theorem = Theorem::kNone;
  // "T1.2 predicts >" or the reason the relevant theorem does not apply.
  std::string theorem_note;
  std::vector<Hypothesis> hypotheses;
  // T1.3 only: the level m-t-1 where the filtrations first differ.
  std::optional<unsigned> differing_level;
};

// Throws Inapplicable on order or prime mismatch.
PsiComparison predict_order(const FiniteGroup& p, const FiniteGroup& q);

struct OrderBijection {
  std::vector<std::pair<Element, Element>> pairs;  // (element of P, element of Q)
};

// Smallest element order whose counts differ between the two groups.
struct SpectrumMismatch {
  std::uint32_t order;
  std::size_t count_p;
  std::size_t count_q;
};

// Pairs, for each order value, the ascending element lists of both sides.
// Throws Inapplicable when |P| != |Q|.
std::variant<OrderBijection, SpectrumMismatch> order_bijection(
    const FiniteGroup& p, const FiniteGroup& q);

}  // namespace psigroups
