#include "psigroups/psi_engine.hpp"

#include <map>
#include <sstream>

#include "psigroups/cp2.hpp"
#include "psigroups/error.hpp"
#include "psigroups/number.hpp"

namespace psigroups {

namespace {

unsigned log_base(std::uint64_t value, std::uint64_t p) {
  unsigned k = 0;
  while (value > 1) {
    value /= p;
    ++k;
  }
  return k;
}

void require_cp2(const OmegaFiltration& f, const FiniteGroup& g) {
  if (!f.all_sets_closed()) throw NotCp2(g.name() + " is not CP2");
}

}  // namespace

PsiValue psi_top_recursion(const FiniteGroup& g) {
  if (g.order() == 1) return {1};
  const std::uint64_t p = prime_of(g);
  const unsigned m = exponent_log(g);
  const Subgroup mid = omega_subgroup(g, m - 1);
  if (mid.is_whole()) {
    throw Inapplicable("Omega_{m-1}(" + g.name() + ") is the whole group");
  }
  const PsiValue inner = psi_top_recursion(restrict_to(g, mid));
  const std::uint64_t index = g.order() / mid.size();
  return {inner.value + mid.size() * ipow(p, m) * (index - 1)};
}

PsiValue psi_bottom_recursion(const FiniteGroup& g) {
  if (g.order() == 1) return {1};
  if (!is_cp2_omega(g).is_cp2) throw NotCp2(g.name() + " is not CP2");
  const std::uint64_t p = prime_of(g);
  const Subgroup bottom = omega_subgroup(g, 1);
  const unsigned r = log_base(bottom.size(), p);
  const PsiValue rest = psi_bottom_recursion(quotient(g, bottom));
  return {ipow(p, r + 1) * rest.value + 1 - p};
}

PsiValue psi_filtration(const OmegaFiltration& f) {
  if (!f.all_sets_closed()) throw NotCp2("filtration is not CP2");
  std::uint64_t total = 1;
  std::uint64_t pj = 1;
  for (std::size_t j = 1; j < f.levels.size(); ++j) {
    pj *= f.p;
    total += (f.levels[j].subgroup_size - f.levels[j - 1].subgroup_size) * pj;
  }
  return {total};
}

PsiValue psi_filtration(const FiniteGroup& g) {
  const auto f = omega_filtration(g);
  require_cp2(f, g);
  return psi_filtration(f);
}

bool psi_equal_via_omega(const FiniteGroup& p, const FiniteGroup& q) {
  if (p.order() != q.order()) {
    throw Inapplicable("order mismatch: " + std::to_string(p.order()) + " vs " +
                       std::to_string(q.order()));
  }
  if (prime_of(p) != prime_of(q)) throw Inapplicable("prime mismatch");
  const auto fp = omega_filtration(p);
  const auto fq = omega_filtration(q);
  require_cp2(fp, p);
  require_cp2(fq, q);
  return fp.subgroup_sizes() == fq.subgroup_sizes();
}

char relation_symbol(Relation r) {
  switch (r) {
    case Relation::kLess: return '<';
    case Relation::kEqual: return '=';
    case Relation::kGreater: return '>';
  }
  return '?';
}

Relation compare_values(PsiValue a, PsiValue b) {
  if (a < b) return Relation::kLess;
  if (a > b) return Relation::kGreater;
  return Relation::kEqual;
}

const char* theorem_name(Theorem t) {
  switch (t) {
    case Theorem::kNone: return "none";
    case Theorem::kT1_1: return "T1.1";
    case Theorem::kT1_2: return "T1.2";
    case Theorem::kT1_3: return "T1.3";
  }
  return "none";
}

PsiComparison predict_order(const FiniteGroup& p, const FiniteGroup& q) {
  if (p.order() != q.order()) {
    throw Inapplicable("order mismatch: " + std::to_string(p.order()) + " vs " +
                       std::to_string(q.order()));
  }
  const std::uint64_t prime = prime_of(p);
  if (prime_of(q) != prime) throw Inapplicable("prime mismatch");

  PsiComparison c;
  c.psi_p = psi_brute(p);
  c.psi_q = psi_brute(q);
  c.relation = compare_values(c.psi_p, c.psi_q);
  auto log = [&](std::string text, bool passed) {
    c.hypotheses.push_back({std::move(text), passed});
    return passed;
  };
  auto predict = [&](Theorem t, Relation r) {
    c.theorem = t;
    c.predicted = r;
    c.theorem_note = std::string(theorem_name(t)) + " predicts " + relation_symbol(r);
  };

  log("|P| = |Q| = " + std::to_string(p.order()), true);
  const std::uint64_t exp_p = exponent(p);
  const std::uint64_t exp_q = exponent(q);

  if (exp_p != exp_q) {
    const bool p_larger = exp_p > exp_q;
    const FiniteGroup& big = p_larger ? p : q;
    const std::string big_label = p_larger ? "P" : "Q";
    const std::string small_label = p_larger ? "Q" : "P";
    log("exp(" + big_label + ") = " + std::to_string(std::max(exp_p, exp_q)) +
            " > exp(" + small_label + ") = " + std::to_string(std::min(exp_p, exp_q)),
        true);
    const unsigned m = exponent_log(big);
    const bool proper = !omega_subgroup(big, m - 1).is_whole();
    if (log("Omega_{m-1}(" + big_label + ") != " + big_label, proper)) {
      predict(Theorem::kT1_2, p_larger ? Relation::kGreater : Relation::kLess);
    } else {
      c.theorem_note = "T1.2 inapplicable: Omega_{m-1}(" + big_label + ")=" + big_label;
    }
    return c;
  }

  log("exp(P) = exp(Q) = " + std::to_string(exp_p), true);
  const auto fp = omega_filtration(p);
  const auto fq = omega_filtration(q);
  const bool p_cp2 = log("P in CP2", fp.all_sets_closed());
  const bool q_cp2 = log("Q in CP2", fq.all_sets_closed());
  if (!p_cp2 || !q_cp2) {
    c.theorem_note = std::string("T1.3 inapplicable: ") + (p_cp2 ? "Q" : "P") +
                     " not in CP2";
    return c;
  }
  const unsigned m = fp.m;
  for (unsigned level = m + 1; level-- > 0;) {
    const std::size_t sp = fp.levels[level].subgroup_size;
    const std::size_t sq = fq.levels[level].subgroup_size;
    if (sp == sq) continue;
    std::ostringstream os;
    os << "|Omega_i(P)| = |Omega_i(Q)| for i = " << level + 1 << ".." << m;
    log(os.str(), true);
    log("|Omega_" + std::to_string(level) + "(P)| = " + std::to_string(sp) +
            " != " + std::to_string(sq) + " = |Omega_" + std::to_string(level) +
            "(Q)|",
        true);
    c.differing_level = level;
    predict(Theorem::kT1_3, sp < sq ? Relation::kGreater : Relation::kLess);
    return c;
  }
  log("|Omega_i(P)| = |Omega_i(Q)| for all i", true);
  predict(Theorem::kT1_1, Relation::kEqual);
  return c;
}

std::variant<OrderBijection, SpectrumMismatch> order_bijection(
    const FiniteGroup& p, const FiniteGroup& q) {
  if (p.order() != q.order()) {
    throw Inapplicable("size mismatch: " + std::to_string(p.order()) + " vs " +
                       std::to_string(q.order()));
  }
  std::map<std::uint32_t, std::pair<std::vector<Element>, std::vector<Element>>> by_order;
  for (std::size_t x = 0; x < p.order(); ++x) {
    by_order[p.element_orders()[x]].first.push_back(static_cast<Element>(x));
  }
  for (std::size_t y = 0; y < q.order(); ++y) {
    by_order[q.element_orders()[y]].second.push_back(static_cast<Element>(y));
  }
  OrderBijection result;
  for (const auto& [order, lists] : by_order) {
    if (lists.first.size() != lists.second.size()) {
      return SpectrumMismatch{order, lists.first.size(), lists.second.size()};
    }
    for (std::size_t k = 0; k < lists.first.size(); ++k) {
      result.pairs.emplace_back(lists.first[k], lists.second[k]);
    }
  }
  return result;
}

}  // namespace psigroups
