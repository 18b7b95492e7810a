#include "psigroups/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "psigroups/error.hpp"
#include "psigroups/number.hpp"
#include "psigroups/psi_engine.hpp"

namespace psigroups {

const char* status_name(ReportStatus s) {
  switch (s) {
    case ReportStatus::kVerified: return "verified";
    case ReportStatus::kViolated: return "violated";
    case ReportStatus::kVacuous: return "vacuous";
  }
  return "vacuous";
}

ReportStatus TheoremReport::status() const {
  if (!violations.empty()) return ReportStatus::kViolated;
  if (hypothesis_applicable == 0) return ReportStatus::kVacuous;
  return ReportStatus::kVerified;
}

namespace {

// Per-entry data shared by several suites.
struct Facts {
  const CatalogEntry* entry;
  unsigned m;
  std::uint64_t exp;
  std::vector<Subgroup> omegas;   // levels 0..m
  std::vector<PsiValue> level_psi;  // psi(Omega_i) for i = 0..m

  const FiniteGroup& g() const { return entry->group; }
  const std::string& name() const { return entry->name; }
  bool cp2() const { return entry->cp2.is_cp2; }
  std::size_t omega_size(unsigned i) const {
    return omegas[std::min<std::size_t>(i, m)].size();
  }
  PsiValue psi_at(unsigned i) const { return level_psi[std::min<std::size_t>(i, m)]; }
};

Facts collect(const CatalogEntry& e) {
  Facts f{&e, e.filtration.m, exponent(e.group), {}, {}};
  for (unsigned i = 0; i <= f.m; ++i) {
    f.omegas.push_back(omega_subgroup(e.group, i));
    f.level_psi.push_back(psi_subset(e.group, f.omegas.back().members()));
  }
  return f;
}

std::size_t omega_size_of(const FiniteGroup& g, unsigned i) {
  if (g.order() == 1) return 1;
  return omega_subgroup(g, i).size();
}

std::string pair_name(const Facts& a, const Facts& b) {
  return a.name() + " vs " + b.name();
}

std::string sizes_text(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

// Calls fn(a, b) for every unordered pair of distinct entries of equal order.
void for_each_same_order_pair(const std::vector<Facts>& facts,
                              const std::function<void(const Facts&, const Facts&)>& fn) {
  for (std::size_t i = 0; i < facts.size(); ++i) {
    for (std::size_t j = i + 1; j < facts.size(); ++j) {
      if (facts[i].g().order() == facts[j].g().order() &&
          facts[i].entry->prime == facts[j].entry->prime) {
        fn(facts[i], facts[j]);
      }
    }
  }
}

TheoremReport cp2_agreement(const std::vector<Facts>& facts) {
  TheoremReport r{"cp2-agreement", "pairwise CP2 test agrees with the Omega criterion"};
  for (const auto& f : facts) {
    ++r.pairs_checked;
    ++r.hypothesis_applicable;
    const auto pairwise = is_cp2_pairwise(f.g());
    if (pairwise.is_cp2 != f.cp2()) {
      r.violations.push_back({f.name(), std::string("pairwise=") +
                                            (pairwise.is_cp2 ? "yes" : "no") +
                                            " omega=" + (f.cp2() ? "yes" : "no")});
    }
  }
  return r;
}

TheoremReport max_order_law(const std::vector<Facts>& facts) {
  TheoremReport r{"max-order-law", "CP2: o(x) != o(y) implies o(xy) = max(o(x), o(y))"};
  for (const auto& f : facts) {
    ++r.pairs_checked;
    if (!f.cp2()) continue;
    ++r.hypothesis_applicable;
    const auto orders = f.g().element_orders();
    const std::size_t n = f.g().order();
    for (std::size_t x = 0; x < n; ++x) {
      const auto row = f.g().row(static_cast<Element>(x));
      bool bad = false;
      for (std::size_t y = 0; y < n && !bad; ++y) {
        if (orders[x] == orders[y]) continue;
        if (orders[row[y]] != std::max(orders[x], orders[y])) {
          r.violations.push_back({f.name(), "x=" + std::to_string(x) +
                                                " y=" + std::to_string(y)});
          bad = true;
        }
      }
      if (bad) break;
    }
  }
  return r;
}

TheoremReport quotient_cp2(const std::vector<Facts>& facts) {
  TheoremReport r{"quotient-cp2", "CP2: G/Omega_1(G) is CP2"};
  for (const auto& f : facts) {
    ++r.pairs_checked;
    if (!f.cp2()) continue;
    ++r.hypothesis_applicable;
    const auto q = quotient(f.g(), f.omegas[1]);
    if (!is_cp2_pairwise(q).is_cp2) {
      r.violations.push_back({f.name(), "quotient of order " +
                                            std::to_string(q.order()) + " is not CP2"});
    }
  }
  return r;
}

TheoremReport quotient_omega(const std::vector<Facts>& facts) {
  TheoremReport r{"quotient-omega",
                  "CP2: |Omega_i(G/Omega_1)| = |Omega_{i+1}(G)| / |Omega_1(G)|"};
  for (const auto& f : facts) {
    ++r.pairs_checked;
    if (!f.cp2()) continue;
    ++r.hypothesis_applicable;
    const auto q = quotient(f.g(), f.omegas[1]);
    for (unsigned i = 0; i + 1 <= f.m; ++i) {
      const std::size_t lhs = omega_size_of(q, i);
      const std::size_t rhs = f.omega_size(i + 1) / f.omega_size(1);
      if (lhs != rhs) {
        r.violations.push_back({f.name(), "level " + std::to_string(i) + ": " +
                                              std::to_string(lhs) +
                                              " != " + std::to_string(rhs)});
      }
    }
  }
  return r;
}

TheoremReport omega_subgroups_cp2(const std::vector<Facts>& facts) {
  TheoremReport r{"omega-subgroup-cp2", "CP2: every Omega_i(G) is CP2"};
  for (const auto& f : facts) {
    ++r.pairs_checked;
    if (!f.cp2()) continue;
    ++r.hypothesis_applicable;
    for (unsigned i = 1; i < f.m; ++i) {
      const auto sub = restrict_to(f.g(), f.omegas[i]);
      const auto rep = is_cp2_pairwise(sub);
      if (!rep.is_cp2) {
        r.violations.push_back({f.name(), "Omega_" + std::to_string(i) + " not CP2"});
      }
      if (exponent(sub) != ipow(f.entry->prime, i)) {
        r.violations.push_back({f.name(), "exp(Omega_" + std::to_string(i) +
                                              ") = " + std::to_string(exponent(sub))});
      }
    }
  }
  return r;
}

TheoremReport omega_nesting(const std::vector<Facts>& facts) {
  TheoremReport r{"omega-nesting", "Omega_i(Omega_j(G)) = Omega_i(G) for i <= j"};
  for (const auto& f : facts) {
    ++r.pairs_checked;
    ++r.hypothesis_applicable;
    for (unsigned j = 1; j < f.m; ++j) {
      const auto sub = restrict_to(f.g(), f.omegas[j]);
      const auto members = f.omegas[j].members();
      for (unsigned i = 0; i <= j; ++i) {
        std::vector<Element> lifted;
        if (sub.order() > 1) {
          const auto inner = omega_subgroup(sub, i);
          for (Element x : inner.members()) lifted.push_back(members[x]);
        } else {
          lifted.push_back(0);
        }
        const auto expected = f.omegas[i].members();
        if (!std::equal(lifted.begin(), lifted.end(), expected.begin(), expected.end())) {
          r.violations.push_back({f.name(), "i=" + std::to_string(i) +
                                                " j=" + std::to_string(j)});
        }
      }
    }
  }
  return r;
}

TheoremReport filtration_shape(const std::vector<Facts>& facts) {
  TheoremReport r{"filtration-shape",
                  "Omega filtration bounds; strictly increasing chain for CP2"};
  for (const auto& f : facts) {
    ++r.pairs_checked;
    ++r.hypothesis_applicable;
    const auto& levels = f.entry->filtration.levels;
    std::string problem;
    if (levels.front().set_size != 1 || levels.front().subgroup_size != 1) {
      problem = "level 0 not trivial";
    } else if (levels.back().subgroup_size != f.g().order()) {
      problem = "top level is not the whole group";
    }
    for (std::size_t i = 0; i < levels.size() && problem.empty(); ++i) {
      if (levels[i].set_size > levels[i].subgroup_size ||
          (levels[i].set_size == levels[i].subgroup_size) != levels[i].set_is_subgroup) {
        problem = "set/subgroup mismatch at level " + std::to_string(i);
      } else if (i > 0 && levels[i].subgroup_size < levels[i - 1].subgroup_size) {
        problem = "decreasing at level " + std::to_string(i);
      } else if (i > 0 && f.cp2() &&
                 levels[i].subgroup_size <= levels[i - 1].subgroup_size) {
        problem = "CP2 chain not strict at level " + std::to_string(i);
      }
    }
    if (!problem.empty()) r.violations.push_back({f.name(), problem});
  }
  return r;
}

TheoremReport psi_oracle(const std::vector<Facts>& facts) {
  TheoremReport r{"psi-oracle", "top, bottom and filtration formulas equal psi_brute"};
  for (const auto& f : facts) {
    ++r.pairs_checked;
    ++r.hypothesis_applicable;
    const PsiValue brute = psi_brute(f.g());
    auto expect = [&](const char* method, PsiValue v) {
      if (v != brute) {
        std::ostringstream os;
        os << method << "=" << v << " brute=" << brute;
        r.violations.push_back({f.name(), os.str()});
      }
    };
    try {
      expect("top", psi_top_recursion(f.g()));
    } catch (const Inapplicable&) {
      if (f.cp2()) r.violations.push_back({f.name(), "top recursion inapplicable on CP2"});
    }
    if (f.cp2()) {
      expect("bottom", psi_bottom_recursion(f.g()));
      expect("filtration", psi_filtration(f.g()));
    } else {
      try {
        psi_bottom_recursion(f.g());
        r.violations.push_back({f.name(), "bottom recursion accepted a non-CP2 group"});
      } catch (const NotCp2&) {
      }
      try {
        psi_filtration(f.g());
        r.violations.push_back({f.name(), "filtration formula accepted a non-CP2 group"});
      } catch (const NotCp2&) {
      }
    }
  }
  return r;
}

TheoremReport psi_mod_p(const std::vector<Facts>& facts) {
  TheoremReport r{"psi-mod-p", "psi(G) = 1 (mod p)"};
  for (const auto& f : facts) {
    ++r.pairs_checked;
    ++r.hypothesis_applicable;
    if (f.entry->psi.value % f.entry->prime != 1 % f.entry->prime) {
      r.violations.push_back({f.name(), "psi=" + std::to_string(f.entry->psi.value)});
    }
  }
  return r;
}

TheoremReport omega1_psi(const std::vector<Facts>& facts) {
  TheoremReport r{"omega1-psi", "CP2: psi(Omega_1) = p^(r+1) - p + 1 where |Omega_1| = p^r"};
  for (const auto& f : facts) {
    ++r.pairs_checked;
    if (!f.cp2()) continue;
    ++r.hypothesis_applicable;
    const std::uint64_t p = f.entry->prime;
    const std::uint64_t expected = f.omega_size(1) * p - p + 1;
    if (f.psi_at(1).value != expected) {
      r.violations.push_back({f.name(), "psi(Omega_1)=" + std::to_string(f.psi_at(1).value) +
                                            " expected " + std::to_string(expected)});
    }
  }
  return r;
}

TheoremReport theorem_1_1(const std::vector<Facts>& facts) {
  TheoremReport r{"T1.1", "CP2, same order: psi equal <=> |Omega_i| equal <=> psi(Omega_i) equal"};
  for_each_same_order_pair(facts, [&](const Facts& a, const Facts& b) {
    ++r.pairs_checked;
    const bool psi_eq = a.entry->psi == b.entry->psi;
    const unsigned top = std::max(a.m, b.m);
    bool sizes_eq = true;
    bool level_psi_eq = true;
    for (unsigned i = 0; i <= top; ++i) {
      sizes_eq = sizes_eq && a.omega_size(i) == b.omega_size(i);
      level_psi_eq = level_psi_eq && a.psi_at(i) == b.psi_at(i);
    }
    std::ostringstream detail;
    detail << "psi " << a.entry->psi << "/" << b.entry->psi << " filtrations "
           << sizes_text(a.entry->filtration.subgroup_sizes()) << "/"
           << sizes_text(b.entry->filtration.subgroup_sizes());
    if (!a.cp2() || !b.cp2()) {
      if (psi_eq != sizes_eq || sizes_eq != level_psi_eq) {
        r.findings.push_back({pair_name(a, b), detail.str()});
      }
      return;
    }
    ++r.hypothesis_applicable;
    const bool engine_eq = psi_equal_via_omega(a.g(), b.g());
    if (engine_eq != sizes_eq || psi_eq != sizes_eq || level_psi_eq != sizes_eq) {
      r.violations.push_back({pair_name(a, b), detail.str()});
    }
  });
  return r;
}

// Runs predict_order on each same-order pair in both orientations.
void for_each_prediction(
    const std::vector<Facts>& facts,
    const std::function<void(const Facts&, const Facts&, const PsiComparison&)>& fn) {
  for_each_same_order_pair(facts, [&](const Facts& a, const Facts& b) {
    fn(a, b, predict_order(a.g(), b.g()));
    fn(b, a, predict_order(b.g(), a.g()));
  });
}

TheoremReport theorem_1_2(const std::vector<Facts>& facts) {
  TheoremReport r{"T1.2", "exp(P) > exp(Q) and Omega_{m-1}(P) != P imply psi(P) > psi(Q)"};
  for_each_prediction(facts, [&](const Facts& p, const Facts& q, const PsiComparison& c) {
    if (p.exp <= q.exp) return;
    ++r.pairs_checked;
    std::ostringstream detail;
    detail << "exp " << p.exp << ">" << q.exp << " psi " << c.psi_p << " "
           << relation_symbol(c.relation) << " " << c.psi_q;
    if (c.theorem != Theorem::kT1_2) {
      if (c.relation != Relation::kGreater) {
        r.findings.push_back({pair_name(p, q), detail.str() + "; " + c.theorem_note});
      }
      return;
    }
    ++r.hypothesis_applicable;
    if (c.predicted != Relation::kGreater || c.relation != Relation::kGreater) {
      r.violations.push_back({pair_name(p, q), detail.str()});
    }
  });
  return r;
}

TheoremReport theorem_2_2_bound(const std::vector<Facts>& facts) {
  TheoremReport r{"T2.2-bound", "psi(Q) < p^n p^(m-1) < psi(P) when T1.2 applies"};
  for_each_same_order_pair(facts, [&](const Facts& a, const Facts& b) {
    for (const auto& [p, q] : {std::pair{&a, &b}, std::pair{&b, &a}}) {
      if (p->exp <= q->exp) continue;
      ++r.pairs_checked;
      if (p->omegas[p->m - 1].is_whole()) continue;
      ++r.hypothesis_applicable;
      const std::uint64_t bound = p->g().order() * (p->exp / p->entry->prime);
      if (!(q->entry->psi.value < bound && bound < p->entry->psi.value)) {
        r.violations.push_back({pair_name(*p, *q),
                                "psi(Q)=" + std::to_string(q->entry->psi.value) +
                                    " bound=" + std::to_string(bound) +
                                    " psi(P)=" + std::to_string(p->entry->psi.value)});
      }
    }
  });
  return r;
}

TheoremReport theorem_1_3(const std::vector<Facts>& facts) {
  TheoremReport r{"T1.3",
                  "CP2, same exponent: first differing |Omega_k| (scanning down) decides psi"};
  for_each_same_order_pair(facts, [&](const Facts& a, const Facts& b) {
    if (a.exp != b.exp) return;
    ++r.pairs_checked;
    const auto c = predict_order(a.g(), b.g());
    if (c.theorem != Theorem::kT1_3) return;
    ++r.hypothesis_applicable;
    const unsigned k = *c.differing_level;
    // Orient so that `big` has the smaller Omega_k, hence the larger psi.
    const bool a_big = a.omega_size(k) < b.omega_size(k);
    const Facts& big = a_big ? a : b;
    const Facts& small = a_big ? b : a;
    const std::string subject = pair_name(big, small);
    const Relation want = a_big ? Relation::kGreater : Relation::kLess;
    if (c.predicted != want || c.relation != want) {
      r.violations.push_back({pair_name(a, b), "relation " +
                                                   std::string(1, relation_symbol(c.relation))});
    }
    // Intermediate chain at level k+1 = m-t:
    //   d = psi(O_{k+1}(P)) - psi(O_{k+1}(Q))
    //     = psi(O_k(P)) - psi(O_k(Q)) + p^(k+1) (|O_k(Q)| - |O_k(P)|)
    //     > p^(k+1) (|O_k(Q)| - |O_k(P)|) - psi(O_k(Q)) >= 0.
    const auto p = static_cast<std::int64_t>(big.entry->prime);
    const auto pk1 = static_cast<std::int64_t>(ipow(big.entry->prime, k + 1));
    const auto psi_big_k = static_cast<std::int64_t>(big.psi_at(k).value);
    const auto psi_small_k = static_cast<std::int64_t>(small.psi_at(k).value);
    const auto size_big_k = static_cast<std::int64_t>(big.omega_size(k));
    const auto size_small_k = static_cast<std::int64_t>(small.omega_size(k));
    const std::int64_t d = static_cast<std::int64_t>(big.psi_at(k + 1).value) -
                           static_cast<std::int64_t>(small.psi_at(k + 1).value);
    const std::int64_t via_recursion =
        psi_big_k - psi_small_k + pk1 * (size_small_k - size_big_k);
    const std::int64_t lower = pk1 * (size_small_k - size_big_k) - psi_small_k;
    const std::int64_t floor_term =
        (pk1 / p) * (p - 1) * size_small_k - psi_small_k;
    if (d != via_recursion || !(d > lower) || lower < 0 || floor_term < 0 || !(d > 0)) {
      std::ostringstream os;
      os << "level " << k + 1 << ": d=" << d << " recursion=" << via_recursion
         << " lower=" << lower << " floor=" << floor_term;
      r.violations.push_back({subject, os.str()});
    }
  });
  return r;
}

TheoremReport theorem_1_4(const std::vector<Facts>& facts) {
  TheoremReport r{"T1.4", "CP2, same order: psi equal <=> order-preserving bijection exists"};
  for_each_same_order_pair(facts, [&](const Facts& a, const Facts& b) {
    ++r.pairs_checked;
    const bool psi_eq = a.entry->psi == b.entry->psi;
    const auto result = order_bijection(a.g(), b.g());
    const auto* bij = std::get_if<OrderBijection>(&result);
    if (!a.cp2() || !b.cp2()) {
      if (psi_eq != (bij != nullptr)) {
        r.findings.push_back({pair_name(a, b), psi_eq ? "equal psi, spectra differ"
                                                      : "equal spectra, psi differ"});
      }
      return;
    }
    ++r.hypothesis_applicable;
    if (psi_eq != (bij != nullptr)) {
      r.violations.push_back({pair_name(a, b), bij ? "bijection but psi differ"
                                                   : "psi equal but no bijection"});
      return;
    }
    if (bij == nullptr) return;
    std::vector<char> seen_p(a.g().order(), 0), seen_q(b.g().order(), 0);
    std::uint64_t sum_p = 0, sum_q = 0;
    bool ok = bij->pairs.size() == a.g().order() && a.m == b.m;
    const unsigned m = a.m;
    for (const auto& [x, y] : bij->pairs) {
      const auto ox = a.g().element_orders()[x];
      const auto oy = b.g().element_orders()[y];
      ok = ok && ox == oy && !seen_p[x] && !seen_q[y];
      seen_p[x] = seen_q[y] = 1;
      sum_p += ox;
      sum_q += oy;
      // The proof's split: Omega_{m-1}(P) maps into Omega_{m-1}(Q).
      if (m >= 1 && a.omegas[m - 1].contains(x) != b.omegas[m - 1].contains(y)) {
        ok = false;
      }
    }
    if (!ok || sum_p != a.entry->psi.value || sum_q != b.entry->psi.value) {
      r.violations.push_back({pair_name(a, b), "bijection invalid"});
    }
  });
  return r;
}

TheoremReport abelian_injectivity(const std::vector<Facts>& facts) {
  TheoremReport r{"C2.7", "abelian p-groups of equal order have distinct psi"};
  for_each_same_order_pair(facts, [&](const Facts& a, const Facts& b) {
    if (!a.entry->abelian || !b.entry->abelian) return;
    ++r.pairs_checked;
    ++r.hypothesis_applicable;
    if (a.entry->psi == b.entry->psi) {
      r.violations.push_back({pair_name(a, b), "psi=" + std::to_string(a.entry->psi.value)});
    }
  });
  return r;
}

}  // namespace

std::vector<TheoremReport> verify_theorems(const Catalog& catalog) {
  std::vector<Facts> facts;
  facts.reserve(catalog.entries.size());
  for (const auto& e : catalog.entries) facts.push_back(collect(e));

  std::vector<TheoremReport> reports;
  reports.push_back(cp2_agreement(facts));
  reports.push_back(max_order_law(facts));
  reports.push_back(quotient_cp2(facts));
  reports.push_back(quotient_omega(facts));
  reports.push_back(omega_subgroups_cp2(facts));
  reports.push_back(omega_nesting(facts));
  reports.push_back(filtration_shape(facts));
  reports.push_back(psi_oracle(facts));
  reports.push_back(psi_mod_p(facts));
  reports.push_back(omega1_psi(facts));
  reports.push_back(theorem_1_1(facts));
  reports.push_back(theorem_1_2(facts));
  reports.push_back(theorem_2_2_bound(facts));
  reports.push_back(theorem_1_3(facts));
  reports.push_back(theorem_1_4(facts));
  reports.push_back(abelian_injectivity(facts));
  return reports;
}

}  // namespace psigroups
