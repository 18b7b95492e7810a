#include <doctest.h>

#include <optional>
#include <set>

#include "oracles.hpp"
#include "psigroups/cp2.hpp"
#include "psigroups/error.hpp"
#include "psigroups/psi_engine.hpp"
#include "test_support.hpp"

using namespace psigroups;
using test_support::G;

TEST_CASE("psi_top_recursion") {
  // psi(C8) = psi(C4) + 4 * 8 * (2 - 1) = 11 + 32
  REQUIRE(oracle::psi(oracle::cyclic_spectrum(8)) == 43);
  CHECK(psi_top_recursion(G("C8")).value == 43);
  CHECK(psi_top_recursion(G("C4")).value == 11);
  CHECK(psi_top_recursion(FiniteGroup::trivial()).value == 1);
  CHECK_THROWS_AS(psi_top_recursion(G("D16")), Inapplicable);
  CHECK_THROWS_AS(psi_top_recursion(G("C12")), NotPGroup);
}

TEST_CASE("psi_bottom_recursion") {
  CHECK(psi_bottom_recursion(G("C4")).value == 11);
  CHECK(psi_bottom_recursion(G("C3*C3*C3")).value == 79);
  // 1 - 3 + 27 * psi(C3) = 1 - 3 + 27 * 7
  REQUIRE(oracle::psi(oracle::product_spectrum(oracle::cyclic_spectrum(9),
                                               oracle::cyclic_spectrum(3))) == 187);
  CHECK(psi_bottom_recursion(G("C9*C3")).value == 187);
  CHECK(psi_bottom_recursion(FiniteGroup::trivial()).value == 1);
  CHECK_THROWS_AS(psi_bottom_recursion(G("D8")), NotCp2);
}

TEST_CASE("psi_filtration") {
  CHECK(psi_filtration(G("C8")).value == 43);
  const auto c9 = oracle::cyclic_spectrum(9);
  const auto c3 = oracle::cyclic_spectrum(3);
  REQUIRE(oracle::psi(oracle::product_spectrum(c9, c9)) == 673);
  REQUIRE(oracle::psi(oracle::product_spectrum(oracle::product_spectrum(c9, c3), c3)) == 565);
  CHECK(psi_filtration(G("C9*C9")).value == 673);
  CHECK(psi_filtration(G("C9*C3*C3")).value == 565);
  CHECK_THROWS_AS(psi_filtration(G("D16")), NotCp2);
}

TEST_CASE("psi formulas agree with psi_brute on the catalog") {
  for (std::uint64_t p : {2, 3, 5}) {
    for (const auto& entry : test_support::small_catalog(p).entries) {
      CAPTURE(entry.name);
      const auto brute = psi_brute(entry.group);
      std::optional<PsiValue> top;
      try {
        top = psi_top_recursion(entry.group);
      } catch (const Inapplicable&) {
        CHECK_FALSE(entry.cp2.is_cp2);
      }
      if (top) CHECK(*top == brute);
      if (entry.cp2.is_cp2) {
        CHECK(psi_bottom_recursion(entry.group) == brute);
        CHECK(psi_filtration(entry.group) == brute);
      } else {
        CHECK_THROWS_AS(psi_filtration(entry.group), NotCp2);
        CHECK_THROWS_AS(psi_bottom_recursion(entry.group), NotCp2);
      }
    }
  }
}

TEST_CASE("psi_equal_via_omega") {
  REQUIRE(omega_filtration(G("M27")).subgroup_sizes() == std::vector<std::size_t>{1, 9, 27});
  CHECK(psi_equal_via_omega(G("C9*C3"), G("M27")));
  CHECK_FALSE(psi_equal_via_omega(G("C9*C3"), G("C27")));
  CHECK(psi_equal_via_omega(G("H27"), G("H27")));
  CHECK(psi_equal_via_omega(G("C3*C3*C3"), G("H27")));
  CHECK_THROWS_AS(psi_equal_via_omega(G("C9"), G("C27")), Inapplicable);
  CHECK_THROWS_AS(psi_equal_via_omega(G("C8"), G("D8")), NotCp2);
}

TEST_CASE("predict_order: T1.2 applies") {
  REQUIRE(oracle::psi(oracle::cyclic_spectrum(27)) == 547);
  const auto c = predict_order(G("C27"), G("C9*C3"));
  CHECK(c.psi_p.value == 547);
  CHECK(c.psi_q.value == 187);
  CHECK(c.relation == Relation::kGreater);
  REQUIRE(c.predicted);
  CHECK(*c.predicted == Relation::kGreater);
  CHECK(c.theorem == Theorem::kT1_2);
  CHECK(c.theorem_note == "T1.2 predicts >");
  for (const auto& h : c.hypotheses) CHECK(h.passed);

  const auto flipped = predict_order(G("C9*C3"), G("C27"));
  CHECK(flipped.relation == Relation::kLess);
  CHECK(flipped.predicted == Relation::kLess);
  CHECK(flipped.theorem == Theorem::kT1_2);
}

TEST_CASE("predict_order: the counterexample pair has no prediction") {
  const auto c = predict_order(G("D16*C2*C2*C2*C2"), G("C4*C4*C4*C4"));
  CHECK(c.psi_p.value == 959);
  CHECK(c.psi_q.value == 991);
  CHECK(c.relation == Relation::kLess);
  CHECK_FALSE(c.predicted);
  CHECK(c.theorem == Theorem::kNone);
  CHECK(c.theorem_note == "T1.2 inapplicable: Omega_{m-1}(P)=P");
  REQUIRE_FALSE(c.hypotheses.empty());
  CHECK(c.hypotheses.back().description == "Omega_{m-1}(P) != P");
  CHECK_FALSE(c.hypotheses.back().passed);
  CHECK(omega_subgroup(G("D16*C2*C2*C2*C2"), 2).is_whole());
}

TEST_CASE("predict_order: T1.3 and T1.1") {
  const auto c = predict_order(G("C9*C9"), G("C9*C3*C3"));
  CHECK(c.relation == Relation::kGreater);
  CHECK(c.predicted == Relation::kGreater);
  CHECK(c.theorem == Theorem::kT1_3);
  CHECK(c.differing_level == 1u);
  CHECK(c.psi_p.value == 673);
  CHECK(c.psi_q.value == 565);

  const auto eq = predict_order(G("C9*C3"), G("M27"));
  CHECK(eq.theorem == Theorem::kT1_1);
  CHECK(eq.predicted == Relation::kEqual);
  CHECK(eq.relation == Relation::kEqual);
  CHECK(eq.psi_p.value == 187);

  const auto non_cp2 = predict_order(G("D8"), G("Q8"));
  CHECK_FALSE(non_cp2.predicted);
  CHECK(non_cp2.theorem_note == "T1.3 inapplicable: P not in CP2");

  CHECK_THROWS_AS(predict_order(G("C8"), G("C9")), Inapplicable);
  CHECK_THROWS_AS(predict_order(G("C4"), G("C8")), Inapplicable);
}

TEST_CASE("order_bijection") {
  const auto p = G("C3*C3*C3");
  const auto q = G("H27");
  const auto result = order_bijection(p, q);
  const auto* bij = std::get_if<OrderBijection>(&result);
  REQUIRE(bij);
  CHECK(bij->pairs.size() == 27);
  std::set<Element> left, right;
  std::uint64_t sum_p = 0, sum_q = 0;
  for (const auto& [x, y] : bij->pairs) {
    left.insert(x);
    right.insert(y);
    CHECK(element_order(p, x) == element_order(q, y));
    sum_p += element_order(p, x);
    sum_q += element_order(q, y);
  }
  CHECK(left.size() == 27);
  CHECK(right.size() == 27);
  CHECK(sum_p == 79);
  CHECK(sum_q == 79);

  const auto d16 = G("D16");
  const auto self = std::get<OrderBijection>(order_bijection(d16, d16));
  for (const auto& [x, y] : self.pairs) CHECK(x == y);

  const auto miss = order_bijection(G("C4"), G("C2*C2"));
  const auto* mismatch = std::get_if<SpectrumMismatch>(&miss);
  REQUIRE(mismatch);
  // Smallest differing order: one involution in C4, three in C2*C2.
  CHECK(mismatch->order == 2);
  CHECK(mismatch->count_p == 1);
  CHECK(mismatch->count_q == 3);

  CHECK_THROWS_AS(order_bijection(G("C4"), G("C8")), Inapplicable);
}

TEST_CASE("equal psi, equal filtrations and order bijections coincide on CP2 pairs") {
  for (std::uint64_t p : {2, 3, 5}) {
    const auto& entries = test_support::small_catalog(p).entries;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      for (std::size_t j = i + 1; j < entries.size(); ++j) {
        const auto& a = entries[i];
        const auto& b = entries[j];
        if (a.group.order() != b.group.order() || !a.cp2.is_cp2 || !b.cp2.is_cp2) continue;
        CAPTURE(a.name);
        CAPTURE(b.name);
        const bool psi_eq = a.psi == b.psi;
        CHECK(psi_equal_via_omega(a.group, b.group) == psi_eq);
        CHECK(std::holds_alternative<OrderBijection>(order_bijection(a.group, b.group)) ==
              psi_eq);
        const auto c = predict_order(a.group, b.group);
        if (c.predicted) CHECK(*c.predicted == c.relation);
      }
    }
  }
}
