#include <doctest.h>

#include "oracles.hpp"
#include "psigroups/cp2.hpp"
#include "psigroups/error.hpp"
#include "psigroups/omega.hpp"
#include "test_support.hpp"

using namespace psigroups;
using test_support::G;

namespace {

// First (x, y) in lexicographic order with o(xy) > max(o(x), o(y)).
std::optional<std::pair<std::size_t, std::size_t>> oracle_witness(const FiniteGroup& g) {
  const auto o = oracle::orders(g.table(), g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t y = 0; y < g.order(); ++y) {
      if (o[oracle::at(g.table(), g.order(), x, y)] > std::max(o[x], o[y])) {
        return std::pair{x, y};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("is_cp2_pairwise") {
  CHECK(is_cp2_pairwise(G("Q8")).is_cp2);
  CHECK(is_cp2_pairwise(G("C2")).is_cp2);
  CHECK(is_cp2_pairwise(G("C1")).is_cp2);

  const auto d8 = is_cp2_pairwise(G("D8"));
  CHECK_FALSE(d8.is_cp2);
  CHECK(d8.method == Cp2Method::kPairwise);
  REQUIRE(d8.witness);
  // s * (s r) = r
  CHECK(d8.witness->x == 4);
  CHECK(d8.witness->y == 5);
  CHECK(d8.witness->order_x == 2);
  CHECK(d8.witness->order_y == 2);
  CHECK(d8.witness->order_xy == 4);
  CHECK_FALSE(d8.failing_level);

  // Works outside p-groups too; coprime orders multiply.
  const auto c6 = is_cp2_pairwise(G("C6"));
  CHECK_FALSE(c6.is_cp2);
  REQUIRE(c6.witness);
  CHECK(c6.witness->order_xy == 6);
  CHECK_FALSE(is_cp2_pairwise(G("D6")).is_cp2);
  CHECK(is_cp2_pairwise(G("C9")).is_cp2);
}

TEST_CASE("is_cp2_pairwise witness matches a brute-force scan") {
  const char* exprs[] = {"D8", "D16", "D6", "D8*C2", "Q16", "H27", "M27", "D10"};
  for (const char* e : exprs) {
    CAPTURE(e);
    const auto g = G(e);
    const auto report = is_cp2_pairwise(g);
    const auto expected = oracle_witness(g);
    CHECK(report.is_cp2 == !expected.has_value());
    if (expected) {
      REQUIRE(report.witness);
      CHECK(report.witness->x == expected->first);
      CHECK(report.witness->y == expected->second);
      CHECK(report.witness->order_xy >
            std::max(report.witness->order_x, report.witness->order_y));
    }
  }
}

TEST_CASE("is_cp2_omega") {
  const auto q8 = is_cp2_omega(G("Q8"));
  CHECK(q8.is_cp2);
  CHECK(q8.method == Cp2Method::kOmegaCriterion);
  CHECK(omega_filtration(G("Q8")).set_sizes() == std::vector<std::size_t>{1, 2, 8});

  const auto d16 = is_cp2_omega(G("D16"));
  CHECK_FALSE(d16.is_cp2);
  REQUIRE(d16.failing_level);
  CHECK(*d16.failing_level == 1);
  const auto level = omega_filtration(G("D16")).levels[*d16.failing_level];
  CHECK(level.set_size == 10);
  CHECK(level.subgroup_size == 16);
  CHECK_FALSE(d16.witness);

  CHECK(is_cp2_omega(G("C9*C3")).is_cp2);
  CHECK(is_cp2_omega(G("H27")).is_cp2);
  CHECK(is_cp2_omega(G("M27")).is_cp2);
  CHECK_THROWS_AS(is_cp2_omega(G("C6")), NotPGroup);
}

TEST_CASE("CP2 criteria agree on every catalog group") {
  for (std::uint64_t p : {2, 3, 5}) {
    for (const auto& entry : test_support::small_catalog(p).entries) {
      CAPTURE(entry.name);
      const bool pairwise = is_cp2_pairwise(entry.group).is_cp2;
      CHECK(pairwise == is_cp2_omega(entry.group).is_cp2);
      if (entry.abelian) CHECK(pairwise);
    }
  }
}

TEST_CASE("CP2 groups obey the max-order law and keep CP2 under Omega_1 quotients") {
  for (std::uint64_t p : {2, 3, 5}) {
    for (const auto& entry : test_support::small_catalog(p).entries) {
      if (!entry.cp2.is_cp2) continue;
      CAPTURE(entry.name);
      const auto& g = entry.group;
      const auto o = g.element_orders();
      bool law = true;
      for (Element x = 0; x < g.order(); ++x) {
        for (Element y = 0; y < g.order(); ++y) {
          if (o[x] != o[y]) law = law && o[g.mul(x, y)] == std::max(o[x], o[y]);
        }
      }
      CHECK(law);
      const auto n = omega_subgroup(g, 1);
      const auto q = quotient(g, n);
      CHECK(is_cp2_pairwise(q).is_cp2);
      const unsigned m = entry.filtration.m;
      for (unsigned i = 0; i < m; ++i) {
        const std::size_t lhs = q.order() == 1 ? 1 : omega_subgroup(q, i).size();
        CHECK(lhs == entry.filtration.levels[i + 1].subgroup_size / n.size());
      }
      for (unsigned i = 1; i < m; ++i) {
        CHECK(is_cp2_pairwise(restrict_to(g, omega_subgroup(g, i))).is_cp2);
      }
    }
  }
}
