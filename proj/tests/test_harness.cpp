#include <doctest.h>

#include <set>
#include <tuple>

#include "psigroups/catalog.hpp"
#include "psigroups/error.hpp"
#include "psigroups/psi_engine.hpp"
#include "psigroups/verify.hpp"
#include "test_support.hpp"

using namespace psigroups;
using test_support::G;

namespace {

Catalog catalog_for(std::uint64_t p, std::size_t max_order) {
  const std::uint64_t primes[] = {p};
  return build_catalog(primes, max_order);
}

std::set<std::string> names_of_order(const Catalog& c, std::size_t order) {
  std::set<std::string> out;
  for (const auto& e : c.entries) {
    if (e.group.order() == order) out.insert(e.name);
  }
  return out;
}

const TheoremReport& report(const std::vector<TheoremReport>& reports, const std::string& id) {
  for (const auto& r : reports) {
    if (r.id == id) return r;
  }
  FAIL("no report " << id);
  return reports.front();
}

}  // namespace

TEST_CASE("partitions") {
  CHECK(partitions(3) == std::vector<std::vector<unsigned>>{{3}, {2, 1}, {1, 1, 1}});
  CHECK(partitions(7).size() == 15);
  CHECK(partitions(8).size() == 22);
  const unsigned part[] = {2, 1, 1};
  CHECK(abelian_name(3, part) == "C9*C3*C3");
}

TEST_CASE("build_catalog: order-27 and order-8 populations") {
  const auto c27 = catalog_for(3, 27);
  CHECK(names_of_order(c27, 27) ==
        std::set<std::string>{"C27", "C9*C3", "C3*C3*C3", "H27", "M27"});
  CHECK(names_of_order(c27, 9) == std::set<std::string>{"C9", "C3*C3"});
  CHECK(c27.entries.size() == 8);

  const auto c8 = catalog_for(2, 8);
  CHECK(names_of_order(c8, 8) ==
        std::set<std::string>{"C8", "C4*C2", "C2*C2*C2", "D8", "Q8"});

  const auto c2 = catalog_for(2, 2);
  REQUIRE(c2.entries.size() == 1);
  CHECK(c2.entries[0].name == "C2");

  const auto big = catalog_for(2, 256);
  CHECK(big.find("D16*C2*C2*C2*C2") != nullptr);
  CHECK(big.find("C4*C4*C4*C4") != nullptr);
  CHECK(big.find("Q256") != nullptr);
  CHECK(catalog_for(2, 128).find("D16*C2*C2*C2*C2") == nullptr);

  const std::uint64_t bad[] = {4};
  CHECK_THROWS_AS(build_catalog(bad, 16), DomainError);
  const std::uint64_t two[] = {2};
  CHECK_THROWS_AS(build_catalog(two, 8192), DomainError);
  CHECK(build_catalog(two, 16, 8192).max_order == 16);
}

TEST_CASE("build_catalog: names unique and cached values fresh") {
  const std::uint64_t primes[] = {2, 3};
  const auto c = build_catalog(primes, 81);
  std::set<std::string> names;
  for (const auto& e : c.entries) {
    CAPTURE(e.name);
    CHECK(names.insert(e.name).second);
    CHECK(e.name == e.group.name());
    CHECK(e.name == parse_group_expr(e.name).to_string());
    CHECK(G(e.name) == e.group);
    CHECK(e.psi == psi_brute(e.group));
    CHECK(e.filtration.subgroup_sizes() == omega_filtration(e.group).subgroup_sizes());
    CHECK(e.filtration.set_sizes() == omega_filtration(e.group).set_sizes());
    CHECK(e.cp2.is_cp2 == is_cp2_omega(e.group).is_cp2);
    CHECK(e.prime == prime_of(e.group));
  }
  for (std::size_t i = 1; i < c.entries.size(); ++i) {
    const auto& a = c.entries[i - 1];
    const auto& b = c.entries[i];
    CHECK(std::tuple(a.prime, a.group.order(), a.name) <
          std::tuple(b.prime, b.group.order(), b.name));
  }
}

TEST_CASE("add_to_catalog") {
  auto c = catalog_for(2, 8);
  const auto klein = G("C2*C2");
  add_to_catalog(c, FiniteGroup("imported", 4,
                                std::vector<Element>(klein.table().begin(), klein.table().end())));
  CHECK(c.find("imported") != nullptr);
  CHECK_THROWS_AS(add_to_catalog(c, G("D8")), DomainError);
  CHECK_THROWS_AS(add_to_catalog(c, G("C6")), NotPGroup);
}

TEST_CASE("verify_theorems: p = 3 up to 27") {
  const auto reports = verify_theorems(catalog_for(3, 27));
  for (const auto& r : reports) {
    CAPTURE(r.id);
    CHECK(r.violations.empty());
    // No two CP2 groups of order <= 27 share an exponent but differ in filtration.
    if (r.id == "T1.3") {
      CHECK(r.status() == ReportStatus::kVacuous);
    } else {
      CHECK(r.status() == ReportStatus::kVerified);
    }
  }
  CHECK(report(reports, "T1.1").hypothesis_applicable > 0);
  const auto eq = predict_order(G("C9*C3"), G("M27"));
  CHECK(eq.psi_p.value == 187);
  CHECK(eq.psi_q.value == 187);
  CHECK(psi_equal_via_omega(G("C9*C3"), G("M27")));
}

TEST_CASE("verify_theorems: p = 2 up to 8") {
  const auto reports = verify_theorems(catalog_for(2, 8));
  for (const auto& r : reports) CHECK(r.status() != ReportStatus::kViolated);
  CHECK(report(reports, "T1.2").hypothesis_applicable > 0);
  const auto c = predict_order(G("C8"), G("D8"));
  CHECK(c.theorem == Theorem::kT1_2);
  CHECK(c.psi_p.value == 43);
  CHECK(c.psi_q.value == 19);
  CHECK(c.relation == Relation::kGreater);
}

TEST_CASE("verify_theorems: empty catalog is vacuous everywhere") {
  const auto reports = verify_theorems(Catalog{});
  CHECK(reports.size() == 16);
  for (const auto& r : reports) {
    CAPTURE(r.id);
    CHECK(r.status() == ReportStatus::kVacuous);
    CHECK(r.pairs_checked == 0);
  }
}

TEST_CASE("TheoremReport status rule") {
  TheoremReport r{"x", "x"};
  CHECK(r.status() == ReportStatus::kVacuous);
  r.hypothesis_applicable = 3;
  CHECK(r.status() == ReportStatus::kVerified);
  r.violations.push_back({"a", "b"});
  CHECK(r.status() == ReportStatus::kViolated);
  r.hypothesis_applicable = 0;
  CHECK(r.status() == ReportStatus::kViolated);
}

TEST_CASE("verify_theorems: the counterexample is a finding, not a violation") {
  const auto reports = verify_theorems(catalog_for(2, 256));
  for (const auto& r : reports) {
    CAPTURE(r.id);
    CHECK(r.violations.empty());
  }
  const auto& t12 = report(reports, "T1.2");
  bool found = false;
  for (const auto& f : t12.findings) {
    found = found || f.subject == "D16*C2*C2*C2*C2 vs C4*C4*C4*C4";
  }
  CHECK(found);
}
