#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "psigroups/catalog.hpp"

namespace psigroups {

enum class ReportStatus { kVerified, kViolated, kVacuous };
const char* status_name(ReportStatus s);

struct Violation {
  std::string subject;  // entry name or "P vs Q"
  std::string details;
};

struct TheoremReport {
  TheoremReport(std::string id_, std::string title_)
      : id(std::move(id_)), title(std::move(title_)) {}

  std::string id;
  std::string title;
  std::size_t pairs_checked = 0;
  std::size_t hypothesis_applicable = 0;
  std::vector<Violation> violations;
  // Cases outside the hypotheses where the conclusion fails anyway. These
  // never count as violations.
  std::vector<Violation> findings;

  ReportStatus status() const;
};

// One report per checked property, in a fixed order.
std::vector<TheoremReport> verify_theorems(const Catalog& catalog);

}  // namespace psigroups
