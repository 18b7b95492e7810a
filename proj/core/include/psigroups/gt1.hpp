#pragma once

#include <string>
#include <string_view>

#include "psigroups/finite_group.hpp"

namespace psigroups {

// GT1 text: "GT1 <n>\n" followed by n rows of n space-separated 0-based
// indices, LF line endings, no trailing whitespace.
std::string serialize_group(const FiniteGroup& g);

// Parses and validates GT1 text. Throws InvalidTable on malformed input or a
// table that fails any group axiom.
FiniteGroup parse_group_table(std::string_view text, std::string name = "GT1",
                              AssocCheck assoc = AssocCheck::kAuto);

}  // namespace psigroups
