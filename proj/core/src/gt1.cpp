#include "psigroups/gt1.hpp"

#include <charconv>

#include "psigroups/error.hpp"

namespace psigroups {

std::string serialize_group(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::string out = "GT1 " + std::to_string(n) + "\n";
  out.reserve(out.size() + n * n * 4);
  for (std::size_t r = 0; r < n; ++r) {
    const auto row = g.row(static_cast<Element>(r));
    for (std::size_t c = 0; c < n; ++c) {
      if (c != 0) out += ' ';
      out += std::to_string(row[c]);
    }
    out += '\n';
  }
  return out;
}

namespace {

// Strict decimal: no sign, no leading '+', at least one digit.
bool parse_index(std::string_view token, std::size_t& value) {
  if (token.empty()) return false;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc() && ptr == end;
}

std::string line_label(std::size_t line) { return "line " + std::to_string(line); }

}  // namespace

FiniteGroup parse_group_table(std::string_view text, std::string name,
                              AssocCheck assoc) {
  std::size_t pos = 0;
  std::size_t line_no = 0;
  auto next_line = [&](std::string_view& line) -> bool {
    if (pos >= text.size()) return false;
    const std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      throw InvalidTable(line_label(line_no + 1) + ": missing LF terminator");
    }
    line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    return true;
  };

  std::string_view line;
  if (!next_line(line)) throw InvalidTable("malformed header: empty input");
  std::size_t n = 0;
  if (line.substr(0, 4) != "GT1 " || !parse_index(line.substr(4), n) || n == 0) {
    throw InvalidTable("malformed header: expected 'GT1 <n>'");
  }
  if (n > kHardMaxOrder) {
    throw InvalidTable("malformed header: order " + std::to_string(n) +
                       " exceeds the representable maximum");
  }

  std::vector<Element> table;
  table.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!next_line(line)) {
      throw InvalidTable("expected " + std::to_string(n) + " rows, got " +
                         std::to_string(r));
    }
    std::size_t count = 0;
    std::size_t start = 0;
    while (true) {
      const std::size_t sp = line.find(' ', start);
      const std::string_view token =
          line.substr(start, sp == std::string_view::npos ? line.size() - start
                                                          : sp - start);
      std::size_t v = 0;
      if (!parse_index(token, v)) {
        throw InvalidTable(line_label(line_no) + ": bad entry '" +
                           std::string(token) + "'");
      }
      if (v >= n) {
        throw InvalidTable(line_label(line_no) + ": entry " + std::to_string(v) +
                           " out of range");
      }
      if (++count > n) break;
      table.push_back(static_cast<Element>(v));
      if (sp == std::string_view::npos) break;
      start = sp + 1;
    }
    if (count != n) {
      throw InvalidTable(line_label(line_no) + ": row length " +
                         std::to_string(count) + ", expected " + std::to_string(n));
    }
  }
  if (pos != text.size()) throw InvalidTable("trailing data after last row");
  return FiniteGroup(std::move(name), n, std::move(table), assoc);
}

}  // namespace psigroups
