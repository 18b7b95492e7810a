#include "psigroups/expr.hpp"

#include <cctype>
#include <limits>
#include <utility>

#include "psigroups/error.hpp"
#include "psigroups/number.hpp"

namespace psigroups {

GroupExpr GroupExpr::leaf(Family family, std::uint32_t param) {
  return GroupExpr(Leaf{family, param});
}

GroupExpr GroupExpr::product(GroupExpr lhs, GroupExpr rhs) {
  return GroupExpr(Product{std::make_shared<const GroupExpr>(std::move(lhs)),
                           std::make_shared<const GroupExpr>(std::move(rhs))});
}

std::size_t GroupExpr::leaf_count() const {
  if (is_leaf()) return 1;
  return as_product().lhs->leaf_count() + as_product().rhs->leaf_count();
}

std::string GroupExpr::to_string() const {
  if (is_leaf()) {
    const auto& l = as_leaf();
    return std::string(1, static_cast<char>(l.family)) + std::to_string(l.param);
  }
  return as_product().lhs->to_string() + "*" + as_product().rhs->to_string();
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  GroupExpr parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    GroupExpr result = term();
    for (;;) {
      skip_space();
      if (pos_ == text_.size()) return result;
      if (text_[pos_] != '*') {
        throw ParseError(std::string("unexpected character '") + text_[pos_] +
                             "'",
                         pos_);
      }
      ++pos_;
      result = GroupExpr::product(std::move(result), term());
    }
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  GroupExpr term() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("expected a group term", pos_);
    const char letter = text_[pos_];
    Family family;
    switch (letter) {
      case 'C': family = Family::kCyclic; break;
      case 'D': family = Family::kDihedral; break;
      case 'Q': family = Family::kQuaternion; break;
      case 'H': family = Family::kExtraspecial; break;
      case 'M': family = Family::kModular; break;
      default:
        if (std::isalpha(static_cast<unsigned char>(letter))) {
          throw ParseError(std::string("unknown constructor '") + letter + "'",
                           pos_);
        }
        throw ParseError(std::string("expected a constructor letter, got '") +
                             letter + "'",
                         pos_);
    }
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (value > std::numeric_limits<std::uint32_t>::max()) {
        throw ParseError("integer overflow", start);
      }
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected an integer", pos_);
    if (value == 0) throw ParseError("integer must be at least 1", start);
    return GroupExpr::leaf(family, static_cast<std::uint32_t>(value));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::uint64_t expr_order(const GroupExpr& e, std::uint64_t limit) {
  if (e.is_leaf()) return e.as_leaf().param;
  const std::uint64_t a = expr_order(*e.as_product().lhs, limit);
  const std::uint64_t b = expr_order(*e.as_product().rhs, limit);
  // Saturate above the limit; the caller only compares against it.
  if (a > limit || b > limit || a * b > limit) return limit + 1;
  return a * b;
}

std::vector<Element> make_table(std::size_t n) { return std::vector<Element>(n * n); }

FiniteGroup build_node(const GroupExpr& e) {
  if (!e.is_leaf()) {
    return direct_product(build_node(*e.as_product().lhs),
                          build_node(*e.as_product().rhs), e.to_string());
  }
  const auto& l = e.as_leaf();
  switch (l.family) {
    case Family::kCyclic: return cyclic_group(l.param);
    case Family::kDihedral: return dihedral_group(l.param);
    case Family::kQuaternion: return quaternion_group(l.param);
    case Family::kExtraspecial: return extraspecial_group(l.param);
    case Family::kModular: return modular_group(l.param);
  }
  throw DomainError("unknown family");
}

void check_small(std::uint32_t k, const char* letter) {
  if (k > kHardMaxOrder) {
    throw DomainError(std::string(letter) + std::to_string(k) +
                      ": order exceeds the representable maximum");
  }
}

}  // namespace

GroupExpr parse_group_expr(std::string_view text) {
  return ExprParser(text).parse();
}

FiniteGroup cyclic_group(std::uint32_t k) {
  if (k < 1) throw DomainError("C k requires k >= 1");
  check_small(k, "C");
  auto table = make_table(k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) table[a * k + b] = static_cast<Element>((a + b) % k);
  }
  return FiniteGroup("C" + std::to_string(k), k, std::move(table), AssocCheck::kSkip);
}

FiniteGroup dihedral_group(std::uint32_t k) {
  if (k < 4 || k % 2 != 0) {
    throw DomainError("D" + std::to_string(k) + ": D k requires k even and k >= 4");
  }
  check_small(k, "D");
  // Index e*n + i is s^e r^i; r^i s = s r^-i.
  const std::size_t n = k / 2;
  auto table = make_table(k);
  for (std::size_t x = 0; x < k; ++x) {
    const std::size_t e1 = x / n, i = x % n;
    for (std::size_t y = 0; y < k; ++y) {
      const std::size_t e2 = y / n, j = y % n;
      const std::size_t rot = ((e2 ? n - i : i) + j) % n;
      table[x * k + y] = static_cast<Element>(((e1 + e2) % 2) * n + rot);
    }
  }
  return FiniteGroup("D" + std::to_string(k), k, std::move(table), AssocCheck::kSkip);
}

FiniteGroup quaternion_group(std::uint32_t k) {
  const auto pp = as_prime_power(k);
  if (!pp || pp->prime != 2 || pp->exponent < 3) {
    throw DomainError("Q" + std::to_string(k) +
                      ": Q k requires k = 2^j with j >= 3");
  }
  check_small(k, "Q");
  // Index e*n + i is a^i b^e with a^n = 1, b^2 = a^(n/2), b a b^-1 = a^-1.
  const std::size_t n = k / 2;
  auto table = make_table(k);
  for (std::size_t x = 0; x < k; ++x) {
    const std::size_t e1 = x / n, i = x % n;
    for (std::size_t y = 0; y < k; ++y) {
      const std::size_t e2 = y / n, j = y % n;
      std::size_t rot = (i + (e1 ? n - j : j)) % n;
      std::size_t e = e1 + e2;
      if (e == 2) {
        rot = (rot + n / 2) % n;
        e = 0;
      }
      table[x * k + y] = static_cast<Element>(e * n + rot);
    }
  }
  return FiniteGroup("Q" + std::to_string(k), k, std::move(table), AssocCheck::kSkip);
}

FiniteGroup extraspecial_group(std::uint32_t k) {
  const auto pp = as_prime_power(k);
  if (!pp || pp->prime == 2 || pp->exponent != 3) {
    throw DomainError("H" + std::to_string(k) +
                      ": H k requires k = p^3 for an odd prime p");
  }
  check_small(k, "H");
  // Heisenberg group mod p: (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x y').
  const std::size_t p = pp->prime;
  auto table = make_table(k);
  for (std::size_t u = 0; u < k; ++u) {
    const std::size_t x1 = u / (p * p), y1 = (u / p) % p, z1 = u % p;
    for (std::size_t v = 0; v < k; ++v) {
      const std::size_t x2 = v / (p * p), y2 = (v / p) % p, z2 = v % p;
      const std::size_t x = (x1 + x2) % p, y = (y1 + y2) % p;
      const std::size_t z = (z1 + z2 + x1 * y2) % p;
      table[u * k + v] = static_cast<Element>(x * p * p + y * p + z);
    }
  }
  return FiniteGroup("H" + std::to_string(k), k, std::move(table), AssocCheck::kSkip);
}

FiniteGroup modular_group(std::uint32_t k) {
  const auto pp = as_prime_power(k);
  if (!pp || pp->exponent < 3) {
    throw DomainError("M" + std::to_string(k) +
                      ": M k requires k = p^j with j >= 3");
  }
  check_small(k, "M");
  const std::size_t p = pp->prime;
  const std::size_t n = k / p;  // order of a
  const std::size_t r = 1 + n / p;
  // b a b^-1 = a^s with s = r^-1 mod n.
  std::size_t s = 1;
  while ((r * s) % n != 1) ++s;
  std::vector<std::size_t> s_pow(p, 1);
  for (std::size_t e = 1; e < p; ++e) s_pow[e] = (s_pow[e - 1] * s) % n;
  // Index e*n + i is a^i b^e.
  auto table = make_table(k);
  for (std::size_t x = 0; x < k; ++x) {
    const std::size_t e1 = x / n, i = x % n;
    for (std::size_t y = 0; y < k; ++y) {
      const std::size_t e2 = y / n, j = y % n;
      const std::size_t rot = (i + j * s_pow[e1]) % n;
      table[x * k + y] = static_cast<Element>(((e1 + e2) % p) * n + rot);
    }
  }
  return FiniteGroup("M" + std::to_string(k), k, std::move(table), AssocCheck::kSkip);
}

FiniteGroup direct_product(const FiniteGroup& lhs, const FiniteGroup& rhs,
                           std::string name) {
  const std::size_t a = lhs.order(), b = rhs.order();
  if (a * b > kHardMaxOrder) {
    throw DomainError("direct product order exceeds the representable maximum");
  }
  const std::size_t n = a * b;
  auto table = make_table(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto xa = static_cast<Element>(x / b), xb = static_cast<Element>(x % b);
    Element* out = table.data() + x * n;
    for (std::size_t ya = 0; ya < a; ++ya) {
      const std::size_t base = static_cast<std::size_t>(lhs.mul(xa, static_cast<Element>(ya))) * b;
      const auto rrow = rhs.row(xb);
      for (std::size_t yb = 0; yb < b; ++yb) {
        out[ya * b + yb] = static_cast<Element>(base + rrow[yb]);
      }
    }
  }
  return FiniteGroup(std::move(name), n, std::move(table), AssocCheck::kSkip);
}

FiniteGroup build_group(const GroupExpr& expr, const BuildOptions& options) {
  const std::uint64_t limit = std::min<std::uint64_t>(options.max_order, kHardMaxOrder);
  const std::uint64_t order = expr_order(expr, limit);
  if (order > limit) {
    throw DomainError(expr.to_string() + ": order exceeds the maximum table size " +
                      std::to_string(limit));
  }
  return build_node(expr);
}

FiniteGroup build_group(std::string_view text, const BuildOptions& options) {
  return build_group(parse_group_expr(text), options);
}

}  // namespace psigroups
