#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "psigroups/finite_group.hpp"

namespace psigroups {

enum class Family : char {
  kCyclic = 'C',
  kDihedral = 'D',
  kQuaternion = 'Q',
  kExtraspecial = 'H',  // order p^3, exponent p
  kModular = 'M',       // <a,b | a^(p^(j-1)) = b^p = 1, b^-1 a b = a^(1+p^(j-2))>
};

// Expression tree for `expr := term ('*' term)*`, `term := letter integer`.
// Products nest to the left.
class GroupExpr {
 public:
  struct Leaf {
    Family family;
    std::uint32_t param;
  };
  struct Product {
    std::shared_ptr<const GroupExpr> lhs;
    std::shared_ptr<const GroupExpr> rhs;
  };

  static GroupExpr leaf(Family family, std::uint32_t param);
  static GroupExpr product(GroupExpr lhs, GroupExpr rhs);

  bool is_leaf() const noexcept { return std::holds_alternative<Leaf>(node_); }
  const Leaf& as_leaf() const { return std::get<Leaf>(node_); }
  const Product& as_product() const { return std::get<Product>(node_); }

  std::size_t leaf_count() const;
  // Canonical text: no whitespace, decimal parameters without leading zeros.
  std::string to_string() const;

 private:
  explicit GroupExpr(std::variant<Leaf, Product> node) : node_(std::move(node)) {}
  std::variant<Leaf, Product> node_;
};

GroupExpr parse_group_expr(std::string_view text);

struct BuildOptions {
  std::size_t max_order = kDefaultMaxOrder;
};

// Throws DomainError on a parameter outside its family's domain or when the
// resulting order exceeds `options.max_order`.
FiniteGroup build_group(const GroupExpr& expr, const BuildOptions& options = {});
FiniteGroup build_group(std::string_view text, const BuildOptions& options = {});

FiniteGroup cyclic_group(std::uint32_t k);
FiniteGroup dihedral_group(std::uint32_t k);
FiniteGroup quaternion_group(std::uint32_t k);
FiniteGroup extraspecial_group(std::uint32_t k);
FiniteGroup modular_group(std::uint32_t k);
// Left factor major: (a, b) has index a * |rhs| + b.
FiniteGroup direct_product(const FiniteGroup& lhs, const FiniteGroup& rhs,
                           std::string name);

}  // namespace psigroups
