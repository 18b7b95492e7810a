#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace psigroups {

using Element = std::uint16_t;
using OrderSpectrum = std::map<std::uint32_t, std::size_t>;

inline constexpr std::size_t kDefaultMaxOrder = 4096;
inline constexpr std::size_t kHardMaxOrder = 65535;
inline constexpr std::size_t kExhaustiveAssocLimit = 512;

enum class AssocCheck {
  kSkip,        // trusted constructors
  kAuto,        // exhaustive up to kExhaustiveAssocLimit, sampled above
  kExhaustive,  // always O(n^3)
};

// A finite group stored as a dense multiplication table. Element 0 is the
// identity. Immutable after construction; element orders and inverses are
// computed eagerly so a FiniteGroup can be shared across threads.
class FiniteGroup {
 public:
  // Validates shape, identity at 0 and the latin-square property; `assoc`
  // controls how associativity is checked. Throws InvalidTable.
  FiniteGroup(std::string name, std::size_t order, std::vector<Element> table,
              AssocCheck assoc = AssocCheck::kAuto);

  static FiniteGroup trivial();

  std::size_t order() const noexcept { return order_; }
  const std::string& name() const noexcept { return name_; }

  Element mul(Element a, Element b) const noexcept {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element inverse(Element a) const noexcept { return inverses_[a]; }
  // x^k by repeated squaring.
  Element power(Element x, std::uint64_t k) const noexcept;

  std::span<const Element> row(Element a) const noexcept {
    return {table_.data() + static_cast<std::size_t>(a) * order_, order_};
  }
  std::span<const Element> table() const noexcept { return table_; }
  std::span<const std::uint32_t> element_orders() const noexcept {
    return orders_;
  }

  bool operator==(const FiniteGroup& other) const noexcept {
    return order_ == other.order_ && table_ == other.table_;
  }

 private:
  std::string name_;
  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::vector<std::uint32_t> orders_;
};

// Exhaustive or sampled (>= 10 n^2 triples, fixed seed) associativity test.
// Returns the first failing triple description, or an empty string.
std::string find_associativity_failure(std::size_t order,
                                       std::span<const Element> table,
                                       AssocCheck mode);

// A subset of a parent group's elements that is closed under the parent's
// multiplication. Members are strictly increasing and always contain 0.
class Subgroup {
 public:
  Subgroup(std::size_t parent_order, std::vector<Element> members);

  std::size_t parent_order() const noexcept { return parent_order_; }
  std::size_t size() const noexcept { return members_.size(); }
  std::span<const Element> members() const noexcept { return members_; }
  bool contains(Element x) const noexcept {
    return x < mask_.size() && mask_[x] != 0;
  }
  bool is_whole() const noexcept { return members_.size() == parent_order_; }

  bool operator==(const Subgroup& other) const noexcept {
    return parent_order_ == other.parent_order_ && members_ == other.members_;
  }

 private:
  std::size_t parent_order_;
  std::vector<Element> members_;
  std::vector<char> mask_;
};

std::uint32_t element_order(const FiniteGroup& g, std::size_t x);
OrderSpectrum order_spectrum(const FiniteGroup& g);

// Smallest subgroup containing `seed`.
Subgroup closure(const FiniteGroup& g, std::span<const Element> seed);
Subgroup whole_group(const FiniteGroup& g);
bool is_subgroup_set(const FiniteGroup& g, std::span<const Element> members);

bool is_normal(const FiniteGroup& g, const Subgroup& s);

// G/N on cosets; each coset is represented by its minimal element and cosets
// are numbered by ascending representative, so the identity coset is 0.
FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n);

// The subgroup as a standalone group; member k becomes element k.
FiniteGroup restrict_to(const FiniteGroup& g, const Subgroup& s);

}  // namespace psigroups
