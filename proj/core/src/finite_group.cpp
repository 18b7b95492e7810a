#include "psigroups/finite_group.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <utility>

#include "psigroups/error.hpp"

namespace psigroups {

namespace {

void check_latin_square(std::size_t n, std::span<const Element> table) {
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  for (std::size_t r = 0; r < n; ++r) {
    ++stamp;
    for (std::size_t c = 0; c < n; ++c) {
      const Element v = table[r * n + c];
      if (v >= n) {
        throw InvalidTable("entry " + std::to_string(v) + " at (" +
                           std::to_string(r) + "," + std::to_string(c) +
                           ") out of range");
      }
      if (seen[v] == stamp) {
        throw InvalidTable("not a latin square: row " + std::to_string(r) +
                           " repeats " + std::to_string(v));
      }
      seen[v] = stamp;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    ++stamp;
    for (std::size_t r = 0; r < n; ++r) {
      const Element v = table[r * n + c];
      if (seen[v] == stamp) {
        throw InvalidTable("not a latin square: column " + std::to_string(c) +
                           " repeats " + std::to_string(v));
      }
      seen[v] = stamp;
    }
  }
}

void check_identity(std::size_t n, std::span<const Element> table) {
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i] != i || table[i * n] != i) {
      throw InvalidTable("identity is not at index 0");
    }
  }
}

}  // namespace

std::string find_associativity_failure(std::size_t n,
                                       std::span<const Element> table,
                                       AssocCheck mode) {
  if (mode == AssocCheck::kSkip) return {};
  auto at = [&](std::size_t a, std::size_t b) -> std::size_t {
    return table[a * n + b];
  };
  auto describe = [](std::size_t a, std::size_t b, std::size_t c) {
    std::ostringstream os;
    os << "associativity fails for (" << a << "," << b << "," << c << ")";
    return os.str();
  };
  if (mode == AssocCheck::kExhaustive || n <= kExhaustiveAssocLimit) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t ab = at(a, b);
        const Element* row_ab = table.data() + ab * n;
        const Element* row_b = table.data() + b * n;
        const Element* row_a = table.data() + a * n;
        for (std::size_t c = 0; c < n; ++c) {
          if (row_ab[c] != row_a[row_b[c]]) return describe(a, b, c);
        }
      }
    }
    return {};
  }
  std::mt19937_64 rng(0x5eed'0f'91u);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  const std::size_t samples = 10 * n * n;
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
    if (at(at(a, b), c) != at(a, at(b, c))) return describe(a, b, c);
  }
  return {};
}

FiniteGroup::FiniteGroup(std::string name, std::size_t order,
                         std::vector<Element> table, AssocCheck assoc)
    : name_(std::move(name)), order_(order), table_(std::move(table)) {
  if (order_ == 0) throw InvalidTable("group order must be positive");
  if (order_ > kHardMaxOrder) {
    throw InvalidTable("group order " + std::to_string(order_) +
                       " exceeds the representable maximum");
  }
  if (table_.size() != order_ * order_) {
    throw InvalidTable("table has " + std::to_string(table_.size()) +
                       " entries, expected " + std::to_string(order_ * order_));
  }
  check_latin_square(order_, table_);
  check_identity(order_, table_);
  if (auto failure = find_associativity_failure(order_, table_, assoc);
      !failure.empty()) {
    throw InvalidTable(failure);
  }

  inverses_.resize(order_);
  for (std::size_t a = 0; a < order_; ++a) {
    const auto r = row(static_cast<Element>(a));
    inverses_[a] = static_cast<Element>(std::find(r.begin(), r.end(), 0) - r.begin());
  }

  orders_.assign(order_, 0);
  orders_[0] = 1;
  for (std::size_t x = 1; x < order_; ++x) {
    if (orders_[x] != 0) continue;
    Element acc = static_cast<Element>(x);
    std::uint32_t k = 1;
    while (acc != 0) {
      acc = mul(acc, static_cast<Element>(x));
      if (++k > order_) {
        throw InvalidTable("element " + std::to_string(x) +
                           " does not reach the identity");
      }
    }
    orders_[x] = k;
  }
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup("C1", 1, {0}); }

Element FiniteGroup::power(Element x, std::uint64_t k) const noexcept {
  Element result = 0;
  Element base = x;
  while (k != 0) {
    if (k & 1u) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Subgroup::Subgroup(std::size_t parent_order, std::vector<Element> members)
    : parent_order_(parent_order), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty() || members_.front() != 0) {
    throw InvalidTable("subgroup must contain the identity");
  }
  if (members_.back() >= parent_order_) {
    throw IndexOutOfRange("subgroup member out of range");
  }
  if (parent_order_ % members_.size() != 0) {
    throw InvalidTable("subgroup size " + std::to_string(members_.size()) +
                       " does not divide " + std::to_string(parent_order_));
  }
  mask_.assign(parent_order_, 0);
  for (Element m : members_) mask_[m] = 1;
}

std::uint32_t element_order(const FiniteGroup& g, std::size_t x) {
  if (x >= g.order()) {
    throw IndexOutOfRange("element " + std::to_string(x) + " out of range for " +
                          g.name());
  }
  return g.element_orders()[x];
}

OrderSpectrum order_spectrum(const FiniteGroup& g) {
  OrderSpectrum spectrum;
  for (std::uint32_t o : g.element_orders()) ++spectrum[o];
  return spectrum;
}

Subgroup closure(const FiniteGroup& g, std::span<const Element> seed) {
  const std::size_t n = g.order();
  for (Element s : seed) {
    if (s >= n) {
      throw IndexOutOfRange("seed element " + std::to_string(s) +
                            " out of range for " + g.name());
    }
  }
  std::vector<char> in(n, 0);
  std::vector<Element> members{0};
  in[0] = 1;
  std::vector<Element> gens;
  // Each accepted generator at least doubles the subgroup, so the generator
  // list stays logarithmic in n.
  for (Element s : seed) {
    if (in[s]) continue;
    gens.push_back(s);
    std::size_t head = 0;
    std::vector<Element> queue = members;
    while (head < queue.size()) {
      const Element x = queue[head++];
      for (Element gen : gens) {
        for (Element y : {g.mul(x, gen), g.mul(x, g.inverse(gen))}) {
          if (!in[y]) {
            in[y] = 1;
            members.push_back(y);
            queue.push_back(y);
          }
        }
      }
    }
  }
  return Subgroup(n, std::move(members));
}

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<Element> all(g.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Element>(i);
  return Subgroup(g.order(), std::move(all));
}

bool is_subgroup_set(const FiniteGroup& g, std::span<const Element> members) {
  std::vector<char> in(g.order(), 0);
  for (Element m : members) in[m] = 1;
  if (!in[0]) return false;
  for (Element a : members) {
    for (Element b : members) {
      if (!in[g.mul(a, b)]) return false;
    }
  }
  return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& s) {
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto gx = static_cast<Element>(x);
    const Element gx_inv = g.inverse(gx);
    for (Element m : s.members()) {
      if (!s.contains(g.mul(g.mul(gx, m), gx_inv))) return false;
    }
  }
  return true;
}

FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n) {
  if (n.parent_order() != g.order()) {
    throw InvalidTable("subgroup does not belong to " + g.name());
  }
  if (!is_normal(g, n)) {
    throw NotNormal("subgroup of order " + std::to_string(n.size()) +
                    " is not normal in " + g.name());
  }
  const std::size_t size = g.order();
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset_of(size, kUnassigned);
  std::vector<Element> reps;
  // Ascending scan: the first unseen element is the minimal member of its coset.
  for (std::size_t x = 0; x < size; ++x) {
    if (coset_of[x] != kUnassigned) continue;
    const std::size_t id = reps.size();
    reps.push_back(static_cast<Element>(x));
    for (Element m : n.members()) coset_of[g.mul(static_cast<Element>(x), m)] = id;
  }
  const std::size_t q = reps.size();
  std::vector<Element> table(q * q);
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      table[a * q + b] = static_cast<Element>(coset_of[g.mul(reps[a], reps[b])]);
    }
  }
  return FiniteGroup(g.name() + "/N" + std::to_string(n.size()), q,
                     std::move(table), AssocCheck::kSkip);
}

FiniteGroup restrict_to(const FiniteGroup& g, const Subgroup& s) {
  if (s.parent_order() != g.order()) {
    throw InvalidTable("subgroup does not belong to " + g.name());
  }
  const auto members = s.members();
  std::vector<Element> local(g.order(), 0);
  for (std::size_t k = 0; k < members.size(); ++k) {
    local[members[k]] = static_cast<Element>(k);
  }
  const std::size_t m = members.size();
  std::vector<Element> table(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const Element prod = g.mul(members[a], members[b]);
      if (!s.contains(prod)) throw InvalidTable("subset is not closed");
      table[a * m + b] = local[prod];
    }
  }
  return FiniteGroup(g.name() + "|S" + std::to_string(m), m, std::move(table),
                     AssocCheck::kSkip);
}

}  // namespace psigroups
